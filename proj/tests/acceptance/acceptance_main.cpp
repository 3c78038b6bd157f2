// Acceptance criteria: one PASS/FAIL line each, exit status 1 if any fails.
#include <heatansatz/closed_forms.hpp>
#include <heatansatz/csv.hpp>
#include <heatansatz/operators.hpp>
#include <heatansatz/residuals.hpp>
#include <heatansatz/verify.hpp>

#include <oracles.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>

using namespace heatansatz;

namespace
{

struct Outcome {
    bool passed;
    std::string detail;
};

GradedPoly Y(std::string_view text) { return parse_poly(Family::Y, text); }

RationalH two_pole(const Rational& b1 = 0, const Rational& b2 = 1)
{
    return RationalH({MobiusParam(Rational(1), b1), MobiusParam(Rational(1), b2)});
}

AnsatzSpec chain(unsigned n, int d) { return AnsatzSpec::reduced(n, Parity(d), GradedPoly(Family::X, n + 1)); }

std::vector<Rational> ten_times()
{
    std::vector<Rational> out;
    for (int i = 0; i < 10; ++i) {
        out.push_back(oracle::frac(7 * i + 9, 4));
    }
    return out;
}

Outcome annihilation()
{
    const auto start = std::chrono::steady_clock::now();
    const auto dk = compute_Dk(12);
    int bad = 0;
    for (const auto& d : dk) {
        bad += apply_annihilator(d).is_zero() && oracle::annihilator(d).is_zero() ? 0 : 1;
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return {bad == 0 && secs < 10.0,
            std::to_string(bad) + " nonzero of 12, runtime " + format_double(secs) + " s (limit 10 s)"};
}

Outcome commutator()
{
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<unsigned> weight(1, 10);
    std::uniform_int_distribution<int> kd(-10, 10);
    int bad = 0;
    int count = 0;
    for (; count < 150; ++count) {
        const GradedPoly p = random_homogeneous(Family::Y, weight(rng), rng);
        const Rational k = make_rational(kd(rng), 2);
        const GradedPoly lhs = apply_annihilator(apply_Lk(k, p)) - apply_Lk(k, apply_annihilator(p));
        bad += lhs == Rational(2) * k * p + apply_euler(p) ? 0 : 1;
    }
    return {bad == 0, std::to_string(bad) + " mismatches of " + std::to_string(count) + " (degree down to -20)"};
}

Outcome test_vectors()
{
    int bad = 0;
    const GradedPoly z2 = Y("y2 + y1^2");
    const GradedPoly z3 = Y("y3 + 6*y1*y2 + 4*y1^3");
    const GradedPoly z4 = Y("y4 + 12*y1*y3 + 6*y2^2 + 48*y1^2*y2 + 24*y1^4");
    for (int d = 0; d <= 1; ++d) {
        const PhiTable y = compute_Yk(Parity(d), 4);
        const Rational a = (2 + d) * (1 + d);
        bad += y[0] == GradedPoly::constant(Family::Y, 1, 1) ? 0 : 1;
        bad += y[1].is_zero() ? 0 : 1;
        bad += y[2] == -a * z2 ? 0 : 1;
        bad += y[3] == Rational(-2) * a * z3 ? 0 : 1;
        bad += y[4] == Rational(-4) * a * z4 + Rational((6 + d) * (5 + d)) * a * z2 * z2 ? 0 : 1;
        const auto q = compute_Qk(Parity(d), 4);
        bad += q[2].is_zero() && q[3].is_zero() ? 0 : 1;
        bad += q[4] == Rational((6 + d) * (5 + d) * (2 + d) * (1 + d)) * parse_poly(Family::D, "D1^2") ? 0 : 1;
    }
    const auto dk = compute_Dk(3);
    bad += dk[0] == z2 ? 0 : 1;
    bad += dk[1] == Y("y3 + 2*y1*y2") + Y("4*y1") * z2 ? 0 : 1;
    bad += dk[2] == Y("y4 + 6*y1*y3 + 6*y2^2 + 12*y1^2*y2") + Y("6*y1") * z3 ? 0 : 1;
    return {bad == 0, std::to_string(bad) + " of 17 displayed identities differ"};
}

Outcome kernel_characterization()
{
    std::mt19937_64 rng(99);
    int bad = 0;
    int cases = 0;
    for (unsigned n = 0; n <= 4; ++n) {
        for (int i = 0; i < 20; ++i) {
            const GradedPoly in_d = substitute_D(random_homogeneous(Family::D, n + 2, rng));
            const BasisDecomposition b = decompose_basis(in_d);
            bad += apply_annihilator(in_d).is_zero() && !b.involves_y1() && b.expand() == in_d ? 0 : 1;
            const GradedPoly rest = substitute_D(random_homogeneous(Family::D, n + 1, rng));
            if (!rest.is_zero()) {
                const GradedPoly with_y1 = in_d + Y("y1") * rest;
                const BasisDecomposition c = decompose_basis(with_y1);
                bad += !apply_annihilator(with_y1).is_zero() && c.involves_y1() && c.expand() == with_y1 ? 0 : 1;
            }
            ++cases;
        }
    }
    return {bad == 0, std::to_string(bad) + " failures over " + std::to_string(cases) + " random instances, n <= 4"};
}

Outcome exact_heat()
{
    const auto t = ten_times();
    Rational worst(0);
    for (int d = 0; d <= 1; ++d) {
        const SeriesSolution s0 = assemble_psi(chain(0, d), RationalH({MobiusParam(Rational(1), Rational(0))}), 0, 10);
        const SeriesSolution s1 = assemble_psi(chain(1, d), two_pole(), 0, 10);
        worst = std::max({worst, heat_residual_series(s0, t), heat_residual_series(s1, t)});
    }
    return {worst == 0, "max defect " + to_string(worst) + " (required exactly 0), K = 10, 10 times"};
}

Outcome zero_ansatz()
{
    int bad = 0;
    const std::vector<MobiusParam> params{MobiusParam(Rational(1), Rational(0)), MobiusParam(Rational(2), Rational(-3)),
                                          MobiusParam(Rational(-1, 2), Rational(1))};
    for (int d = 0; d <= 1; ++d) {
        for (const auto& m : params) {
            const ZeroAnsatz f = closed_form_0ansatz(Parity(d), m, 0);
            const SeriesSolution s = assemble_psi(chain(0, d), RationalH({m}), 0, 10);
            const BurgersSolution b = cole_hopf(s);
            for (const Rational& t : ten_times()) {
                const auto c = s.taylor_coefficients(t);
                for (unsigned k = 0; k <= 10; ++k) {
                    bad += c[k] == f.series_coefficient(k, t) ? 0 : 1;
                }
                for (const auto& [p, coeff] : b.laurent()) {
                    const Rational v = s.time().evaluate(coeff, t);
                    const Rational expected = p == 1 ? m.alpha() / (m.alpha() * t - m.beta()) : p == -1 ? Rational(-d) : 0;
                    bad += v == expected ? 0 : 1;
                }
                bad += b.laurent().count(-1) == static_cast<unsigned>(d) ? 0 : 1;
            }
        }
    }
    return {bad == 0, std::to_string(bad) + " coefficient mismatches (series through z^20, Cole-Hopf image)"};
}

Outcome gamma_series()
{
    int bad = 0;
    for (int d = 0; d <= 1; ++d) {
        const PhiTable phi = reduced_phi(1, GradedPoly(Family::X, 2), Parity(d), 21);
        for (unsigned m = 0; m <= 10; ++m) {
            bad += phi[2 * m] == one_ansatz_phi(m, Parity(d)) ? 0 : 1;
            bad += phi[2 * m + 1].is_zero() ? 0 : 1;
        }
    }
    bad += reduced_phi(1, GradedPoly(Family::X, 2), Parity(0), 4)[4] == parse_poly(Family::X, "60*x2^2") ? 0 : 1;
    return {bad == 0, std::to_string(bad) + " mismatches for m <= 10, both parities"};
}

Outcome ode_chazy()
{
    int bad = 0;
    const RationalH h0({MobiusParam(Rational(3), Rational(1))});
    const RationalH h1 = two_pole(Rational(-2), Rational(5, 3));
    const GradedPoly none(Family::D, 1);
    for (int i = 0; i < 20; ++i) {
        const Rational t = oracle::frac(5 * i + 7, 3);
        bad += ode_residual(0, none, h0.jets(t, 2)) == 0 ? 0 : 1;
        const JetPoint j = h1.jets(t, 4);
        bad += ode_residual(1, none, j) == 0 ? 0 : 1;
        // h'' + 6 h h' + 4 h^3 directly
        bad += j[2] + 6 * j[0] * j[1] + 4 * j[0] * j[0] * j[0] == 0 ? 0 : 1;
        JetPoint y = j;
        for (auto& v : y.values) {
            v *= 2;
        }
        bad += chazy4_residual(y) == 0 ? 0 : 1;
    }
    return {bad == 0, std::to_string(bad) + " nonzero residuals at 20 rational points"};
}

double rk4_error(double step)
{
    const RationalH h = two_pole();
    const auto traj = integrate(make_field(chain(1, 0)), h.state(2.0, 2), 3.0, step);
    double worst = 0.0;
    for (const auto& s : traj) {
        const auto ref = h.state(s.t, 2);
        for (std::size_t k = 0; k < 2; ++k) {
            worst = std::max(worst, std::abs(s.x[k] - ref.x[k]));
        }
    }
    return worst;
}

Outcome integrator()
{
    const double e = rk4_error(1e-3);
    // at 1e-3 the error is at rounding level, so the order is measured on coarser steps
    const double ratio = rk4_error(1e-2) / rk4_error(5e-3);
    return {e <= 1e-8 && ratio >= 14 && ratio <= 18,
            "max error " + format_double(e) + " (<= 1e-8), halving ratio 1e-2 -> 5e-3: " + format_double(ratio) +
                " (in [14, 18])"};
}

Outcome numeric_convergence()
{
    struct Case {
        std::string name;
        std::function<double(double)> residual;
    };
    const ZeroAnsatz g0 = closed_form_0ansatz(Parity(0), MobiusParam(Rational(1), Rational(0)), 0);
    const ZeroAnsatz g1 = closed_form_0ansatz(Parity(1), MobiusParam(Rational(1), Rational(0)), 0);
    const OneAnsatz o0 = closed_form_1ansatz(Parity(0), MobiusParam(Rational(1), Rational(0)),
                                             MobiusParam(Rational(1), Rational(1)), 0);
    const OneAnsatz o1 = closed_form_1ansatz(Parity(1), MobiusParam(Rational(1), Rational(0)),
                                             MobiusParam(Rational(1), Rational(1)), 0);
    auto heat = [](const auto& f) {
        return [&f](double delta) {
            return heat_residual_numeric([&f](double z, double t) { return f(z, t); },
                                         GridSpec::uniform(-1, 1, 21, 1.0, 2.0, 5, delta, delta));
        };
    };
    auto burgers = [](const auto& f, double z0, double z1, double t0, double t1) {
        return [&f, z0, z1, t0, t1](double delta) {
            return burgers_residual_grid([&f](double z, double t) { return f.burgers(z, t); }, 0.5,
                                         GridSpec::uniform(z0, z1, 21, t0, t1, 5, delta, delta));
        };
    };
    const std::vector<Case> cases{
        {"heat 0-ansatz d=0", heat(g0)},
        {"heat 0-ansatz d=1", heat(g1)},
        {"heat 1-ansatz d=0", [&](double delta) {
             return heat_residual_numeric([&](double z, double t) { return o0(z, t); },
                                          GridSpec::uniform(-1, 1, 21, 2.0, 3.0, 5, delta, delta));
         }},
        {"Burgers 0-ansatz d=1", burgers(g1, 1.0, 2.0, 1.0, 2.0)},
        {"Burgers 1-ansatz d=0", burgers(o0, -1.0, 1.0, 2.0, 3.0)},
        {"Burgers 1-ansatz d=1", burgers(o1, 1.0, 2.0, 2.0, 3.0)},
    };
    bool ok = true;
    std::string detail;
    for (const auto& c : cases) {
        const double coarse = c.residual(2e-3);
        const double fine = c.residual(1e-3);
        const double ratio = coarse / fine;
        ok = ok && fine <= 1e-5 && ratio >= 3.5 && ratio <= 4.5;
        detail += (detail.empty() ? "" : "; ") + c.name + ": " + format_double(fine) + " ratio " + format_double(ratio);
    }
    return {ok, detail + " (need <= 1e-5 at 1e-3, ratio in [3.5, 4.5])"};
}

Outcome burgers_series()
{
    Rational worst(0);
    const auto t = ten_times();
    for (int d = 0; d <= 1; ++d) {
        const SeriesSolution s0 = assemble_psi(chain(0, d), RationalH({MobiusParam(Rational(2), Rational(1))}), 0, 10);
        const SeriesSolution s1 = assemble_psi(chain(1, d), two_pole(), 0, 10);
        worst = std::max({worst, burgers_residual_series(cole_hopf(s0), Rational(1, 2), t),
                          burgers_residual_series(cole_hopf(s1), Rational(1, 2), t)});
    }
    return {worst == 0, "max Laurent defect through z^17 " + to_string(worst) + " (required exactly 0)"};
}

Outcome parity()
{
    double worst = 0.0;
    int series_bad = 0;
    const GridSpec g1 = GridSpec::uniform(0.05, 2.0, 40, 2.0, 4.0, 5);
    const GridSpec g0 = GridSpec::uniform(0.05, 2.0, 40, 0.5, 1.5, 5);
    for (int d = 0; d <= 1; ++d) {
        const int sign = d == 1 ? -1 : 1;
        const SeriesSolution s = assemble_psi(chain(1, d), two_pole(), 0, 10);
        const BurgersSolution b = cole_hopf(s);
        const OneAnsatz f = closed_form_1ansatz(Parity(d), MobiusParam(Rational(1), Rational(0)),
                                                MobiusParam(Rational(1), Rational(1)), 0);
        const ZeroAnsatz z = closed_form_0ansatz(Parity(d), MobiusParam(Rational(1), Rational(0)), 0);
        worst = std::max({worst, parity_defect([&](double x, double t) { return s(x, t); }, g1, sign),
                          parity_defect([&](double x, double t) { return b(x, t); }, g1, -1),
                          parity_defect([&](double x, double t) { return f(x, t); }, g1, sign),
                          parity_defect([&](double x, double t) { return f.burgers(x, t); }, g1, -1),
                          parity_defect([&](double x, double t) { return z(x, t); }, g0, sign),
                          parity_defect([&](double x, double t) { return z.burgers(x, t); }, g0, -1)});
        for (const auto& [p, c] : b.laurent()) {
            series_bad += p % 2 != 0 ? 0 : 1;
        }
        for (unsigned k = 1; k < s.phi().size(); k += 2) {
            // odd-index Phi_k vanish for the 1-ansatz, and powers are z^(2k+delta) by construction
            series_bad += s.phi()[k].is_zero() ? 0 : 1;
        }
    }
    return {worst == 0.0 && series_bad == 0,
            "max grid defect " + format_double(worst) + ", " + std::to_string(series_bad) + " even Laurent powers"};
}

} // namespace

int main()
{
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"annihilator kills D_1..D_12", annihilation},
        {"commutator identity on random polynomials", commutator},
        {"displayed Y_k, Z_k and Q_k", test_vectors},
        {"annihilator kernel is the D-polynomials", kernel_characterization},
        {"exact heat residual n = 0, 1", exact_heat},
        {"0-ansatz closed form and its Cole-Hopf image", zero_ansatz},
        {"1-ansatz Gamma series equals recursion", gamma_series},
        {"ODE and Chazy-4 residuals", ode_chazy},
        {"RK4 fidelity and order", integrator},
        {"finite-difference residual convergence", numeric_convergence},
        {"exact Burgers series residual", burgers_series},
        {"parity of psi and v", parity},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o{false, ""};
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        std::printf("%s  [%2zu] %s: %s\n", o.passed ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                    o.detail.c_str());
        failed += o.passed ? 0 : 1;
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
