#include <heatansatz/closed_forms.hpp>
#include <heatansatz/csv.hpp>
#include <heatansatz/operators.hpp>
#include <heatansatz/residuals.hpp>
#include <heatansatz/verify.hpp>

#include <cmath>
#include <stdexcept>

namespace heatansatz
{

GradedPoly random_homogeneous(Family family, unsigned weight, std::mt19937_64& rng, unsigned max_terms)
{
    // weight w means degree -2w; y_k and x_k weigh k, D_k weighs k + 1.
    const unsigned shift = family == Family::D ? 1 : 0;
    std::uniform_int_distribution<int> coeff(-9, 9);
    std::uniform_int_distribution<unsigned> count(1, max_terms);
    GradedPoly p(family, weight);
    const unsigned terms = count(rng);
    for (unsigned i = 0; i < terms; ++i) {
        Exponents e(weight, 0);
        unsigned left = weight;
        while (left > shift) {
            std::uniform_int_distribution<unsigned> part(1, left - shift);
            const unsigned k = part(rng);
            e[k - 1] += 1;
            left -= k + shift;
        }
        if (left != 0) {
            continue; // D family cannot reach an odd remainder of 1
        }
        int c = coeff(rng);
        if (c == 0) {
            c = 1;
        }
        p.add_term(std::move(e), Rational(c));
    }
    return p;
}

namespace
{

CheckResult check(std::string name, bool ok, std::string detail = {})
{
    return {std::move(name), ok, std::move(detail)};
}

} // namespace

std::vector<CheckResult> verify_operators()
{
    std::vector<CheckResult> out;
    const auto dk = compute_Dk(12);
    bool killed = true;
    for (const auto& d : dk) {
        killed = killed && apply_annihilator(d).is_zero();
    }
    out.push_back(check("annihilator kills D_1..D_12", killed));

    std::mt19937_64 rng(20240611);
    std::uniform_int_distribution<unsigned> weight(1, 10);
    std::uniform_int_distribution<int> kdist(-6, 6);
    int failures = 0;
    for (int i = 0; i < 100; ++i) {
        const GradedPoly p = random_homogeneous(Family::Y, weight(rng), rng);
        const Rational k = make_rational(kdist(rng), 2);
        const GradedPoly lhs = apply_annihilator(apply_Lk(k, p)) - apply_Lk(k, apply_annihilator(p));
        const GradedPoly rhs = Rational(2) * k * p + apply_euler(p);
        failures += lhs == rhs ? 0 : 1;
    }
    out.push_back(check("commutator identity on 100 random polynomials", failures == 0,
                        std::to_string(failures) + " failures"));

    failures = 0;
    for (int i = 0; i < 50; ++i) {
        const unsigned w = 2 + weight(rng) % 5;
        const GradedPoly in_d = substitute_D(random_homogeneous(Family::D, w, rng));
        const GradedPoly with_y1 =
            in_d + GradedPoly::variable(Family::Y, 1, 1) * substitute_D(random_homogeneous(Family::D, w - 1, rng));
        const BasisDecomposition a = decompose_basis(in_d);
        const BasisDecomposition b = decompose_basis(with_y1);
        const bool ok = a.expand() == in_d && b.expand() == with_y1 && check_BR_form(in_d) &&
                        (in_d.is_zero() || !a.involves_y1()) && (with_y1 == in_d || !check_BR_form(with_y1));
        failures += ok ? 0 : 1;
    }
    out.push_back(check("basis decomposition round trip and annihilator test", failures == 0,
                        std::to_string(failures) + " failures"));
    return out;
}

std::vector<CheckResult> verify_ansatz()
{
    std::vector<CheckResult> out;
    for (int d = 0; d <= 1; ++d) {
        const Parity delta(d);
        const std::string tag = " (delta = " + std::to_string(d) + ")";
        const PhiTable y = compute_Yk(delta, 12);
        bool killed = true;
        for (const auto& p : y.entries) {
            killed = killed && apply_annihilator(p).is_zero();
        }
        out.push_back(check("annihilator kills Y_0..Y_12" + tag, killed));

        const auto q = compute_Qk(delta, 10);
        bool split = true;
        for (unsigned k = 2; k <= 10; ++k) {
            const Rational c = -power(Rational(2), static_cast<int>(k) - 2) * (2 + d) * (1 + d);
            split = split && y[k] == c * z_symbol(k) + substitute_D(q[k]);
        }
        out.push_back(check("Y_k = -2^(k-2)(2+d)(1+d) Z_k + Q_k" + tag, split && q[2].is_zero() && q[3].is_zero()));

        const PhiTable phi = reduced_phi(1, GradedPoly(Family::X, 2), delta, 20);
        bool match = true;
        for (unsigned m = 0; 2 * m <= 20; ++m) {
            match = match && phi[2 * m] == one_ansatz_phi(m, delta);
            if (2 * m + 1 <= 20) {
                match = match && phi[2 * m + 1].is_zero();
            }
        }
        out.push_back(check("1-ansatz recursion equals the Gamma series" + tag, match));
    }
    return out;
}

std::vector<CheckResult> verify_dynsys()
{
    std::vector<CheckResult> out;
    const RationalH h0({MobiusParam(Rational(3), Rational(-2))});
    const RationalH h1({MobiusParam(Rational(1), Rational(0)), MobiusParam(Rational(2), Rational(5))});
    bool zero = true;
    bool chazy = true;
    for (int i = 1; i <= 20; ++i) {
        const Rational t = make_rational(7 * i + 3, 11);
        zero = zero && ode_residual(0, GradedPoly(Family::D, 1), h0.jets(t, 3)) == 0;
        const JetPoint j = h1.jets(t, 4);
        zero = zero && ode_residual(1, GradedPoly(Family::D, 1), j) == 0;
        JetPoint y = j;
        for (auto& v : y.values) {
            v *= 2;
        }
        chazy = chazy && chazy4_residual(y) == 0;
    }
    out.push_back(check("ode residual vanishes for rational profiles (n = 0, 1)", zero));
    out.push_back(check("Chazy-4 residual vanishes for y = 2h", chazy));

    const RationalH exact({MobiusParam(Rational(1), Rational(0)), MobiusParam(Rational(1), Rational(1))});
    const AnsatzSpec spec = AnsatzSpec::reduced(1, Parity(0), GradedPoly(Family::X, 2));
    auto error_at = [&](double step) {
        const auto traj = integrate(make_field(spec), exact.state(2.0, 2), 3.0, step);
        double worst = 0.0;
        for (const auto& s : traj) {
            const auto ref = exact.state(s.t, 2);
            for (std::size_t k = 0; k < 2; ++k) {
                worst = std::max(worst, std::abs(s.x[k] - ref.x[k]));
            }
        }
        return worst;
    };
    const double e1 = error_at(1e-2);
    const double e2 = error_at(5e-3);
    const double e3 = error_at(1e-3);
    out.push_back(check("RK4 matches the closed-form trajectory", e3 <= 1e-8, "max error " + format_double(e3)));
    out.push_back(check("RK4 error ratio per halving in [14, 18]", e1 / e2 >= 14 && e1 / e2 <= 18,
                        "ratio " + format_double(e1 / e2)));
    return out;
}

std::vector<CheckResult> verify_solution()
{
    std::vector<CheckResult> out;
    std::vector<Rational> samples;
    for (int i = 0; i < 10; ++i) {
        samples.push_back(make_rational(13 * i + 17, 7));
    }
    const RationalH h0({MobiusParam(Rational(2), Rational(1))});
    const RationalH h1({MobiusParam(Rational(1), Rational(0)), MobiusParam(Rational(1), Rational(1))});
    for (int d = 0; d <= 1; ++d) {
        const Parity delta(d);
        const std::string tag = " (delta = " + std::to_string(d) + ")";
        const SeriesSolution s0 = assemble_psi(AnsatzSpec::reduced(0, delta, GradedPoly(Family::X, 1)), h0, 0, 10);
        const SeriesSolution s1 = assemble_psi(AnsatzSpec::reduced(1, delta, GradedPoly(Family::X, 2)), h1, 0, 10);
        out.push_back(check("exact heat residual n = 0" + tag, heat_residual_series(s0, samples) == 0));
        out.push_back(check("exact heat residual n = 1" + tag, heat_residual_series(s1, samples) == 0));
        out.push_back(check("exact Burgers residual n = 0" + tag,
                            burgers_residual_series(cole_hopf(s0), Rational(1, 2), samples) == 0));
        out.push_back(check("exact Burgers residual n = 1" + tag,
                            burgers_residual_series(cole_hopf(s1), Rational(1, 2), samples) == 0));

        const ZeroAnsatz z0 = closed_form_0ansatz(delta, MobiusParam(Rational(2), Rational(1)), 0);
        bool taylor = true;
        for (const Rational& t : samples) {
            const auto c = s0.taylor_coefficients(t);
            for (unsigned k = 0; k < c.size(); ++k) {
                taylor = taylor && c[k] == z0.series_coefficient(k, t);
            }
        }
        out.push_back(check("0-ansatz closed form matches the series" + tag, taylor));

        const GridSpec grid = GridSpec::uniform(0.1, 1.0, 10, 2.0, 3.0, 5);
        const Field2D psi = [&s1](double z, double t) { return s1(z, t); };
        const BurgersSolution b = cole_hopf(s1);
        const Field2D v = [&b](double z, double t) { return b(z, t); };
        const int sign = d == 1 ? -1 : 1;
        const double defect = std::max(parity_defect(psi, grid, sign), parity_defect(v, grid, -1));
        out.push_back(check("parity of psi and v" + tag, defect <= 1e-12, format_double(defect)));
    }
    return out;
}

std::vector<CheckResult> run_suite(std::string_view name)
{
    if (name == "operators") {
        return verify_operators();
    }
    if (name == "ansatz") {
        return verify_ansatz();
    }
    if (name == "dynsys") {
        return verify_dynsys();
    }
    if (name == "solution") {
        return verify_solution();
    }
    if (name == "all") {
        std::vector<CheckResult> out;
        for (auto part : {verify_operators(), verify_ansatz(), verify_dynsys(), verify_solution()}) {
            out.insert(out.end(), part.begin(), part.end());
        }
        return out;
    }
    throw std::invalid_argument("unknown suite '" + std::string(name) + "'");
}

} // namespace heatansatz
