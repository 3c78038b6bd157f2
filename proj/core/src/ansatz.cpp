#include <heatansatz/ansatz.hpp>
#include <heatansatz/operators.hpp>

#include <stdexcept>

namespace heatansatz
{

Parity::Parity(int delta) : delta_(delta)
{
    if (delta != 0 && delta != 1) {
        throw std::invalid_argument("parity must be 0 or 1, got " + std::to_string(delta));
    }
}

namespace
{

void require_family(const GradedPoly& p, Family f)
{
    if (p.family() != f) {
        throw FamilyMismatch(f, p.family());
    }
}

void check_graded(const GradedPoly& p, int degree, unsigned max_sub, const std::string& name)
{
    require_family(p, Family::X);
    if (!poly_degree(p).matches(degree)) {
        throw DomainError(name + " = " + to_string(p) + " is not homogeneous of degree " + std::to_string(degree));
    }
    for (const auto& [e, c] : p.terms()) {
        if (!e.empty() && e[0] > 0) {
            throw DomainError(name + " must not involve x1");
        }
        if (e.size() > max_sub) {
            throw DomainError(name + " = " + to_string(p) + " uses variables beyond x" + std::to_string(max_sub));
        }
    }
}

// (2q + delta - 3)(2q + delta - 2) / (2 (1 + 2 delta))
Rational phi_product_weight(unsigned q, Parity delta)
{
    const long d = delta.value();
    const long qq = static_cast<long>(q);
    return Rational((2 * qq + d - 3) * (2 * qq + d - 2), 2 * (1 + 2 * d));
}

GradedPoly drop_variable(const GradedPoly& p, unsigned subscript)
{
    GradedPoly out(p.family(), p.nvars());
    for (const auto& [e, c] : p.terms()) {
        if (e.size() >= subscript && e[subscript - 1] > 0) {
            continue;
        }
        out.add_term(e, c);
    }
    return out;
}

} // namespace

AnsatzSpec AnsatzSpec::general(unsigned n, Parity delta, std::vector<GradedPoly> p)
{
    if (p.size() != n + 1) {
        throw std::invalid_argument("general spec with n = " + std::to_string(n) + " needs p_2 .. p_" +
                                    std::to_string(n + 2) + " (" + std::to_string(n + 1) + " polynomials), got " +
                                    std::to_string(p.size()));
    }
    for (unsigned q = 2; q <= n + 2; ++q) {
        GradedPoly& pq = p[q - 2];
        check_graded(pq, -2 * static_cast<int>(q), q, "p" + std::to_string(q));
        pq = pq.with_nvars(std::max(n + 2, pq.max_subscript()));
    }
    AnsatzSpec spec(n, delta, Mode::general);
    spec.p_ = std::move(p);
    return spec;
}

AnsatzSpec AnsatzSpec::reduced(unsigned n, Parity delta, GradedPoly top)
{
    check_graded(top, -2 * static_cast<int>(n + 2), n, "P" + std::to_string(n));
    AnsatzSpec spec(n, delta, Mode::reduced);
    spec.top_ = top.with_nvars(std::max(n + 1, top.max_subscript()));
    return spec;
}

const GradedPoly& AnsatzSpec::p(unsigned q) const
{
    if (mode_ != Mode::general) {
        throw std::logic_error("p_q is defined on general specs; call to_general() first");
    }
    if (q < 2 || q > n_ + 2) {
        throw std::out_of_range("p" + std::to_string(q) + " outside p_2 .. p_" + std::to_string(n_ + 2));
    }
    return p_[q - 2];
}

GradedPoly AnsatzSpec::capped_top() const
{
    if (mode_ == Mode::reduced) {
        return top_;
    }
    return drop_variable(p(n_ + 2), n_ + 2).with_nvars(n_ + 2);
}

const GradedPoly& AnsatzSpec::top_polynomial() const
{
    if (mode_ != Mode::reduced) {
        throw std::logic_error("top polynomial is defined on reduced specs");
    }
    return top_;
}

AnsatzSpec AnsatzSpec::to_general() const
{
    if (mode_ == Mode::general) {
        return *this;
    }
    std::vector<GradedPoly> p;
    for (unsigned q = 2; q <= n_ + 1; ++q) {
        p.push_back(GradedPoly::variable(Family::X, n_ + 2, q));
    }
    p.push_back(top_.with_nvars(std::max(n_ + 2, top_.max_subscript())));
    return general(n_, delta_, std::move(p));
}

bool psi_recursion_check(std::span<const TimeFunction> coeffs, std::span<const Rational> t_samples,
                         const std::function<Rational(const Rational&)>& log_rate)
{
    for (const Rational& t : t_samples) {
        const Rational rho = log_rate ? log_rate(t) : Rational(0);
        for (std::size_t k = 1; k < coeffs.size(); ++k) {
            const ValueAndSlope prev = coeffs[k - 1](t);
            const ValueAndSlope cur = coeffs[k](t);
            if (cur.value != 2 * (prev.slope + rho * prev.value)) {
                return false;
            }
        }
    }
    return true;
}

PhiTable compute_Yk(Parity delta, unsigned k_max)
{
    if (k_max < 2) {
        throw std::invalid_argument("compute_Yk needs k_max >= 2");
    }
    const GradedPoly z2 = z_symbol(2).with_nvars(k_max);
    PhiTable table{delta, {}};
    table.entries.push_back(GradedPoly::constant(Family::Y, k_max, Rational(1)));
    table.entries.push_back(GradedPoly(Family::Y, k_max));
    const long d = delta.value();
    for (unsigned k = 2; k <= k_max; ++k) {
        const long kk = static_cast<long>(k);
        GradedPoly yk = 2 * apply_Lk(Rational(kk - 1), table.entries[k - 1]);
        yk -= Rational((2 * kk + d - 2) * (2 * kk + d - 3)) * (z2 * table.entries[k - 2]);
        table.entries.push_back(yk.with_nvars(std::max(k_max, yk.max_subscript())));
    }
    return table;
}

namespace
{

// Derivation D_j -> D_{j+1}; on homogeneous polynomials in the Z-basis this is
// how L_k acts once the y_1 terms cancel against the Euler identity.
GradedPoly shift_D(const GradedPoly& p)
{
    GradedPoly out(Family::D, p.nvars() + 1);
    for (const auto& [e, c] : p.terms()) {
        for (std::size_t j = 0; j < e.size(); ++j) {
            if (e[j] == 0) {
                continue;
            }
            Exponents d = e;
            if (d.size() <= j + 1) {
                d.resize(j + 2, 0);
            }
            const unsigned power = d[j]--;
            d[j + 1] += 1;
            out.add_term(std::move(d), c * power);
        }
    }
    return out;
}

} // namespace

std::vector<GradedPoly> compute_Qk(Parity delta, unsigned k_max)
{
    if (k_max < 2) {
        throw std::invalid_argument("compute_Qk needs k_max >= 2");
    }
    const long d = delta.value();
    const Rational lead((2 + d) * (1 + d));
    const GradedPoly d1 = GradedPoly::variable(Family::D, 1, 1);
    std::vector<GradedPoly> q(k_max + 1, GradedPoly(Family::D, 0));
    for (unsigned k = 4; k <= k_max; ++k) {
        const long kk = static_cast<long>(k);
        // Z_{k-2} = D_{k-3}
        const GradedPoly z_km2 = GradedPoly::variable(Family::D, 1, k - 3);
        const Rational two_pow = power(Rational(2), static_cast<int>(k) - 4);
        GradedPoly qk = 2 * shift_D(q[k - 1]);
        qk += Rational((2 * kk + d - 2) * (2 * kk + d - 3)) * (d1 * (two_pow * lead * z_km2 - q[k - 2]));
        q[k] = qk;
    }
    return q;
}

PhiTable nansatz_phi(const AnsatzSpec& spec, unsigned q_max)
{
    if (spec.mode() != AnsatzSpec::Mode::general) {
        throw std::invalid_argument("nansatz_phi expects a general-mode spec");
    }
    const unsigned n = spec.n();
    const Parity delta = spec.parity();
    const long d = delta.value();
    const unsigned nvars = n + 1;

    // p_{k+1} as used in the recursion; the last one is capped.
    auto p_eff = [&](unsigned q) {
        return (q == n + 2 ? spec.capped_top() : spec.p(q)).with_nvars(std::max(nvars, q - 1));
    };

    PhiTable table{delta, {}};
    table.entries.push_back(GradedPoly::constant(Family::X, nvars, Rational(1)));
    table.entries.push_back(GradedPoly(Family::X, nvars));
    if (q_max < 2) {
        table.entries.resize(q_max + 1);
        return table;
    }
    table.entries.push_back((Rational(-2 * (1 + 2 * d)) * p_eff(2)).with_nvars(nvars));
    std::vector<GradedPoly> chain;
    for (unsigned k = 2; k <= n + 1; ++k) {
        chain.push_back(p_eff(k + 1).with_nvars(nvars));
    }
    for (unsigned q = 3; q <= q_max; ++q) {
        const GradedPoly& prev = table.entries[q - 1];
        GradedPoly phi(Family::X, nvars);
        for (unsigned k = 2; k <= n + 1; ++k) {
            phi += chain[k - 2] * poly_partial(prev, k);
        }
        phi *= Rational(2);
        phi += phi_product_weight(q, delta) * (table.entries[2] * table.entries[q - 2]);
        table.entries.push_back(std::move(phi));
    }
    return table;
}

PhiTable reduced_phi(unsigned n, const GradedPoly& top, Parity delta, unsigned q_max)
{
    check_graded(top, -2 * static_cast<int>(n + 2), n, "P" + std::to_string(n));
    const long d = delta.value();
    const unsigned nvars = n + 1;
    const GradedPoly top_n = top.with_nvars(std::max(nvars, top.max_subscript()));

    PhiTable table{delta, {}};
    table.entries.push_back(GradedPoly::constant(Family::X, nvars, Rational(1)));
    table.entries.push_back(GradedPoly(Family::X, nvars));
    if (q_max < 2) {
        table.entries.resize(q_max + 1);
        return table;
    }
    // With no parameters x_2 is the capped top variable.
    table.entries.push_back(n >= 1 ? GradedPoly::variable(Family::X, nvars, 2, Rational(-2 * (1 + 2 * d)))
                                   : GradedPoly(Family::X, nvars));
    for (unsigned q = 3; q <= q_max; ++q) {
        const GradedPoly& prev = table.entries[q - 1];
        GradedPoly flow(Family::X, nvars);
        for (unsigned k = 2; k <= n; ++k) {
            flow += GradedPoly::variable(Family::X, nvars, k + 1) * poly_partial(prev, k);
        }
        if (n >= 1) {
            flow += top_n * poly_partial(prev, n + 1);
        }
        GradedPoly phi = Rational(2) * flow;
        phi += phi_product_weight(q, delta) * (table.entries[2] * table.entries[q - 2]);
        table.entries.push_back(phi.with_nvars(nvars));
    }
    return table;
}

GradedPoly substitute_x_by_D(const GradedPoly& p)
{
    require_family(p, Family::X);
    const unsigned m = std::max(1U, p.max_subscript());
    std::vector<GradedPoly> images;
    images.push_back(GradedPoly::variable(Family::Y, 1, 1));
    if (m >= 2) {
        const auto dk = compute_Dk(m - 1);
        images.insert(images.end(), dk.begin(), dk.end());
    }
    return substitute(p, images);
}

GradedPoly substitute_D(const GradedPoly& p)
{
    require_family(p, Family::D);
    if (p.max_subscript() == 0) {
        return GradedPoly::constant(Family::Y, 1, p.coefficient({})).with_nvars(1);
    }
    const auto dk = compute_Dk(p.max_subscript());
    return substitute(p, dk);
}

} // namespace heatansatz
