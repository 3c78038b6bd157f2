#include <heatansatz/operators.hpp>

#include <algorithm>
#include <mutex>
#include <stdexcept>

namespace heatansatz
{

namespace
{

void require_jets(const GradedPoly& p)
{
    if (p.family() != Family::Y) {
        throw FamilyMismatch(Family::Y, p.family());
    }
}

// Adds c * y_target * (d/dy_source term) for one monomial of p.
void shift_term(GradedPoly& out, const Exponents& e, const Rational& c, std::size_t source,
                std::size_t target, const Rational& factor)
{
    if (source >= e.size() || e[source] == 0) {
        return;
    }
    Exponents d = e;
    if (d.size() <= target) {
        d.resize(target + 1, 0);
    }
    const unsigned power = d[source]--;
    d[target] += 1;
    out.add_term(std::move(d), c * factor * power);
}

} // namespace

GradedPoly total_derivative(const GradedPoly& p)
{
    require_jets(p);
    GradedPoly out(Family::Y, p.nvars() + 1);
    for (const auto& [e, c] : p.terms()) {
        for (std::size_t s = 0; s < e.size(); ++s) {
            shift_term(out, e, c, s, s + 1, Rational(1));
        }
    }
    return out;
}

GradedPoly apply_Lk(const Rational& k, const GradedPoly& p)
{
    GradedPoly out = total_derivative(p);
    out += GradedPoly::variable(Family::Y, out.nvars(), 1, 2 * k) * p;
    return out;
}

GradedPoly apply_annihilator(const GradedPoly& p)
{
    require_jets(p);
    GradedPoly out(Family::Y, p.nvars());
    for (const auto& [e, c] : p.terms()) {
        // d/dy_1
        if (!e.empty() && e[0] > 0) {
            Exponents d = e;
            const unsigned power = d[0]--;
            out.add_term(std::move(d), c * power);
        }
        // -(s+1) s y_s d/dy_{s+1}, subscripts s = 1 .. (index s-1 gains, index s loses)
        for (std::size_t idx = 1; idx < e.size(); ++idx) {
            const long s = static_cast<long>(idx);
            shift_term(out, e, c, idx, idx - 1, Rational(-(s + 1) * s));
        }
    }
    return out;
}

GradedPoly apply_euler(const GradedPoly& p)
{
    require_jets(p);
    GradedPoly out(Family::Y, p.nvars());
    for (const auto& [e, c] : p.terms()) {
        out.add_term(e, c * monomial_degree(Family::Y, e));
    }
    return out;
}

namespace
{

// Eager-growing cache of D_k; guarded so concurrent callers are safe.
class DkCache
{
public:
    std::vector<GradedPoly> get(unsigned k_max)
    {
        std::lock_guard lock(mutex_);
        if (table_.empty()) {
            table_.push_back(apply_Lk(Rational(1, 2), GradedPoly::variable(Family::Y, 1, 1)));
        }
        while (table_.size() < k_max) {
            const auto k = static_cast<long>(table_.size() + 1);
            table_.push_back(apply_Lk(Rational(k), table_.back()));
        }
        return {table_.begin(), table_.begin() + k_max};
    }

private:
    std::mutex mutex_;
    std::vector<GradedPoly> table_;
};

DkCache& dk_cache()
{
    static DkCache cache;
    return cache;
}

} // namespace

std::vector<GradedPoly> compute_Dk(unsigned k_max)
{
    if (k_max == 0) {
        throw std::invalid_argument("compute_Dk needs k_max >= 1");
    }
    return dk_cache().get(k_max);
}

GradedPoly z_symbol(unsigned k)
{
    if (k < 2) {
        return GradedPoly(Family::Y, 0);
    }
    return compute_Dk(k - 1).back();
}

GradedPoly BasisDecomposition::expand() const
{
    const unsigned m = std::max(1U, coords.max_subscript());
    std::vector<GradedPoly> images;
    images.reserve(m);
    images.push_back(GradedPoly::variable(Family::Y, m, 1));
    if (m >= 2) {
        const auto dk = compute_Dk(m - 1);
        images.insert(images.end(), dk.begin(), dk.end());
    }
    return substitute(coords, images);
}

bool BasisDecomposition::involves_y1() const
{
    return std::any_of(coords.terms().begin(), coords.terms().end(),
                       [](const auto& t) { return !t.first.empty() && t.first[0] > 0; });
}

BasisDecomposition decompose_basis(const GradedPoly& p)
{
    require_jets(p);
    if (!poly_degree(p).is_homogeneous()) {
        throw DomainError("decompose_basis requires a homogeneous polynomial, got " + to_string(p));
    }
    const unsigned m = std::max(1U, p.max_subscript());
    std::vector<GradedPoly> basis;
    basis.push_back(GradedPoly::variable(Family::Y, m, 1));
    if (m >= 2) {
        const auto dk = compute_Dk(m - 1);
        basis.insert(basis.end(), dk.begin(), dk.end());
    }
    std::vector<std::vector<GradedPoly>> powers(m);
    auto basis_power = [&](std::size_t i, unsigned e) -> const GradedPoly& {
        auto& cache = powers[i];
        if (cache.empty()) {
            cache.push_back(GradedPoly::constant(Family::Y, m, Rational(1)));
        }
        while (cache.size() <= e) {
            cache.push_back(cache.back() * basis[i]);
        }
        return cache[e];
    };

    // Lex order with y_m > ... > y_1 is a monomial order in which Z_k = y_k + (lower
    // terms in y_1 .. y_{k-1}) has leading monomial y_k, so each step strictly
    // lowers the leading monomial of the remainder.
    auto lex_less = [](const Exponents& a, const Exponents& b) {
        const std::size_t n = std::max(a.size(), b.size());
        for (std::size_t i = n; i-- > 0;) {
            const unsigned ea = i < a.size() ? a[i] : 0;
            const unsigned eb = i < b.size() ? b[i] : 0;
            if (ea != eb) {
                return ea < eb;
            }
        }
        return false;
    };

    BasisDecomposition out{GradedPoly(Family::Y, m)};
    GradedPoly rest = p;
    while (!rest.is_zero()) {
        auto lead = rest.terms().begin();
        for (auto it = rest.terms().begin(); it != rest.terms().end(); ++it) {
            if (lex_less(lead->first, it->first)) {
                lead = it;
            }
        }
        const Exponents e = lead->first;
        const Rational c = lead->second;
        GradedPoly product = GradedPoly::constant(Family::Y, m, c);
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] > 0) {
                product = product * basis_power(i, e[i]);
            }
        }
        out.coords.add_term(e, c);
        rest -= product;
    }
    return out;
}

bool check_BR_form(const GradedPoly& p)
{
    const BasisDecomposition basis = decompose_basis(p);
    const bool annihilated = apply_annihilator(p).is_zero();
    if (annihilated == basis.involves_y1()) {
        throw std::logic_error("annihilator and basis decomposition disagree on " + to_string(p));
    }
    return annihilated;
}

} // namespace heatansatz
