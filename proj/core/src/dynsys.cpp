#include <heatansatz/dynsys.hpp>
#include <heatansatz/operators.hpp>

#include <cmath>
#include <memory>
#include <sstream>

namespace heatansatz
{

MobiusParam::MobiusParam(Rational alpha, Rational beta) : alpha_(std::move(alpha)), beta_(std::move(beta))
{
    if (alpha_ == 0 && beta_ == 0) {
        throw std::invalid_argument("Mobius parameter (0:0) is not a projective point");
    }
}

Rational MobiusParam::pole_term(const Rational& t) const
{
    if (alpha_ == 0) {
        return Rational(0);
    }
    const Rational denom = alpha_ * t - beta_;
    if (denom == 0) {
        throw DomainError("pole of h at t = " + to_string(t));
    }
    return alpha_ / denom;
}

double MobiusParam::pole_term(double t) const
{
    if (alpha_ == 0) {
        return 0.0;
    }
    const double a = alpha_.get_d();
    const double denom = a * t - beta_.get_d();
    if (denom == 0.0) {
        throw DomainError("pole of h at t = " + std::to_string(t));
    }
    return a / denom;
}

bool operator==(const MobiusParam& a, const MobiusParam& b)
{
    return a.alpha_ * b.beta_ == a.beta_ * b.alpha_;
}

MobiusParam parse_mobius(std::string_view text)
{
    const auto colon = text.find(':');
    if (colon == std::string_view::npos) {
        throw std::invalid_argument("Mobius parameter must look like 'alpha:beta', got '" + std::string(text) + "'");
    }
    return MobiusParam(parse_rational(text.substr(0, colon)), parse_rational(text.substr(colon + 1)));
}

RationalH::RationalH(std::vector<MobiusParam> poles) : poles_(std::move(poles))
{
    if (poles_.empty()) {
        throw std::invalid_argument("a rational profile needs at least one pole term");
    }
}

namespace
{

template <typename T>
BasicJetPoint<T> jets_impl(const std::vector<MobiusParam>& poles, const T& t, unsigned m)
{
    const auto count = static_cast<long>(poles.size());
    std::vector<T> terms;
    terms.reserve(poles.size());
    for (const auto& p : poles) {
        terms.push_back(p.pole_term(t));
    }
    BasicJetPoint<T> out;
    out.values.reserve(m);
    // d^j/dt^j h = (-1)^j j! / (n+1) * sum_k term_k^(j+1)
    std::vector<T> powers = terms;
    T fact = T(1);
    for (unsigned j = 0; j < m; ++j) {
        if (j > 0) {
            fact *= T(static_cast<long>(j));
            for (std::size_t k = 0; k < powers.size(); ++k) {
                powers[k] *= terms[k];
            }
        }
        T sum = T(0);
        for (const T& pw : powers) {
            sum += pw;
        }
        T value = fact * sum / T(count);
        if (j % 2 == 1) {
            value = -value;
        }
        out.values.push_back(value);
    }
    return out;
}

template <typename T>
DynState<T> state_impl(const RationalH& h, const T& t, unsigned n_state)
{
    if (n_state == 0) {
        throw std::invalid_argument("state needs at least x1");
    }
    const BasicJetPoint<T> jets = h.jets(t, n_state);
    DynState<T> s;
    s.t = t;
    s.x.push_back(jets.values[0]);
    if (n_state >= 2) {
        const auto dk = compute_Dk(n_state - 1);
        for (const auto& d : dk) {
            s.x.push_back(poly_eval(d, jets));
        }
    }
    return s;
}

} // namespace

JetPoint RationalH::jets(const Rational& t, unsigned m) const { return jets_impl<Rational>(poles_, t, m); }

NumericJetPoint RationalH::jets(double t, unsigned m) const { return jets_impl<double>(poles_, t, m); }

DynState<Rational> RationalH::state(const Rational& t, unsigned n_state) const { return state_impl(*this, t, n_state); }

DynState<double> RationalH::state(double t, unsigned n_state) const { return state_impl(*this, t, n_state); }

std::vector<GradedPoly> hds_field_polynomials(const AnsatzSpec& input)
{
    const AnsatzSpec spec = input.to_general();
    const unsigned n = spec.n();
    const unsigned nvars = n + 1;
    auto p_eff = [&](unsigned q) {
        return (q == n + 2 ? spec.capped_top() : spec.p(q)).with_nvars(std::max(nvars, q - 1));
    };
    const GradedPoly x1 = GradedPoly::variable(Family::X, nvars, 1);
    std::vector<GradedPoly> field;
    field.push_back((p_eff(2) - x1 * x1).with_nvars(nvars));
    for (unsigned k = 2; k <= n + 1; ++k) {
        GradedPoly comp = p_eff(k + 1) - Rational(2 * static_cast<long>(k)) * x1 * GradedPoly::variable(Family::X, nvars, k);
        field.push_back(comp.with_nvars(nvars));
    }
    return field;
}

namespace
{

template <typename T>
std::vector<T> eval_field(const std::vector<GradedPoly>& field, const DynState<T>& s)
{
    if (s.x.size() != field.size()) {
        throw std::invalid_argument("state has " + std::to_string(s.x.size()) + " components, system needs " +
                                    std::to_string(field.size()));
    }
    std::vector<T> out;
    out.reserve(field.size());
    for (const auto& f : field) {
        out.push_back(poly_eval(f, std::span<const T>(s.x)));
    }
    return out;
}

} // namespace

std::vector<Rational> hds_vector_field(const AnsatzSpec& spec, const DynState<Rational>& s)
{
    return eval_field(hds_field_polynomials(spec), s);
}

std::vector<double> hds_vector_field(const AnsatzSpec& spec, const DynState<double>& s)
{
    return eval_field(hds_field_polynomials(spec), s);
}

std::vector<Rational> rhds_vector_field(unsigned n, const GradedPoly& top, const DynState<Rational>& s)
{
    return hds_vector_field(AnsatzSpec::reduced(n, Parity(0), top), s);
}

std::vector<double> rhds_vector_field(unsigned n, const GradedPoly& top, const DynState<double>& s)
{
    return hds_vector_field(AnsatzSpec::reduced(n, Parity(0), top), s);
}

VectorField make_field(const AnsatzSpec& spec)
{
    auto field = std::make_shared<const std::vector<GradedPoly>>(hds_field_polynomials(spec));
    return [field](double, std::span<const double> x, std::span<double> dxdt) {
        if (x.size() != field->size() || dxdt.size() != field->size()) {
            throw std::invalid_argument("state dimension does not match the system");
        }
        for (std::size_t k = 0; k < field->size(); ++k) {
            dxdt[k] = poly_eval((*field)[k], x);
        }
    };
}

NonFiniteState::NonFiniteState(double t, const std::string& what) : DomainError(what), t_(t) {}

namespace
{

void guard(const std::vector<double>& x, double t, double bound)
{
    for (std::size_t k = 0; k < x.size(); ++k) {
        if (!std::isfinite(x[k]) || std::abs(x[k]) > bound) {
            std::ostringstream os;
            os.precision(17);
            os << "integration left the finite region at t = " << t << " (x" << k + 1 << " = " << x[k] << ")";
            throw NonFiniteState(t, os.str());
        }
    }
}

} // namespace

std::vector<DynState<double>> integrate(const VectorField& field, const DynState<double>& s0, double t_end,
                                        double step, const IntegratorOptions& options)
{
    if (!(step > 0.0) || !std::isfinite(step)) {
        throw std::invalid_argument("integration step must be positive and finite");
    }
    const std::size_t dim = s0.x.size();
    guard(s0.x, s0.t, options.blowup_bound);

    const double span = t_end - s0.t;
    const double ratio = std::abs(span) / step;
    auto full_steps = static_cast<long long>(std::floor(ratio));
    const long long nearest = std::llround(ratio);
    bool partial = true;
    if (std::abs(ratio - static_cast<double>(nearest)) <= 1e-9 * std::max(1.0, ratio)) {
        full_steps = nearest;
        partial = false;
    }
    const double h = span >= 0 ? step : -step;

    std::vector<DynState<double>> out;
    out.reserve(static_cast<std::size_t>(full_steps) + 2);
    out.push_back(s0);

    std::vector<double> k1(dim), k2(dim), k3(dim), k4(dim), tmp(dim);
    auto advance = [&](const DynState<double>& s, double t_next) {
        const double dt = t_next - s.t;
        field(s.t, s.x, k1);
        for (std::size_t i = 0; i < dim; ++i) {
            tmp[i] = s.x[i] + 0.5 * dt * k1[i];
        }
        field(s.t + 0.5 * dt, tmp, k2);
        for (std::size_t i = 0; i < dim; ++i) {
            tmp[i] = s.x[i] + 0.5 * dt * k2[i];
        }
        field(s.t + 0.5 * dt, tmp, k3);
        for (std::size_t i = 0; i < dim; ++i) {
            tmp[i] = s.x[i] + dt * k3[i];
        }
        field(t_next, tmp, k4);
        DynState<double> next;
        next.t = t_next;
        next.x.resize(dim);
        for (std::size_t i = 0; i < dim; ++i) {
            next.x[i] = s.x[i] + dt / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
        }
        guard(next.x, t_next, options.blowup_bound);
        return next;
    };

    for (long long i = 1; i <= full_steps; ++i) {
        const double t_next = (!partial && i == full_steps) ? t_end : s0.t + static_cast<double>(i) * h;
        out.push_back(advance(out.back(), t_next));
    }
    if (partial && out.back().t != t_end) {
        out.push_back(advance(out.back(), t_end));
    }
    return out;
}

Rational ode_residual(unsigned n, const GradedPoly& top, const JetPoint& jets)
{
    if (jets.size() < n + 2) {
        throw std::invalid_argument("ode_residual for n = " + std::to_string(n) + " needs " + std::to_string(n + 2) +
                                    " jets, got " + std::to_string(jets.size()));
    }
    const GradedPoly lhs = compute_Dk(n + 1).back();
    GradedPoly rhs;
    switch (top.family()) {
    case Family::D:
        rhs = substitute_D(top);
        break;
    case Family::X:
        rhs = substitute_x_by_D(top);
        break;
    case Family::Y:
        throw std::invalid_argument("ode_residual expects P_n over D or X variables");
    }
    return poly_eval(lhs, jets) - poly_eval(rhs, jets);
}

Rational chazy4_residual(const JetPoint& y)
{
    if (y.size() < 4) {
        throw std::invalid_argument("chazy4_residual needs (y, y', y'', y''')");
    }
    const Rational& y0 = y[0];
    const Rational& y1 = y[1];
    const Rational& y2 = y[2];
    const Rational& y3 = y[3];
    return y3 + 3 * y0 * y2 + 3 * y1 * y1 + 3 * y0 * y0 * y1;
}

} // namespace heatansatz
