#include <heatansatz/closed_forms.hpp>

#include <cmath>

namespace heatansatz
{

ZeroAnsatz::ZeroAnsatz(Parity delta, MobiusParam m, Rational r0)
    : delta_(delta), m_(std::move(m)), r0_(std::move(r0))
{
}

double ZeroAnsatz::operator()(double z, double t) const
{
    const int d = delta_.value();
    const double p = m_.pole_term(t);
    double value = std::exp(-0.5 * p * z * z + r0_.get_d());
    if (m_.alpha() != 0) {
        value *= std::pow(std::abs(p), 0.5 + d);
    }
    return d == 1 ? value * z : value;
}

Rational ZeroAnsatz::series_coefficient(unsigned k, const Rational& t) const
{
    return power(Rational(-h(t) / 2), static_cast<int>(k)) / factorial(k);
}

double ZeroAnsatz::burgers(double z, double t) const
{
    double v = m_.pole_term(t) * z;
    if (delta_.value() == 1) {
        if (z == 0.0) {
            throw DomainError("odd Burgers solution has a pole at z = 0");
        }
        v -= 1.0 / z;
    }
    return v;
}

Rational gamma_ratio_coeff(unsigned m, Parity delta)
{
    const Rational shift = Rational(3, 4) + make_rational(delta.value(), 2);
    Rational c(1);
    for (unsigned j = 0; j < m; ++j) {
        c /= shift + j;
    }
    return c / factorial(m);
}

GradedPoly one_ansatz_phi(unsigned m, Parity delta)
{
    const int d = delta.value();
    Rational c = factorial(4 * m + d) * gamma_ratio_coeff(m, delta) / power(Rational(16), static_cast<int>(m));
    if (m % 2 == 1) {
        c = -c;
    }
    Exponents e(2, 0);
    e[1] = m;
    return GradedPoly::monomial(Family::X, 2, e, c);
}

OneAnsatz::OneAnsatz(Parity delta, MobiusParam m1, MobiusParam m2, Rational r0, unsigned terms)
    : delta_(delta), m1_(std::move(m1)), m2_(std::move(m2)), r0_(std::move(r0)), terms_(terms)
{
}

Rational OneAnsatz::h(const Rational& t) const { return (m1_.pole_term(t) + m2_.pole_term(t)) / 2; }

double OneAnsatz::h(double t) const { return 0.5 * (m1_.pole_term(t) + m2_.pole_term(t)); }

Rational OneAnsatz::x2(const Rational& t) const
{
    const Rational diff = m1_.pole_term(t) - m2_.pole_term(t);
    return -diff * diff / 4;
}

double OneAnsatz::x2(double t) const
{
    const double diff = m1_.pole_term(t) - m2_.pole_term(t);
    return -0.25 * diff * diff;
}

double OneAnsatz::operator()(double z, double t) const
{
    const int d = delta_.value();
    const double p1 = m1_.pole_term(t);
    const double p2 = m2_.pole_term(t);
    double prefactor = std::exp(-0.25 * z * z * (p1 + p2) + r0_.get_d());
    const double power_exp = (1.0 + 2.0 * d) / 4.0;
    if (m1_.alpha() != 0) {
        prefactor *= std::pow(std::abs(p1), power_exp);
    }
    if (m2_.alpha() != 0) {
        prefactor *= std::pow(std::abs(p2), power_exp);
    }
    // sum_m gamma_m (-x_2 (z/2)^4)^m
    const double w = -x2(t) * std::pow(0.5 * z, 4);
    double term = 1.0;
    double sum = 1.0;
    const double shift = 0.75 + 0.5 * d;
    for (unsigned m = 1; m <= terms_; ++m) {
        term *= w / (static_cast<double>(m) * (shift + m - 1));
        sum += term;
    }
    return prefactor * (d == 1 ? z : 1.0) * sum;
}

double OneAnsatz::burgers(double z, double t) const
{
    const int d = delta_.value();
    if (d == 1 && z == 0.0) {
        throw DomainError("odd Burgers solution has a pole at z = 0");
    }
    // S = sum_m gamma_m (c z^4)^m with c = -x_2/16; v = h z - delta/z - S'/S.
    const double c = -x2(t) / 16.0;
    const double shift = 0.75 + 0.5 * d;
    double term = 1.0;
    double s = 1.0;
    double ds = 0.0;
    const double w = c * std::pow(z, 4);
    for (unsigned m = 1; m <= terms_; ++m) {
        term *= w / (static_cast<double>(m) * (shift + m - 1));
        s += term;
        ds += 4.0 * m * term;
    }
    double v = h(t) * z;
    if (d == 1) {
        v -= 1.0 / z;
    }
    if (z != 0.0) {
        v -= ds / (z * s);
    }
    return v;
}

Rational OneAnsatz::series_coefficient(unsigned k, const Rational& t) const
{
    const Rational half_h = -h(t) / 2;
    const Rational w = -x2(t) / 16;
    Rational sum(0);
    for (unsigned m = 0; 2 * m <= k; ++m) {
        const unsigned j = k - 2 * m;
        sum += power(half_h, static_cast<int>(j)) / factorial(j) * gamma_ratio_coeff(m, delta_) *
               power(w, static_cast<int>(m));
    }
    return sum;
}

ZeroAnsatz closed_form_0ansatz(Parity delta, const MobiusParam& m, const Rational& r0) { return {delta, m, r0}; }

OneAnsatz closed_form_1ansatz(Parity delta, const MobiusParam& m1, const MobiusParam& m2, const Rational& r0)
{
    return {delta, m1, m2, r0};
}

} // namespace heatansatz
