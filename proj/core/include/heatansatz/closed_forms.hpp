#ifndef HEATANSATZ_CLOSED_FORMS_HPP
#define HEATANSATZ_CLOSED_FORMS_HPP

#include <heatansatz/dynsys.hpp>

namespace heatansatz
{

/// Gaussian family
///   psi = |a/(a t - b)|^(1/2 + delta) exp(-a z^2 / (2(a t - b)) + r0) z^delta.
/// With a = 0 the profile is h = 0 and the power factor is dropped.
class ZeroAnsatz
{
public:
    ZeroAnsatz(Parity delta, MobiusParam m, Rational r0);

    Parity parity() const { return delta_; }
    const MobiusParam& param() const { return m_; }

    Rational h(const Rational& t) const { return m_.pole_term(t); }
    double h(double t) const { return m_.pole_term(t); }

    double operator()(double z, double t) const;

    /// Coefficient of z^(2k + delta) in exp(-r) psi, i.e. (-h/2)^k / k!.
    Rational series_coefficient(unsigned k, const Rational& t) const;

    /// Cole-Hopf image at mu = 1/2: a z / (a t - b) - delta / z.
    double burgers(double z, double t) const;

private:
    Parity delta_;
    MobiusParam m_;
    Rational r0_;
};

/// Gamma(3/4 + delta/2) / (m! Gamma(m + 3/4 + delta/2)) as an exact rational.
Rational gamma_ratio_coeff(unsigned m, Parity delta);

/// Phi_{2m} = (4m + delta)! gamma_m (-1)^m x_2^m / 16^m as an X-family polynomial.
GradedPoly one_ansatz_phi(unsigned m, Parity delta);

/// Product G(z,t) Phi(z; x_2(t)) of the 1-parameter family with
///   h = (p_1 + p_2)/2,  x_2 = -(p_1 - p_2)^2 / 4,  p_k = a_k/(a_k t - b_k).
class OneAnsatz
{
public:
    OneAnsatz(Parity delta, MobiusParam m1, MobiusParam m2, Rational r0, unsigned terms = 40);

    Parity parity() const { return delta_; }

    Rational h(const Rational& t) const;
    double h(double t) const;
    Rational x2(const Rational& t) const;
    double x2(double t) const;

    double operator()(double z, double t) const;

    /// Coefficient of z^(2k + delta) in exp(-r) psi, exactly.
    Rational series_coefficient(unsigned k, const Rational& t) const;

    /// Cole-Hopf image at mu = 1/2, -d/dz log psi, from the summed Gamma series.
    double burgers(double z, double t) const;

    RationalH profile() const { return RationalH({m1_, m2_}); }

private:
    Parity delta_;
    MobiusParam m1_;
    MobiusParam m2_;
    Rational r0_;
    unsigned terms_;
};

ZeroAnsatz closed_form_0ansatz(Parity delta, const MobiusParam& m, const Rational& r0);
OneAnsatz closed_form_1ansatz(Parity delta, const MobiusParam& m1, const MobiusParam& m2, const Rational& r0);

} // namespace heatansatz

#endif
