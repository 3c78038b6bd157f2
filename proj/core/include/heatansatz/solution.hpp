#ifndef HEATANSATZ_SOLUTION_HPP
#define HEATANSATZ_SOLUTION_HPP

#include <heatansatz/ansatz.hpp>
#include <heatansatz/time_model.hpp>

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <vector>

namespace heatansatz
{

/// Multiplier exp(-G(t)) with G' = rate; turns a heat solution into a
/// solution of psi_t = psi_zz / 2 - rate(t) psi.
struct Gauge {
    std::function<double(double)> rate;
    std::function<double(double)> integral;

    /// Integrates `rate` from t_ref by adaptive Gauss-Kronrod quadrature.
    static Gauge from_rate(std::function<double(double)> rate, double t_ref = 0.0);
    static Gauge constant(double c, double t_ref = 0.0);
};

/// psi(z,t) = exp(-h z^2 / 2 + r) (z^delta + sum_{k>=2} Phi_k z^(2k+delta)/(2k+delta)!)
/// truncated after k = K, with r' = -(delta + 1/2) h (minus the gauge rate).
class SeriesSolution
{
public:
    SeriesSolution(Parity delta, std::shared_ptr<const TimeModel> time, Rational r0, PhiTable phi, unsigned K);

    Parity parity() const { return delta_; }
    const Rational& r0() const { return r0_; }
    unsigned truncation() const { return K_; }
    const PhiTable& phi() const { return phi_; }
    const TimeModel& time() const { return *time_; }
    std::shared_ptr<const TimeModel> time_ptr() const { return time_; }
    const std::optional<Gauge>& gauge() const { return gauge_; }

    /// Phi_k lifted into the time model's variables, k = 0 .. K.
    const std::vector<GradedPoly>& lifted_phi() const { return lifted_phi_; }

    /// u_k with psi_k(t) = exp(r(t)) u_k(t), where psi = sum_k psi_k z^(2k+delta)/(2k+delta)!.
    const std::vector<GradedPoly>& coefficient_polys() const { return coeffs_; }

    double h(double t) const { return time_->h(t); }
    double r(double t) const;
    double operator()(double z, double t) const;

    /// Coefficients of z^(2k+delta) in exp(-r(t)) psi(z,t), k = 0 .. K, exactly.
    std::vector<Rational> taylor_coefficients(const Rational& t) const;

    SeriesSolution with_gauge(Gauge g) const;

private:
    Parity delta_;
    std::shared_ptr<const TimeModel> time_;
    Rational r0_;
    PhiTable phi_;
    unsigned K_;
    std::vector<GradedPoly> lifted_phi_;
    std::vector<GradedPoly> coeffs_;
    std::optional<Gauge> gauge_;
};

/// Builds the Phi-table for the spec (general or reduced) and attaches the
/// time dependence. With a closed-form profile the state is x_k = D_{k-1}(h).
/// Throws std::invalid_argument when K < 2.
SeriesSolution assemble_psi(const AnsatzSpec& spec, const HSource& source, const Rational& r0, unsigned K = 10);

/// Same solution of psi_t = psi_zz/2 - f(t) psi: only r(t) changes.
SeriesSolution gauge_transform(const SeriesSolution& s, Gauge g);

/// Odd Burgers solution v = -2 mu d/dz log psi_mu, where psi_mu(z,t) = psi(z, 2 mu t).
/// Stored through the mu = 1/2 image
///   v(z,t) = -delta/z + h z - sum_{k>=2} Psi_k / (2 delta k + 1) z^(2k-1)/(2k-1)!,
/// with v_mu(z,t) = 2 mu v(z, 2 mu t).
class BurgersSolution
{
public:
    BurgersSolution(Parity delta, std::shared_ptr<const TimeModel> time, std::vector<GradedPoly> psi,
                    Rational mu = Rational(1, 2));

    Parity parity() const { return delta_; }
    const Rational& mu() const { return mu_; }
    const TimeModel& time() const { return *time_; }
    unsigned truncation() const { return static_cast<unsigned>(psi_.size()) - 1; }

    /// Psi_k in the time model's variables, k = 0 .. K (Psi_0 = Psi_1 = 0).
    const std::vector<GradedPoly>& psi() const { return psi_; }

    /// Laurent coefficients (power of z -> coefficient polynomial) of the mu = 1/2 image.
    std::map<int, GradedPoly> laurent() const;

    /// v_mu(z,t). Throws DomainError at z = 0 for odd parity.
    double operator()(double z, double t) const;

private:
    Parity delta_;
    std::shared_ptr<const TimeModel> time_;
    std::vector<GradedPoly> psi_;
    Rational mu_;
};

/// Laurent division of the ansatz series. Throws DomainError if the series vanishes.
BurgersSolution cole_hopf(const SeriesSolution& s, const Rational& mu = Rational(1, 2));

/// Psi_k (k = 0 .. K) as X-family polynomials from a Phi-table.
std::vector<GradedPoly> burgers_psi_from_phi(const PhiTable& phi);

} // namespace heatansatz

#endif
