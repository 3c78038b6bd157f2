#ifndef HEATANSATZ_RESIDUALS_HPP
#define HEATANSATZ_RESIDUALS_HPP

#include <heatansatz/solution.hpp>

#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace heatansatz
{

using Field2D = std::function<double(double z, double t)>;

/// Evaluation grid plus the finite-difference spacings used for residuals.
struct GridSpec {
    std::vector<double> z;
    std::vector<double> t;
    double dz = 1e-3;
    double dt = 1e-3;

    static GridSpec uniform(double z_min, double z_max, std::size_t z_count, double t_min, double t_max,
                            std::size_t t_count, double dz = 1e-3, double dt = 1e-3);

    /// Throws std::invalid_argument for empty axes or non-positive spacings.
    void validate() const;
};

/// Evenly spaced values; a single point sits at `lo`.
std::vector<double> linspace(double lo, double hi, std::size_t count);

struct HeatResidualOptions {
    /// Diffusion coefficient of psi_t = mu psi_zz - f(t) psi.
    double mu = 0.5;
    /// Loss rate f(t); empty means zero.
    std::function<double(double)> loss_rate;
};

/// max |D_t psi - mu D_zz psi + f psi| over the grid with central differences.
/// Throws DomainError when psi is not finite at a stencil point.
double heat_residual_numeric(const Field2D& psi, const GridSpec& grid, const HeatResidualOptions& options = {});

/// max over k = 1 .. K and the samples of |u_k - 2 (u_{k-1}' + r' u_{k-1})|, where
/// psi_k = exp(r) u_k. This is the order-by-order heat equation divided by exp(r).
/// The exact overload needs a closed-form profile.
Rational heat_residual_series(const SeriesSolution& s, std::span<const Rational> t_samples);
double heat_residual_series(const SeriesSolution& s, std::span<const double> t_samples);

/// phi(z,t) = psi(z, 2 mu t), which solves psi_t = mu psi_zz when psi solves the heat equation.
Field2D rescale_to_mu(Field2D psi, double mu);

/// Laurent powers of v_t + v v_z - mu v_zz that the truncation fully determines.
int burgers_trusted_power(const BurgersSolution& b);

/// Series mode: max |coefficient| of z^p in v_t + v v_z - mu v_zz over trusted
/// powers p and sample times, evaluated exactly.
Rational burgers_residual_series(const BurgersSolution& b, const Rational& mu, std::span<const Rational> t_samples);

/// Grid mode: central differences; the grid must avoid z = 0 for odd parity.
double burgers_residual_grid(const Field2D& v, double mu, const GridSpec& grid);
double burgers_residual_grid(const BurgersSolution& b, double mu, const GridSpec& grid);

/// {"max_residual": ..., "grid": {...}, "mode": "..."} with 17 significant digits.
std::string residual_report_json(double max_residual, const GridSpec& grid, std::string_view mode);

/// max |f(-z,t) - sign f(z,t)| over the grid.
double parity_defect(const Field2D& f, const GridSpec& grid, int sign);

} // namespace heatansatz

#endif
