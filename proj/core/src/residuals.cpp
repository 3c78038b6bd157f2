#include <heatansatz/csv.hpp>
#include <heatansatz/residuals.hpp>

#include <algorithm>
#include <cmath>
#include <sstream>

namespace heatansatz
{

std::vector<double> linspace(double lo, double hi, std::size_t count)
{
    std::vector<double> out;
    out.reserve(count);
    if (count == 1) {
        out.push_back(lo);
        return out;
    }
    for (std::size_t i = 0; i < count; ++i) {
        out.push_back(lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(count - 1));
    }
    return out;
}

GridSpec GridSpec::uniform(double z_min, double z_max, std::size_t z_count, double t_min, double t_max,
                           std::size_t t_count, double dz, double dt)
{
    GridSpec g;
    g.z = linspace(z_min, z_max, z_count);
    g.t = linspace(t_min, t_max, t_count);
    g.dz = dz;
    g.dt = dt;
    g.validate();
    return g;
}

void GridSpec::validate() const
{
    if (z.empty() || t.empty()) {
        throw std::invalid_argument("grid needs at least one z and one t value");
    }
    if (!(dz > 0.0) || !(dt > 0.0)) {
        throw std::invalid_argument("finite-difference spacings must be positive");
    }
}

namespace
{

double checked(double value, double z, double t)
{
    if (!std::isfinite(value)) {
        std::ostringstream os;
        os.precision(17);
        os << "non-finite value " << value << " at z = " << z << ", t = " << t;
        throw DomainError(os.str());
    }
    return value;
}

} // namespace

double heat_residual_numeric(const Field2D& psi, const GridSpec& grid, const HeatResidualOptions& options)
{
    grid.validate();
    double worst = 0.0;
    for (const double t : grid.t) {
        const double f = options.loss_rate ? options.loss_rate(t) : 0.0;
        for (const double z : grid.z) {
            const double c = checked(psi(z, t), z, t);
            const double zp = checked(psi(z + grid.dz, t), z + grid.dz, t);
            const double zm = checked(psi(z - grid.dz, t), z - grid.dz, t);
            const double tp = checked(psi(z, t + grid.dt), z, t + grid.dt);
            const double tm = checked(psi(z, t - grid.dt), z, t - grid.dt);
            const double psi_t = (tp - tm) / (2.0 * grid.dt);
            const double psi_zz = (zp - 2.0 * c + zm) / (grid.dz * grid.dz);
            worst = std::max(worst, std::abs(psi_t - options.mu * psi_zz + f * c));
        }
    }
    return worst;
}

namespace
{

std::vector<GradedPoly> heat_defects(const SeriesSolution& s)
{
    const TimeModel& time = s.time();
    const GradedPoly x1 = time.lift(GradedPoly::variable(Family::X, 1, 1));
    const Rational rate(2 * s.parity().value() + 1); // -2 r' = (2 delta + 1) h
    const auto& u = s.coefficient_polys();
    std::vector<GradedPoly> defects;
    for (std::size_t k = 1; k < u.size(); ++k) {
        GradedPoly e = u[k];
        e -= Rational(2) * time.differentiate(u[k - 1]);
        e += rate * (x1 * u[k - 1]);
        defects.push_back(std::move(e));
    }
    return defects;
}

} // namespace

Rational heat_residual_series(const SeriesSolution& s, std::span<const Rational> t_samples)
{
    if (!s.time().exact()) {
        throw std::logic_error("exact series residual needs a closed-form profile");
    }
    const auto defects = heat_defects(s);
    Rational worst(0);
    for (const Rational& t : t_samples) {
        for (const auto& e : defects) {
            worst = std::max(worst, abs(s.time().evaluate(e, t)));
        }
    }
    return worst;
}

double heat_residual_series(const SeriesSolution& s, std::span<const double> t_samples)
{
    const auto defects = heat_defects(s);
    double worst = 0.0;
    for (const double t : t_samples) {
        for (const auto& e : defects) {
            worst = std::max(worst, std::abs(s.time().evaluate(e, t)));
        }
    }
    return worst;
}

Field2D rescale_to_mu(Field2D psi, double mu)
{
    if (mu == 0.0) {
        throw DomainError("rescaling needs mu != 0");
    }
    return [psi = std::move(psi), mu](double z, double t) { return psi(z, 2.0 * mu * t); };
}

int burgers_trusted_power(const BurgersSolution& b) { return 2 * static_cast<int>(b.truncation()) - 3; }

namespace
{

using Laurent = std::map<int, GradedPoly>;

void accumulate(Laurent& into, int power, const GradedPoly& c)
{
    if (c.is_zero()) {
        return;
    }
    auto it = into.find(power);
    if (it == into.end()) {
        into.emplace(power, c);
    } else {
        it->second += c;
    }
}

Laurent d_dz(const Laurent& v)
{
    Laurent out;
    for (const auto& [p, c] : v) {
        if (p != 0) {
            accumulate(out, p - 1, c * Rational(p));
        }
    }
    return out;
}

Laurent multiply(const Laurent& a, const Laurent& b, int max_power)
{
    Laurent out;
    for (const auto& [pa, ca] : a) {
        for (const auto& [pb, cb] : b) {
            if (pa + pb <= max_power) {
                accumulate(out, pa + pb, ca * cb);
            }
        }
    }
    return out;
}

} // namespace

Rational burgers_residual_series(const BurgersSolution& b, const Rational& mu, std::span<const Rational> t_samples)
{
    const TimeModel& time = b.time();
    if (!time.exact()) {
        throw std::logic_error("exact Burgers residual needs a closed-form profile");
    }
    const int trusted = burgers_trusted_power(b);
    const Laurent v = b.laurent();
    Laurent v_s;
    for (const auto& [p, c] : v) {
        accumulate(v_s, p, time.differentiate(c));
    }
    const Laurent v_z = d_dz(v);
    const Laurent v_zz = d_dz(v_z);
    Laurent a = multiply(v, v_z, trusted);
    for (const auto& [p, c] : v_s) {
        accumulate(a, p, c);
    }

    // v_mu(z,t) = 2m v(z, 2m t):  R = 4 m^2 (v_s + v v_z) - 2 m mu v_zz at s = 2 m t.
    const Rational& m = b.mu();
    const Rational wa = 4 * m * m;
    const Rational wb = 2 * m * mu;
    Laurent residual;
    for (const auto& [p, c] : a) {
        if (p <= trusted) {
            accumulate(residual, p, c * wa);
        }
    }
    for (const auto& [p, c] : v_zz) {
        if (p <= trusted) {
            accumulate(residual, p, c * Rational(-wb));
        }
    }

    Rational worst(0);
    for (const Rational& t : t_samples) {
        const Rational s = 2 * m * t;
        for (const auto& [p, c] : residual) {
            worst = std::max(worst, abs(time.evaluate(c, s)));
        }
    }
    return worst;
}

double burgers_residual_grid(const Field2D& v, double mu, const GridSpec& grid)
{
    grid.validate();
    double worst = 0.0;
    for (const double t : grid.t) {
        for (const double z : grid.z) {
            const double c = checked(v(z, t), z, t);
            const double zp = checked(v(z + grid.dz, t), z + grid.dz, t);
            const double zm = checked(v(z - grid.dz, t), z - grid.dz, t);
            const double tp = checked(v(z, t + grid.dt), z, t + grid.dt);
            const double tm = checked(v(z, t - grid.dt), z, t - grid.dt);
            const double v_t = (tp - tm) / (2.0 * grid.dt);
            const double v_z = (zp - zm) / (2.0 * grid.dz);
            const double v_zz = (zp - 2.0 * c + zm) / (grid.dz * grid.dz);
            worst = std::max(worst, std::abs(v_t + c * v_z - mu * v_zz));
        }
    }
    return worst;
}

double burgers_residual_grid(const BurgersSolution& b, double mu, const GridSpec& grid)
{
    if (b.parity().value() == 1) {
        for (const double z : grid.z) {
            if (std::abs(z) <= grid.dz) {
                throw DomainError("grid touches the pole of the odd Burgers solution at z = 0");
            }
        }
    }
    return burgers_residual_grid([&b](double z, double t) { return b(z, t); }, mu, grid);
}

std::string residual_report_json(double max_residual, const GridSpec& grid, std::string_view mode)
{
    std::string out = "{\"max_residual\": " + format_double(max_residual) + ", \"grid\": {";
    out += "\"z_min\": " + format_double(grid.z.empty() ? 0.0 : *std::min_element(grid.z.begin(), grid.z.end()));
    out += ", \"z_max\": " + format_double(grid.z.empty() ? 0.0 : *std::max_element(grid.z.begin(), grid.z.end()));
    out += ", \"z_count\": " + std::to_string(grid.z.size());
    out += ", \"t\": [";
    for (std::size_t i = 0; i < grid.t.size(); ++i) {
        if (i > 0) {
            out += ", ";
        }
        out += format_double(grid.t[i]);
    }
    out += "], \"dz\": " + format_double(grid.dz) + ", \"dt\": " + format_double(grid.dt) + "}";
    out += ", \"mode\": \"" + std::string(mode) + "\"}";
    return out;
}

double parity_defect(const Field2D& f, const GridSpec& grid, int sign)
{
    double worst = 0.0;
    for (const double t : grid.t) {
        for (const double z : grid.z) {
            worst = std::max(worst, std::abs(f(-z, t) - sign * f(z, t)));
        }
    }
    return worst;
}

} // namespace heatansatz
