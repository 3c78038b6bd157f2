#include <heatansatz/solution.hpp>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <cmath>
#include <stdexcept>

namespace heatansatz
{

Gauge Gauge::from_rate(std::function<double(double)> rate, double t_ref)
{
    Gauge g;
    g.rate = rate;
    g.integral = [rate, t_ref](double t) {
        if (t == t_ref) {
            return 0.0;
        }
        return boost::math::quadrature::gauss_kronrod<double, 31>::integrate(rate, t_ref, t, 15, 1e-14);
    };
    return g;
}

Gauge Gauge::constant(double c, double t_ref)
{
    Gauge g;
    g.rate = [c](double) { return c; };
    g.integral = [c, t_ref](double t) { return c * (t - t_ref); };
    return g;
}

SeriesSolution::SeriesSolution(Parity delta, std::shared_ptr<const TimeModel> time, Rational r0, PhiTable phi,
                               unsigned K)
    : delta_(delta), time_(std::move(time)), r0_(std::move(r0)), phi_(std::move(phi)), K_(K)
{
    if (K_ < 2) {
        throw std::invalid_argument("truncation order must be at least 2");
    }
    if (phi_.size() < K_ + 1) {
        throw std::invalid_argument("Phi-table is shorter than the truncation order");
    }
    if (!(phi_.delta == delta_)) {
        throw std::invalid_argument("Phi-table parity does not match the solution parity");
    }
    const int d = delta_.value();
    const unsigned nvars = std::max(1U, phi_[0].nvars());
    const GradedPoly half_x1 = GradedPoly::variable(Family::X, nvars, 1, Rational(-1, 2));

    // (-x1/2)^j / j!
    std::vector<GradedPoly> gauss;
    gauss.push_back(GradedPoly::constant(Family::X, nvars, Rational(1)));
    for (unsigned j = 1; j <= K_; ++j) {
        gauss.push_back(gauss.back() * half_x1 * (Rational(1) / Rational(j)));
    }

    for (unsigned k = 0; k <= K_; ++k) {
        lifted_phi_.push_back(time_->lift(phi_[k]));
        GradedPoly u(Family::X, nvars);
        for (unsigned j = 0; j <= k; ++j) {
            const unsigned i = k - j;
            u += gauss[j] * phi_[i] * (Rational(1) / factorial(2 * i + d));
        }
        u *= factorial(2 * k + d);
        coeffs_.push_back(time_->lift(u));
    }
}

double SeriesSolution::r(double t) const
{
    double value = r_of_t(*time_, delta_, r0_, t);
    if (gauge_) {
        value -= gauge_->integral(t);
    }
    return value;
}

double SeriesSolution::operator()(double z, double t) const
{
    const int d = delta_.value();
    const double z2 = z * z;
    double sum = 0.0;
    double zpow = d == 1 ? z : 1.0;
    double fact = 1.0; // (2k + delta)!
    for (unsigned k = 0; k <= K_; ++k) {
        if (k > 0) {
            zpow *= z2;
            fact *= static_cast<double>(2 * k + d - 1) * static_cast<double>(2 * k + d);
        }
        if (lifted_phi_[k].is_zero()) {
            continue;
        }
        sum += time_->evaluate(lifted_phi_[k], t) * zpow / fact;
    }
    return std::exp(r(t) - 0.5 * h(t) * z2) * sum;
}

std::vector<Rational> SeriesSolution::taylor_coefficients(const Rational& t) const
{
    const int d = delta_.value();
    std::vector<Rational> out;
    out.reserve(K_ + 1);
    for (unsigned k = 0; k <= K_; ++k) {
        out.push_back(time_->evaluate(coeffs_[k], t) / factorial(2 * k + d));
    }
    return out;
}

SeriesSolution SeriesSolution::with_gauge(Gauge g) const
{
    SeriesSolution s = *this;
    if (s.gauge_) {
        Gauge inner = *s.gauge_;
        Gauge combined;
        combined.rate = [inner, g](double t) { return inner.rate(t) + g.rate(t); };
        combined.integral = [inner, g](double t) { return inner.integral(t) + g.integral(t); };
        s.gauge_ = std::move(combined);
    } else {
        s.gauge_ = std::move(g);
    }
    return s;
}

SeriesSolution assemble_psi(const AnsatzSpec& spec, const HSource& source, const Rational& r0, unsigned K)
{
    if (K < 2) {
        throw std::invalid_argument("truncation order must be at least 2");
    }
    PhiTable phi = spec.mode() == AnsatzSpec::Mode::general
                       ? nansatz_phi(spec, K)
                       : reduced_phi(spec.n(), spec.top_polynomial(), spec.parity(), K);
    return SeriesSolution(spec.parity(), make_time_model(spec, source), r0, std::move(phi), K);
}

SeriesSolution gauge_transform(const SeriesSolution& s, Gauge g) { return s.with_gauge(std::move(g)); }

std::vector<GradedPoly> burgers_psi_from_phi(const PhiTable& phi)
{
    const unsigned K = static_cast<unsigned>(phi.size()) - 1;
    const int d = phi.delta.value();
    const unsigned nvars = std::max(1U, phi[0].nvars());
    if (phi[0] != GradedPoly::constant(Family::X, nvars, Rational(1))) {
        throw DomainError("Cole-Hopf needs the normalised series z^delta (1 + ...)");
    }
    // F(w) = sum a_k w^k with w = z^2, G = F'/F.
    std::vector<GradedPoly> a;
    for (unsigned k = 0; k <= K; ++k) {
        a.push_back(phi[k] * (Rational(1) / factorial(2 * k + d)));
    }
    std::vector<GradedPoly> g;
    for (unsigned j = 0; j + 1 <= K; ++j) {
        GradedPoly gj = a[j + 1] * Rational(static_cast<long>(j + 1));
        for (unsigned i = 1; i <= j; ++i) {
            gj -= a[i] * g[j - i];
        }
        g.push_back(gj.with_nvars(std::max(nvars, gj.max_subscript())));
    }
    std::vector<GradedPoly> psi;
    psi.push_back(GradedPoly(Family::X, nvars));
    for (unsigned k = 1; k <= K; ++k) {
        const long kk = static_cast<long>(k);
        psi.push_back(g[k - 1] * (Rational(2 * (2 * d * kk + 1)) * factorial(2 * k - 1)));
    }
    return psi;
}

BurgersSolution::BurgersSolution(Parity delta, std::shared_ptr<const TimeModel> time, std::vector<GradedPoly> psi,
                                 Rational mu)
    : delta_(delta), time_(std::move(time)), psi_(std::move(psi)), mu_(std::move(mu))
{
    if (mu_ == 0) {
        throw DomainError("Burgers viscosity mu must be nonzero");
    }
    if (psi_.size() < 2) {
        throw std::invalid_argument("Burgers solution needs Psi_0 and Psi_1 at least");
    }
}

std::map<int, GradedPoly> BurgersSolution::laurent() const
{
    const int d = delta_.value();
    const GradedPoly h = time_->lift(GradedPoly::variable(Family::X, 1, 1));
    std::map<int, GradedPoly> v;
    if (d == 1) {
        v.emplace(-1, GradedPoly::constant(h.family(), h.nvars(), Rational(-1)));
    }
    v.emplace(1, h);
    for (unsigned k = 2; k < psi_.size(); ++k) {
        const long kk = static_cast<long>(k);
        const Rational scale = Rational(-1) / (Rational(2 * d * kk + 1) * factorial(2 * k - 1));
        GradedPoly c = psi_[k] * scale;
        if (!c.is_zero()) {
            v.emplace(static_cast<int>(2 * k - 1), std::move(c));
        }
    }
    return v;
}

double BurgersSolution::operator()(double z, double t) const
{
    const int d = delta_.value();
    if (d == 1 && z == 0.0) {
        throw DomainError("odd Burgers solution has a pole at z = 0");
    }
    const double m = mu_.get_d();
    const double s = 2.0 * m * t;
    double v = time_->h(s) * z;
    if (d == 1) {
        v -= 1.0 / z;
    }
    double zpow = z;
    double fact = 1.0; // (2k-1)!
    for (unsigned k = 2; k < psi_.size(); ++k) {
        zpow *= z * z;
        fact *= static_cast<double>(2 * k - 2) * static_cast<double>(2 * k - 1);
        if (psi_[k].is_zero()) {
            continue;
        }
        v -= time_->evaluate(psi_[k], s) / (2.0 * d * k + 1.0) * zpow / fact;
    }
    return 2.0 * m * v;
}

BurgersSolution cole_hopf(const SeriesSolution& s, const Rational& mu)
{
    std::vector<GradedPoly> psi = burgers_psi_from_phi(s.phi());
    for (auto& p : psi) {
        p = s.time().lift(p);
    }
    return BurgersSolution(s.parity(), s.time_ptr(), std::move(psi), mu);
}

} // namespace heatansatz
