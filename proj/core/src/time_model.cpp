#include <heatansatz/operators.hpp>
#include <heatansatz/time_model.hpp>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace heatansatz
{

double TimeModel::h(double t) const
{
    return evaluate(lift(GradedPoly::variable(Family::X, 1, 1)), t);
}

GradedPoly ClosedFormTime::lift(const GradedPoly& state_poly) const { return substitute_x_by_D(state_poly); }

GradedPoly ClosedFormTime::differentiate(const GradedPoly& lifted) const { return total_derivative(lifted); }

Rational ClosedFormTime::evaluate(const GradedPoly& lifted, const Rational& t) const
{
    return poly_eval(lifted, h_.jets(t, std::max(1U, lifted.max_subscript())));
}

double ClosedFormTime::evaluate(const GradedPoly& lifted, double t) const
{
    return poly_eval(lifted, h_.jets(t, std::max(1U, lifted.max_subscript())));
}

double ClosedFormTime::integral_of_h(double t) const
{
    double sum = 0.0;
    for (const auto& p : h_.poles()) {
        if (p.alpha() != 0) {
            sum -= std::log(std::abs(p.pole_term(t)));
        }
    }
    return sum / static_cast<double>(h_.poles().size());
}

TrajectoryTime::TrajectoryTime(const AnsatzSpec& spec, NumericTrajectory trajectory)
    : dim_(spec.n() + 1), field_(hds_field_polynomials(spec)), states_(std::move(trajectory.states))
{
    if (states_.size() < 2) {
        throw std::invalid_argument("a trajectory needs at least two states");
    }
    for (const auto& s : states_) {
        if (s.x.size() != dim_) {
            throw std::invalid_argument("trajectory state dimension does not match the spec");
        }
    }
    increasing_ = states_.back().t > states_.front().t;
    for (std::size_t i = 1; i < states_.size(); ++i) {
        if ((states_[i].t > states_[i - 1].t) != increasing_) {
            throw std::invalid_argument("trajectory times must be strictly monotone");
        }
    }
    slopes_.reserve(states_.size());
    for (const auto& s : states_) {
        std::vector<double> d(dim_);
        for (unsigned k = 0; k < dim_; ++k) {
            d[k] = poly_eval(field_[k], std::span<const double>(s.x));
        }
        slopes_.push_back(std::move(d));
    }
    cumulative_h_.resize(states_.size(), 0.0);
    for (std::size_t i = 1; i < states_.size(); ++i) {
        const double dt = states_[i].t - states_[i - 1].t;
        cumulative_h_[i] = cumulative_h_[i - 1] + 0.5 * dt * (states_[i].x[0] + states_[i - 1].x[0]);
    }
}

GradedPoly TrajectoryTime::lift(const GradedPoly& state_poly) const
{
    if (state_poly.family() != Family::X) {
        throw FamilyMismatch(Family::X, state_poly.family());
    }
    return state_poly.with_nvars(std::max(dim_, state_poly.max_subscript()));
}

GradedPoly TrajectoryTime::differentiate(const GradedPoly& lifted) const
{
    GradedPoly out(Family::X, dim_);
    const GradedPoly p = lifted.with_nvars(std::max(dim_, lifted.max_subscript()));
    for (unsigned k = 1; k <= dim_; ++k) {
        out += field_[k - 1] * poly_partial(p, k);
    }
    return out;
}

Rational TrajectoryTime::evaluate(const GradedPoly&, const Rational&) const
{
    throw std::logic_error("exact evaluation needs a closed-form profile, not a numeric trajectory");
}

double TrajectoryTime::evaluate(const GradedPoly& lifted, double t) const
{
    const std::vector<double> x = state_at(t);
    return poly_eval(lifted, std::span<const double>(x));
}

std::pair<double, double> TrajectoryTime::time_range() const
{
    const double a = states_.front().t;
    const double b = states_.back().t;
    return {std::min(a, b), std::max(a, b)};
}

std::size_t TrajectoryTime::segment(double t) const
{
    const auto [lo, hi] = time_range();
    const double slack = 1e-12 * std::max(1.0, std::abs(hi - lo));
    if (!(t >= lo - slack && t <= hi + slack)) {
        throw DomainError("t = " + std::to_string(t) + " lies outside the integrated trajectory");
    }
    auto cmp = [this](const DynState<double>& s, double value) { return increasing_ ? s.t < value : s.t > value; };
    auto it = std::lower_bound(states_.begin(), states_.end(), t, cmp);
    std::size_t i = static_cast<std::size_t>(it - states_.begin());
    if (i == 0) {
        return 0;
    }
    return std::min(i - 1, states_.size() - 2);
}

std::vector<double> TrajectoryTime::state_at(double t) const
{
    const std::size_t i = segment(t);
    const auto& a = states_[i];
    const auto& b = states_[i + 1];
    const double h = b.t - a.t;
    const double s = (t - a.t) / h;
    const double s2 = s * s;
    const double s3 = s2 * s;
    const double h00 = 2 * s3 - 3 * s2 + 1;
    const double h10 = s3 - 2 * s2 + s;
    const double h01 = -2 * s3 + 3 * s2;
    const double h11 = s3 - s2;
    std::vector<double> x(dim_);
    for (unsigned k = 0; k < dim_; ++k) {
        x[k] = h00 * a.x[k] + h10 * h * slopes_[i][k] + h01 * b.x[k] + h11 * h * slopes_[i + 1][k];
    }
    return x;
}

double TrajectoryTime::integral_of_h(double t) const
{
    const std::size_t i = segment(t);
    const double x1 = state_at(t)[0];
    return cumulative_h_[i] + 0.5 * (t - states_[i].t) * (states_[i].x[0] + x1);
}

std::shared_ptr<const TimeModel> make_time_model(const AnsatzSpec& spec, const HSource& source)
{
    if (const auto* h = std::get_if<RationalH>(&source)) {
        return std::make_shared<ClosedFormTime>(*h);
    }
    return std::make_shared<TrajectoryTime>(spec, std::get<NumericTrajectory>(source));
}

double r_of_t(const TimeModel& time, Parity delta, const Rational& r0, double t)
{
    return r0.get_d() - (delta.value() + 0.5) * time.integral_of_h(t);
}

} // namespace heatansatz
