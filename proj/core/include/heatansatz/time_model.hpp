#ifndef HEATANSATZ_TIME_MODEL_HPP
#define HEATANSATZ_TIME_MODEL_HPP

#include <heatansatz/ansatz.hpp>
#include <heatansatz/dynsys.hpp>

#include <memory>
#include <utility>
#include <variant>
#include <vector>

namespace heatansatz
{

/// A numerically integrated trajectory of the heat dynamical system.
struct NumericTrajectory {
    std::vector<DynState<double>> states;
};

/// Where h(t) and the ansatz parameters come from.
using HSource = std::variant<RationalH, NumericTrajectory>;

/// How coefficient polynomials depend on time.
///
/// Coefficients are built as X-family polynomials in the state (x_1 = h,
/// x_2 .. x_{n+1}); lift() rewrites them in the model's own variables, where
/// differentiate() is d/dt and evaluate() substitutes the values at time t.
class TimeModel
{
public:
    virtual ~TimeModel() = default;

    virtual GradedPoly lift(const GradedPoly& state_poly) const = 0;
    virtual GradedPoly differentiate(const GradedPoly& lifted) const = 0;

    /// Exact evaluation is available for closed-form profiles only.
    virtual bool exact() const = 0;
    virtual Rational evaluate(const GradedPoly& lifted, const Rational& t) const = 0;
    virtual double evaluate(const GradedPoly& lifted, double t) const = 0;

    /// An antiderivative of h; r(t) = r0 - (delta + 1/2) * integral_of_h(t).
    virtual double integral_of_h(double t) const = 0;

    double h(double t) const;
};

/// Closed-form profile: variables are jets y_k, x_k(t) = D_{k-1}(jets).
/// The antiderivative of h is -1/(n+1) sum log|alpha/(alpha t - beta)|, so
/// exp(r) stays real on both sides of every pole.
class ClosedFormTime final : public TimeModel
{
public:
    explicit ClosedFormTime(RationalH h) : h_(std::move(h)) {}

    const RationalH& profile() const { return h_; }

    GradedPoly lift(const GradedPoly& state_poly) const override;
    GradedPoly differentiate(const GradedPoly& lifted) const override;
    bool exact() const override { return true; }
    Rational evaluate(const GradedPoly& lifted, const Rational& t) const override;
    double evaluate(const GradedPoly& lifted, double t) const override;
    double integral_of_h(double t) const override;

private:
    RationalH h_;
};

/// Numeric trajectory: variables are the state x_k, d/dt follows the vector
/// field, values between steps come from cubic Hermite interpolation and the
/// antiderivative of h from the trapezoid rule.
class TrajectoryTime final : public TimeModel
{
public:
    TrajectoryTime(const AnsatzSpec& spec, NumericTrajectory trajectory);

    GradedPoly lift(const GradedPoly& state_poly) const override;
    GradedPoly differentiate(const GradedPoly& lifted) const override;
    bool exact() const override { return false; }
    Rational evaluate(const GradedPoly& lifted, const Rational& t) const override;
    double evaluate(const GradedPoly& lifted, double t) const override;
    double integral_of_h(double t) const override;

    std::pair<double, double> time_range() const;
    std::vector<double> state_at(double t) const;

private:
    std::size_t segment(double t) const;

    unsigned dim_;
    std::vector<GradedPoly> field_;
    std::vector<DynState<double>> states_;
    std::vector<std::vector<double>> slopes_;
    std::vector<double> cumulative_h_;
    bool increasing_;
};

std::shared_ptr<const TimeModel> make_time_model(const AnsatzSpec& spec, const HSource& source);

/// r(t) = r0 - (delta + 1/2) * integral of h.
double r_of_t(const TimeModel& time, Parity delta, const Rational& r0, double t);

} // namespace heatansatz

#endif
