#ifndef HEATANSATZ_DYNSYS_HPP
#define HEATANSATZ_DYNSYS_HPP

#include <heatansatz/ansatz.hpp>
#include <heatansatz/grpoly.hpp>

#include <functional>
#include <span>
#include <vector>

namespace heatansatz
{

/// Point on a trajectory of a (reduced) heat dynamical system. x[0] is x_1,
/// which plays the role of h(t).
template <typename T>
struct DynState {
    T t{};
    std::vector<T> x;
};

/// Projective pair (alpha : beta) describing the elementary pole alpha / (alpha t - beta).
class MobiusParam
{
public:
    MobiusParam(Rational alpha, Rational beta);

    const Rational& alpha() const { return alpha_; }
    const Rational& beta() const { return beta_; }

    /// alpha / (alpha t - beta); zero when alpha == 0. Throws DomainError at the pole.
    Rational pole_term(const Rational& t) const;
    double pole_term(double t) const;

    /// Projective equality: (a:b) ~ (ca:cb).
    friend bool operator==(const MobiusParam& a, const MobiusParam& b);

private:
    Rational alpha_;
    Rational beta_;
};

/// Parses "a:b" with rational components.
MobiusParam parse_mobius(std::string_view text);

/// h(t) = (1/(n+1)) sum_k alpha_k / (alpha_k t - beta_k) with closed-form derivatives.
class RationalH
{
public:
    explicit RationalH(std::vector<MobiusParam> poles);

    /// Number of parameters n; the profile has n + 1 pole terms.
    unsigned n() const { return static_cast<unsigned>(poles_.size()) - 1; }
    const std::vector<MobiusParam>& poles() const { return poles_; }

    /// (h, h', ..., h^(m-1)) at t. Throws DomainError at a pole.
    JetPoint jets(const Rational& t, unsigned m) const;
    NumericJetPoint jets(double t, unsigned m) const;

    /// State of the reduced system along this profile: x_1 = h, x_k = D_{k-1}(jets),
    /// for k = 1 .. n_state.
    DynState<Rational> state(const Rational& t, unsigned n_state) const;
    DynState<double> state(double t, unsigned n_state) const;

private:
    std::vector<MobiusParam> poles_;
};

/// Right-hand side of the heat dynamical system (general spec, or a reduced
/// spec via its chain form). Components are
///   x_1' = p_2 - x_1^2,  x_k' = p_{k+1} - 2k x_1 x_k,  top line with p_{n+2}(.., 0).
std::vector<Rational> hds_vector_field(const AnsatzSpec& spec, const DynState<Rational>& s);
std::vector<double> hds_vector_field(const AnsatzSpec& spec, const DynState<double>& s);

/// Components of the vector field as X-family polynomials in x_1 .. x_{n+1}.
std::vector<GradedPoly> hds_field_polynomials(const AnsatzSpec& spec);

/// Reduced system: x_k' = x_{k+1} - 2k x_1 x_k for k <= n, top P_n - 2(n+1) x_1 x_{n+1}.
std::vector<Rational> rhds_vector_field(unsigned n, const GradedPoly& top, const DynState<Rational>& s);
std::vector<double> rhds_vector_field(unsigned n, const GradedPoly& top, const DynState<double>& s);

/// dx/dt = f(t, x) written into the output span.
using VectorField = std::function<void(double t, std::span<const double> x, std::span<double> dxdt)>;

VectorField make_field(const AnsatzSpec& spec);

struct IntegratorOptions {
    /// Abort when any |x_k| exceeds this bound (the state is running into a pole).
    double blowup_bound = 1e12;
};

/// Raised by integrate() when the state stops being finite or bounded.
class NonFiniteState : public DomainError
{
public:
    NonFiniteState(double t, const std::string& what);
    double time() const { return t_; }

private:
    double t_;
};

/// Classical fixed-step RK4 from s0 to t_end (either direction). The last step
/// is shortened to land exactly on t_end. Returns every step including s0.
std::vector<DynState<double>> integrate(const VectorField& field, const DynState<double>& s0, double t_end,
                                        double step, const IntegratorOptions& options = {});

/// D_{n+1} - P_n evaluated at the jets, with P_n in D-family (D_k slots) or
/// X-family (x_k slots filled by D_{k-1}). Needs at least n + 2 jets.
Rational ode_residual(unsigned n, const GradedPoly& top, const JetPoint& jets);

/// y''' + 3 y y'' + 3 y'^2 + 3 y^2 y' for jets (y, y', y'', y''').
Rational chazy4_residual(const JetPoint& y_jets);

} // namespace heatansatz

#endif
