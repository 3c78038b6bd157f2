#ifndef HEATANSATZ_ANSATZ_HPP
#define HEATANSATZ_ANSATZ_HPP

#include <heatansatz/grpoly.hpp>

#include <functional>
#include <span>
#include <vector>

namespace heatansatz
{

/// Parity of a solution in z: 0 for even, 1 for odd.
class Parity
{
public:
    explicit Parity(int delta);

    int value() const { return delta_; }
    friend bool operator==(Parity, Parity) = default;

private:
    int delta_;
};

/// Table of ansatz coefficients; entry k is Phi_k (or Y_k), homogeneous of
/// degree -2k, with Phi_0 = 1 and Phi_1 = 0.
struct PhiTable {
    Parity delta{0};
    std::vector<GradedPoly> entries;

    std::size_t size() const { return entries.size(); }
    const GradedPoly& operator[](std::size_t k) const { return entries.at(k); }
};

/// Defining data of a heat dynamical system.
///
/// General mode holds p_2 .. p_{n+2} over x_2 .. x_q (deg p_q = -2q). Reduced
/// mode holds the single top polynomial P_n over x_2 .. x_n (degree -2(n+2)).
/// Polynomials are X-family; x_1 never occurs in them.
class AnsatzSpec
{
public:
    enum class Mode { general, reduced };

    /// `p` lists p_2, p_3, ..., p_{n+2}. Throws DomainError on grading violations.
    static AnsatzSpec general(unsigned n, Parity delta, std::vector<GradedPoly> p);
    static AnsatzSpec reduced(unsigned n, Parity delta, GradedPoly top);

    unsigned n() const { return n_; }
    Parity parity() const { return delta_; }
    Mode mode() const { return mode_; }

    /// p_q for q in 2 .. n+2 (general mode, or the chain form of a reduced spec).
    const GradedPoly& p(unsigned q) const;

    /// p_{n+2} with x_{n+2} set to zero.
    GradedPoly capped_top() const;

    /// P_n of a reduced spec.
    const GradedPoly& top_polynomial() const;

    /// Reduced specs become the chain form p_k = x_k (k <= n+1), p_{n+2} = P_n.
    AnsatzSpec to_general() const;

private:
    AnsatzSpec(unsigned n, Parity delta, Mode mode) : n_(n), delta_(delta), mode_(mode) {}

    unsigned n_ = 0;
    Parity delta_{0};
    Mode mode_ = Mode::general;
    std::vector<GradedPoly> p_; // p_2 .. p_{n+2}
    GradedPoly top_;
};

/// A coefficient function's value and first derivative at a sample time.
struct ValueAndSlope {
    Rational value;
    Rational slope;
};

using TimeFunction = std::function<ValueAndSlope(const Rational& t)>;

/// Checks psi_k = 2 psi'_{k-1} for coefficient functions of the form
/// psi_k(t) = w(t) u_k(t) where w'/w = log_rate(t). `coeffs` supplies u_k.
/// An empty log_rate means w = 1. Exceptions thrown by the functions (poles)
/// propagate.
bool psi_recursion_check(std::span<const TimeFunction> coeffs, std::span<const Rational> t_samples,
                         const std::function<Rational(const Rational&)>& log_rate = {});

/// Y_0 .. Y_kmax over y_1 .. y_kmax.
PhiTable compute_Yk(Parity delta, unsigned k_max);

/// Q_0 .. Q_kmax as D-family polynomials (D_j standing for Z_{j+1});
/// Q_0 = Q_1 = 0 are placeholders.
std::vector<GradedPoly> compute_Qk(Parity delta, unsigned k_max);

/// Phi_0 .. Phi_qmax from a general-mode heat dynamical system.
PhiTable nansatz_phi(const AnsatzSpec& spec, unsigned q_max);

/// Phi_0 .. Phi_qmax of the reduced system with top polynomial P_n.
PhiTable reduced_phi(unsigned n, const GradedPoly& top, Parity delta, unsigned q_max);

/// X -> Y: x_1 -> y_1 and x_k -> D_{k-1} for k >= 2.
GradedPoly substitute_x_by_D(const GradedPoly& p);

/// D -> Y: D_k -> its jet polynomial.
GradedPoly substitute_D(const GradedPoly& p);

} // namespace heatansatz

#endif
