#ifndef HEATANSATZ_OPERATORS_HPP
#define HEATANSATZ_OPERATORS_HPP

#include <heatansatz/grpoly.hpp>

#include <vector>

namespace heatansatz
{

/// d/dt acting on jet polynomials: sum_s y_{s+1} d/dy_s.
/// The result declares one more variable than the input.
GradedPoly total_derivative(const GradedPoly& p);

/// L_k P = sum_s y_{s+1} dP/dy_s + 2k y_1 P. Any rational weight k is accepted.
GradedPoly apply_Lk(const Rational& k, const GradedPoly& p);

/// The Leibniz-rule annihilator: d/dy_1 - sum_s (s+1) s y_s d/dy_{s+1}.
GradedPoly apply_annihilator(const GradedPoly& p);

/// Euler operator -2 sum_s s y_s d/dy_s; multiplies a homogeneous P by its degree.
GradedPoly apply_euler(const GradedPoly& p);

/// Differential polynomials D_1 .. D_kmax; element [k-1] is D_k = Z_{k+1}.
/// D_k is homogeneous of degree -2(k+1) in y_1 .. y_{k+1}.
std::vector<GradedPoly> compute_Dk(unsigned k_max);

/// Z_k as a jet polynomial, with the conventions Z_0 = Z_1 = 0.
GradedPoly z_symbol(unsigned k);

/// A polynomial rewritten in the multiplicative basis {y_1, Z_2, Z_3, ...}.
/// `coords` is a Y-family polynomial in which variable 1 stands for y_1 and
/// variable k >= 2 stands for Z_k.
struct BasisDecomposition {
    GradedPoly coords;

    /// Substitutes the Z_k expansions back, reproducing the jet polynomial.
    GradedPoly expand() const;

    /// True if any monomial carries a y_1 factor.
    bool involves_y1() const;
};

/// Unique rewrite by leading-term elimination against y_1, Z_2 .. Z_m.
/// Throws DomainError for non-homogeneous input.
BasisDecomposition decompose_basis(const GradedPoly& p);

/// True iff the annihilator kills P. Both routes (direct application and the
/// y_1-free basis test) are evaluated; a disagreement throws std::logic_error.
/// Throws DomainError for non-homogeneous input.
bool check_BR_form(const GradedPoly& p);

} // namespace heatansatz

#endif
