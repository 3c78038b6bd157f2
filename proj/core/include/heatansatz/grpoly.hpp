#ifndef HEATANSATZ_GRPOLY_HPP
#define HEATANSATZ_GRPOLY_HPP

#include <heatansatz/rational.hpp>

#include <cstddef>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace heatansatz
{

/// The three kinds of graded variables. They never mix inside one polynomial;
/// moving between families goes through substitute().
///
///   Y: jet variables y_k = h^(k-1)(t),      deg y_k = -2k
///   X: ansatz/state variables x_k,          deg x_k = -2k   (x_1 plays h)
///   D: basis symbols D_k (= Z_{k+1}),       deg D_k = -2(k+1)
///
/// Every family is indexed by subscript starting at 1.
enum class Family { Y, X, D };

char family_letter(Family f);
Family family_from_letter(std::string_view s);

/// |deg| of the variable with the given subscript.
int variable_weight(Family f, unsigned subscript);

/// Exponent vector; entry i belongs to subscript i + 1. Stored without
/// trailing zeros so that equal monomials compare equal.
using Exponents = std::vector<unsigned>;

class FamilyMismatch : public std::invalid_argument
{
public:
    FamilyMismatch(Family a, Family b);
};

/// Graded degree report. Zero is homogeneous of every degree.
struct Degree {
    enum class Kind { zero, homogeneous, mixed };
    Kind kind = Kind::zero;
    int value = 0;

    bool is_homogeneous() const { return kind != Kind::mixed; }
    bool matches(int d) const { return kind == Kind::zero || (kind == Kind::homogeneous && value == d); }
    friend bool operator==(const Degree&, const Degree&) = default;
};

/// Sparse polynomial with exact rational coefficients over one variable family.
class GradedPoly
{
public:
    using TermMap = std::map<Exponents, Rational>;

    GradedPoly() = default;
    GradedPoly(Family family, unsigned nvars);

    static GradedPoly constant(Family family, unsigned nvars, const Rational& c);
    static GradedPoly variable(Family family, unsigned nvars, unsigned subscript,
                               const Rational& c = Rational(1));
    static GradedPoly monomial(Family family, unsigned nvars, Exponents exps,
                               const Rational& c = Rational(1));

    Family family() const { return family_; }
    unsigned nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    /// Terms in storage order (plain lexicographic on exponent vectors).
    const TermMap& terms() const { return terms_; }

    /// Terms in canonical graded-lex order: larger |degree| first, then by
    /// exponent of the highest subscript (larger first), descending.
    std::vector<std::pair<Exponents, Rational>> canonical_terms() const;

    Rational coefficient(const Exponents& exps) const;

    /// Highest subscript that actually occurs; 0 for constants.
    unsigned max_subscript() const;

    /// Same terms, declared variable count changed. Throws if terms need more.
    GradedPoly with_nvars(unsigned nvars) const;

    void add_term(Exponents exps, const Rational& c);

    GradedPoly& operator+=(const GradedPoly& other);
    GradedPoly& operator-=(const GradedPoly& other);
    GradedPoly& operator*=(const Rational& c);

    friend GradedPoly operator+(GradedPoly a, const GradedPoly& b) { return a += b; }
    friend GradedPoly operator-(GradedPoly a, const GradedPoly& b) { return a -= b; }
    friend GradedPoly operator*(const GradedPoly& a, const GradedPoly& b);
    friend GradedPoly operator*(GradedPoly a, const Rational& c) { return a *= c; }
    friend GradedPoly operator*(const Rational& c, GradedPoly a) { return a *= c; }
    friend GradedPoly operator-(GradedPoly a) { return a *= Rational(-1); }

    /// Family and terms must agree; the declared variable count does not matter.
    friend bool operator==(const GradedPoly& a, const GradedPoly& b);

private:
    static void trim(Exponents& e);

    Family family_ = Family::Y;
    unsigned nvars_ = 0;
    TermMap terms_;
};

GradedPoly poly_add(const GradedPoly& a, const GradedPoly& b);
GradedPoly poly_mul(const GradedPoly& a, const GradedPoly& b);
GradedPoly poly_pow(const GradedPoly& a, unsigned exp);

/// Formal partial derivative by the variable with the given subscript.
/// The subscript must lie in 1..nvars.
GradedPoly poly_partial(const GradedPoly& a, unsigned subscript);

Degree poly_degree(const GradedPoly& a);

/// Graded degree of a single monomial (a non-positive number).
int monomial_degree(Family f, const Exponents& e);

/// Point of evaluation; entry k-1 is the value of the variable with subscript k
/// (for jets, h^(k-1)(t)).
template <typename T>
struct BasicJetPoint {
    std::vector<T> values;

    std::size_t size() const { return values.size(); }
    const T& operator[](std::size_t i) const { return values[i]; }
};

using JetPoint = BasicJetPoint<Rational>;
using NumericJetPoint = BasicJetPoint<double>;

/// Exact substitution value. Throws std::invalid_argument if the point is
/// shorter than the highest subscript used.
Rational poly_eval(const GradedPoly& a, std::span<const Rational> point);
double poly_eval(const GradedPoly& a, std::span<const double> point);

inline Rational poly_eval(const GradedPoly& a, const JetPoint& p) { return poly_eval(a, std::span<const Rational>(p.values)); }
inline double poly_eval(const GradedPoly& a, const NumericJetPoint& p) { return poly_eval(a, std::span<const double>(p.values)); }

/// Replaces the variable with subscript k by images[k-1]. All images must
/// share one family, which becomes the result's family. Variables with no
/// image (k > images.size()) must not occur.
GradedPoly substitute(const GradedPoly& a, std::span<const GradedPoly> images);

/// Canonical text, e.g. "y4 + 12*y1*y3 - 3/4*y2^2". Zero prints as "0".
std::string to_string(const GradedPoly& a);

/// Parses the text form produced by to_string (sums of monomials with an
/// optional rational coefficient). Variable letters must match the family.
GradedPoly parse_poly(Family family, std::string_view text, unsigned nvars = 0);

/// JSON form {"family": "Y", "terms": [{"exp": [...], "num": "...", "den": "..."}]}
/// with terms in canonical order; exp arrays have length nvars().
std::string to_json(const GradedPoly& a);
GradedPoly from_json(std::string_view json);

} // namespace heatansatz

#endif
