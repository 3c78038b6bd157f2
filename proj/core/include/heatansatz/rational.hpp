#ifndef HEATANSATZ_RATIONAL_HPP
#define HEATANSATZ_RATIONAL_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace heatansatz
{

/// Exact rational number. GMP keeps every value in lowest terms with a
/// positive denominator once canonicalize() has run; all helpers here do so.
using Rational = mpq_class;

/// Raised for mathematically invalid requests: poles, grading violations,
/// non-finite integrator states.
class DomainError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// Parses "3", "-3/4", "0.0625", "1e-3" or "-2.5E+2" into an exact rational.
/// Throws std::invalid_argument on malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

/// "p/q", or "p" when q == 1.
std::string to_string(const Rational& value);

Rational make_rational(long num, long den = 1);

/// n! as an exact rational.
Rational factorial(unsigned n);

/// base^exp with an integral (possibly negative) exponent.
Rational power(const Rational& base, int exp);

/// Absolute value, kept as a free function for symmetry with to_double.
Rational abs(const Rational& value);

inline double to_double(const Rational& value) { return value.get_d(); }

} // namespace heatansatz

#endif
