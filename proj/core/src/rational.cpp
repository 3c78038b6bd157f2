#include <heatansatz/rational.hpp>

#include <cctype>
#include <cstdlib>

namespace heatansatz
{

namespace
{

mpz_class parse_integer(std::string_view digits, std::string_view original)
{
    if (digits.empty()) {
        throw std::invalid_argument("malformed rational: '" + std::string(original) + "'");
    }
    for (char c : digits) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            throw std::invalid_argument("malformed rational: '" + std::string(original) + "'");
        }
    }
    return mpz_class(std::string(digits), 10);
}

mpz_class pow10(unsigned long e)
{
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
    return r;
}

} // namespace

Rational parse_rational(std::string_view text)
{
    const std::string_view original = text;
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) {
        text.remove_prefix(1);
    }
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) {
        text.remove_suffix(1);
    }
    bool negative = false;
    if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
        negative = text.front() == '-';
        text.remove_prefix(1);
    }

    Rational result;
    if (const auto slash = text.find('/'); slash != std::string_view::npos) {
        const mpz_class num = parse_integer(text.substr(0, slash), original);
        const mpz_class den = parse_integer(text.substr(slash + 1), original);
        if (den == 0) {
            throw std::invalid_argument("zero denominator in '" + std::string(original) + "'");
        }
        result = Rational(num, den);
    } else {
        long exponent = 0;
        if (const auto e = text.find_first_of("eE"); e != std::string_view::npos) {
            std::string_view exp_text = text.substr(e + 1);
            bool exp_negative = false;
            if (!exp_text.empty() && (exp_text.front() == '-' || exp_text.front() == '+')) {
                exp_negative = exp_text.front() == '-';
                exp_text.remove_prefix(1);
            }
            const mpz_class mag = parse_integer(exp_text, original);
            if (!mag.fits_slong_p() || mag > 4096) {
                throw std::invalid_argument("exponent out of range in '" + std::string(original) + "'");
            }
            exponent = exp_negative ? -mag.get_si() : mag.get_si();
            text = text.substr(0, e);
        }
        std::string digits;
        long fraction_digits = 0;
        if (const auto dot = text.find('.'); dot != std::string_view::npos) {
            const std::string_view int_part = text.substr(0, dot);
            const std::string_view frac_part = text.substr(dot + 1);
            if (int_part.empty() && frac_part.empty()) {
                throw std::invalid_argument("malformed rational: '" + std::string(original) + "'");
            }
            digits = std::string(int_part) + std::string(frac_part);
            fraction_digits = static_cast<long>(frac_part.size());
        } else {
            digits = std::string(text);
        }
        const mpz_class mantissa = parse_integer(digits, original);
        const long shift = exponent - fraction_digits;
        if (shift >= 0) {
            result = Rational(mantissa * pow10(static_cast<unsigned long>(shift)));
        } else {
            result = Rational(mantissa, pow10(static_cast<unsigned long>(-shift)));
        }
    }
    result.canonicalize();
    return negative ? Rational(-result) : result;
}

std::string to_string(const Rational& value)
{
    if (value.get_den() == 1) {
        return value.get_num().get_str();
    }
    return value.get_num().get_str() + "/" + value.get_den().get_str();
}

Rational make_rational(long num, long den)
{
    if (den == 0) {
        throw std::invalid_argument("zero denominator");
    }
    Rational r(num, den);
    r.canonicalize();
    return r;
}

Rational factorial(unsigned n)
{
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return Rational(r);
}

Rational power(const Rational& base, int exp)
{
    if (exp < 0) {
        if (base == 0) {
            throw DomainError("zero raised to a negative power");
        }
        return power(Rational(1) / base, -exp);
    }
    mpz_class num;
    mpz_class den;
    mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(exp));
    mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(exp));
    return Rational(num, den);
}

Rational abs(const Rational& value) { return value < 0 ? Rational(-value) : value; }

} // namespace heatansatz
