#ifndef FREQPRED_RATIONAL_HPP
#define FREQPRED_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace freqpred {

/// Arbitrary-precision signed integer.
using Integer = mpz_class;

/// Arbitrary-precision fraction. Every value produced by this library is
/// canonical: gcd(|num|, den) == 1 and den > 0.
using Rational = mpq_class;

class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Builds num/den in canonical form. Throws DomainError when den == 0.
Rational make_rational(const Integer& num, const Integer& den);

inline Rational make_rational(long num, long den) {
  return make_rational(Integer(num), Integer(den));
}

/// Parses "p/q", an integer, or a plain decimal ("0.45", "1e-3", "-2.5").
/// Decimal strings are exact rationals, so no rounding takes place.
Rational parse_rational(std::string_view text);

/// True when `text` uses the p/q syntax rather than a decimal literal.
bool is_fraction_syntax(std::string_view text);

double to_double(const Rational& q);

/// Rounds half away from zero to `places` digits after the point and renders
/// with exactly that many fractional digits ("0.5298").
std::string format_fixed(const Rational& q, int places);

/// Renders with `digits` significant digits, trailing zeros trimmed.
/// Zero renders as "0".
std::string format_significant(const Rational& q, int digits);

/// Renders the canonical fraction, "p/q" or "p" when q == 1.
std::string format_exact(const Rational& q);

/// Exact power with a non-negative exponent.
Rational pow(const Rational& base, unsigned long exponent);

}  // namespace freqpred

#endif  // FREQPRED_RATIONAL_HPP
