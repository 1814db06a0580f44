#include "freqpred/rational.hpp"

#include <cctype>
#include <cmath>
#include <string>

namespace freqpred {

namespace {

Integer pow10(unsigned long e) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
  return r;
}

// floor(x + 1/2) for x >= 0
Integer round_half_up(const Rational& x) {
  Rational shifted = x + Rational(1, 2);
  Integer out;
  mpz_fdiv_q(out.get_mpz_t(), shifted.get_num_mpz_t(), shifted.get_den_mpz_t());
  return out;
}

// Largest e with 10^e <= x, for x > 0.
long decimal_exponent(const Rational& x) {
  long bits = static_cast<long>(mpz_sizeinbase(x.get_num_mpz_t(), 2)) -
              static_cast<long>(mpz_sizeinbase(x.get_den_mpz_t(), 2));
  long e = static_cast<long>(std::floor(static_cast<double>(bits) * 0.30102999566398120));
  auto ten_to = [](long k) -> Rational {
    return k >= 0 ? Rational(pow10(static_cast<unsigned long>(k)))
                  : make_rational(Integer(1), pow10(static_cast<unsigned long>(-k)));
  };
  while (ten_to(e) > x) --e;
  while (ten_to(e + 1) <= x) ++e;
  return e;
}

}  // namespace

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw DomainError("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

bool is_fraction_syntax(std::string_view text) {
  return text.find('/') != std::string_view::npos;
}

Rational parse_rational(std::string_view text) {
  auto fail = [&]() -> ParseError {
    return ParseError("not a number: '" + std::string(text) + "'");
  };
  auto parse_integer = [&](std::string_view s, bool allow_sign) {
    std::size_t i = 0;
    bool neg = false;
    if (allow_sign && i < s.size() && (s[i] == '+' || s[i] == '-')) {
      neg = s[i] == '-';
      ++i;
    }
    if (i == s.size()) throw fail();
    for (std::size_t j = i; j < s.size(); ++j)
      if (!std::isdigit(static_cast<unsigned char>(s[j]))) throw fail();
    Integer v(std::string(s.substr(i)), 10);
    return neg ? Integer(-v) : v;
  };

  if (text.empty()) throw fail();
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    Integer num = parse_integer(text.substr(0, slash), true);
    Integer den = parse_integer(text.substr(slash + 1), false);
    if (den == 0) throw fail();
    return make_rational(num, den);
  }

  std::size_t i = 0;
  bool neg = false;
  if (text[i] == '+' || text[i] == '-') {
    neg = text[i] == '-';
    ++i;
  }
  std::string digits;
  std::size_t frac_digits = 0;
  bool seen_point = false;
  for (; i < text.size(); ++i) {
    char c = text[i];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      digits.push_back(c);
      if (seen_point) ++frac_digits;
    } else if (c == '.' && !seen_point) {
      seen_point = true;
    } else {
      break;
    }
  }
  if (digits.empty()) throw fail();
  long exponent = 0;
  if (i < text.size()) {
    if (text[i] != 'e' && text[i] != 'E') throw fail();
    Integer e = parse_integer(text.substr(i + 1), true);
    if (!e.fits_slong_p() || abs(e) > 100000) throw fail();
    exponent = e.get_si();
  }
  Integer mantissa(digits, 10);
  if (neg) mantissa = -mantissa;
  long shift = exponent - static_cast<long>(frac_digits);
  if (shift >= 0) return Rational(mantissa * pow10(static_cast<unsigned long>(shift)));
  return make_rational(mantissa, pow10(static_cast<unsigned long>(-shift)));
}

double to_double(const Rational& q) {
  // Truncates toward zero, within one ulp of the exact value.
  return q.get_d();
}

std::string format_fixed(const Rational& q, int places) {
  if (places < 0) throw DomainError("negative decimal places");
  Rational scaled = abs(q) * pow10(static_cast<unsigned long>(places));
  std::string body = round_half_up(scaled).get_str();
  bool negative = sgn(q) < 0 && body.find_first_not_of('0') != std::string::npos;
  if (places > 0) {
    if (body.size() <= static_cast<std::size_t>(places))
      body.insert(0, static_cast<std::size_t>(places) + 1 - body.size(), '0');
    body.insert(body.size() - static_cast<std::size_t>(places), ".");
  }
  return negative ? "-" + body : body;
}

std::string format_significant(const Rational& q, int digits) {
  if (digits < 1) throw DomainError("significant digits must be positive");
  if (q == 0) return "0";
  Rational mag = abs(q);
  long e = decimal_exponent(mag);
  auto scale_for = [&](long exp10) -> Rational {
    long s = digits - 1 - exp10;
    if (s >= 0) return mag * pow10(static_cast<unsigned long>(s));
    return mag / pow10(static_cast<unsigned long>(-s));
  };
  Integer m = round_half_up(scale_for(e));
  if (m == pow10(static_cast<unsigned long>(digits))) {
    ++e;
    m = round_half_up(scale_for(e));
  }
  std::string mant = m.get_str();  // exactly `digits` characters
  std::string out;
  if (e >= -6 && e < 21) {
    long point = e + 1;  // digits before the decimal point
    if (point <= 0) {
      out = "0." + std::string(static_cast<std::size_t>(-point), '0') + mant;
    } else if (point >= static_cast<long>(mant.size())) {
      out = mant + std::string(static_cast<std::size_t>(point) - mant.size(), '0');
    } else {
      out = mant.substr(0, static_cast<std::size_t>(point)) + "." +
            mant.substr(static_cast<std::size_t>(point));
    }
    if (out.find('.') != std::string::npos) {
      out.erase(out.find_last_not_of('0') + 1);
      if (out.back() == '.') out.pop_back();
    }
  } else {
    std::string frac = mant.substr(1);
    frac.erase(frac.find_last_not_of('0') + 1);
    out = mant.substr(0, 1) + (frac.empty() ? "" : "." + frac) + "e" + std::to_string(e);
  }
  return sgn(q) < 0 ? "-" + out : out;
}

std::string format_exact(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational pow(const Rational& base, unsigned long exponent) {
  Rational out;
  mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), exponent);
  mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), exponent);
  return out;
}

}  // namespace freqpred
