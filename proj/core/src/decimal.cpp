#include "stepqa/decimal.hpp"

#include <cmath>
#include <cstdint>

namespace stepqa {

namespace {

bool is_digit(char c) { return c >= '0' && c <= '9'; }

std::string_view trim_ws(std::string_view s) {
  size_t b = 0;
  size_t e = s.size();
  while (b < e && (s[b] == ' ' || s[b] == '\t' || s[b] == '\r' || s[b] == '\n')) ++b;
  while (e > b && (s[e - 1] == ' ' || s[e - 1] == '\t' || s[e - 1] == '\r' || s[e - 1] == '\n')) --e;
  return s.substr(b, e - b);
}

BigInt pow10(int n) {
  BigInt r = 1;
  for (int i = 0; i < n; ++i) r *= 10;
  return r;
}

}  // namespace

std::optional<DecimalParse> parse_decimal(std::string_view text) {
  std::string_view s = trim_ws(text);
  if (s.empty()) return std::nullopt;

  size_t i = 0;
  bool negative = false;
  if (s[i] == '+' || s[i] == '-') {
    negative = (s[i] == '-');
    ++i;
  }
  if (i >= s.size() || (!is_digit(s[i]) && s[i] != '.')) return std::nullopt;

  BigInt mantissa = 0;
  int frac_digits = 0;
  bool any_digit = false;

  // integer part: digits with commas strictly between digits
  while (i < s.size()) {
    if (is_digit(s[i])) {
      mantissa = mantissa * 10 + (s[i] - '0');
      any_digit = true;
      ++i;
    } else if (s[i] == ',') {
      if (!any_digit || i + 1 >= s.size() || !is_digit(s[i + 1])) return std::nullopt;
      ++i;
    } else {
      break;
    }
  }
  if (i < s.size() && s[i] == '.') {
    ++i;
    if (i >= s.size() || !is_digit(s[i])) return std::nullopt;
    while (i < s.size() && is_digit(s[i])) {
      mantissa = mantissa * 10 + (s[i] - '0');
      ++frac_digits;
      any_digit = true;
      ++i;
    }
  }
  if (!any_digit) return std::nullopt;

  bool percent = false;
  if (i < s.size() && s[i] == '%') {
    percent = true;
    ++i;
  }
  if (i != s.size()) return std::nullopt;

  Rational value(mantissa, pow10(frac_digits));
  if (negative) value = -value;
  return DecimalParse{value, percent};
}

Rational round_half_even(const Rational& x, int places) {
  const BigInt scale = pow10(places);
  const BigInt num = boost::multiprecision::numerator(x) * scale;
  const BigInt den = boost::multiprecision::denominator(x);  // always positive

  const bool negative = num < 0;
  const BigInt n = negative ? BigInt(-num) : num;

  BigInt q = n / den;
  const BigInt rem = n % den;
  const BigInt twice = rem * 2;
  if (twice > den) {
    ++q;
  } else if (twice == den) {
    if (q % 2 != 0) ++q;  // ties go to the even neighbor
  }
  Rational r(negative ? BigInt(-q) : q, scale);
  return r;
}

std::string to_canonical_string(const Rational& x, int places) {
  const Rational r = round_half_even(x, places);
  const BigInt scale = pow10(places);
  BigInt scaled = boost::multiprecision::numerator(r) * (scale / boost::multiprecision::denominator(r));

  const bool negative = scaled < 0;
  if (negative) scaled = -scaled;

  const BigInt whole = scaled / scale;
  BigInt frac = scaled % scale;

  std::string out;
  if (negative && scaled != 0) out += '-';
  out += whole.str();
  if (frac != 0) {
    std::string digits = frac.str();
    digits.insert(digits.begin(), static_cast<size_t>(places) - digits.size(), '0');
    while (!digits.empty() && digits.back() == '0') digits.pop_back();
    out += '.';
    out += digits;
  }
  return out;
}

Rational rational_from_double(double v) {
  if (v == 0.0) return Rational(0);
  // Decompose into mantissa * 2^exp exactly.
  int exp = 0;
  double m = std::frexp(v, &exp);  // m in [0.5, 1)
  // 53 bits of mantissa
  for (int i = 0; i < 53 && m != std::floor(m); ++i) {
    m *= 2.0;
    --exp;
  }
  BigInt mant = static_cast<int64_t>(m);
  Rational r(mant);
  if (exp > 0) {
    BigInt p = 1;
    p <<= exp;
    r *= Rational(p);
  } else if (exp < 0) {
    BigInt p = 1;
    p <<= -exp;
    r /= Rational(p);
  }
  return r;
}

}  // namespace stepqa
