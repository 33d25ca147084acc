#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdio>
#include <string>
#include <string_view>

#include "elocc/errors.hpp"

namespace elocc {

/// Exact arbitrary-precision rational. All canonical arithmetic in this
/// library is exact; there is no epsilon policy anywhere.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

namespace detail {

inline bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

inline BigInt parse_bigint_digits(std::string_view s) {
  // caller has validated s via all_digits; leading zeros must go because the
  // string constructor would read them as an octal prefix
  size_t first = 0;
  while (first + 1 < s.size() && s[first] == '0') ++first;
  return BigInt(std::string(s.substr(first)));
}

}  // namespace detail

/// Parses an exact rational from one of:
///   - integer:          "3", "-2"
///   - decimal string:   "0.35" (exactly 35/100), "1.", ".5"
///   - fraction string:  "7/20", "-1/3"
/// Decimal strings are parsed as exact base-10 fractions, never via binary
/// floating point.
inline Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  if (s.empty())
    throw Error(ErrorCode::parse_error, "empty rational literal");

  bool negative = false;
  if (s.front() == '+' || s.front() == '-') {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (s.empty())
    throw Error(ErrorCode::parse_error,
                "bare sign is not a rational: '" + std::string(text) + "'");

  auto fail = [&]() -> Rational {
    throw Error(ErrorCode::parse_error,
                "cannot parse rational literal '" + std::string(text) + "'");
  };

  Rational value;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    std::string_view num = s.substr(0, slash);
    std::string_view den = s.substr(slash + 1);
    if (!detail::all_digits(num) || !detail::all_digits(den)) return fail();
    BigInt d = detail::parse_bigint_digits(den);
    if (d == 0)
      throw Error(ErrorCode::parse_error,
                  "zero denominator in '" + std::string(text) + "'");
    value = Rational(detail::parse_bigint_digits(num), d);
  } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view ipart = s.substr(0, dot);
    std::string_view fpart = s.substr(dot + 1);
    if (ipart.empty() && fpart.empty()) return fail();
    if (!ipart.empty() && !detail::all_digits(ipart)) return fail();
    if (!fpart.empty() && !detail::all_digits(fpart)) return fail();
    BigInt scale = 1;
    for (size_t i = 0; i < fpart.size(); ++i) scale *= 10;
    BigInt whole = ipart.empty() ? BigInt(0) : detail::parse_bigint_digits(ipart);
    BigInt frac = fpart.empty() ? BigInt(0) : detail::parse_bigint_digits(fpart);
    value = Rational(whole * scale + frac, scale);
  } else {
    if (!detail::all_digits(s)) return fail();
    value = Rational(detail::parse_bigint_digits(s));
  }
  if (negative) value = -value;
  return value;
}

/// Canonical exact text form: "num/den" in lowest terms, or plain "num" when
/// the denominator is 1. Round-trips exactly through parse_rational.
inline std::string format_fraction(const Rational& x) {
  std::string num = numerator(x).str();
  if (denominator(x) == 1) return num;
  return num + "/" + denominator(x).str();
}

/// Approximate value as a long double (used only for display and for the
/// directed-rounding fallback in the dimension bound). Safe for numerators
/// and denominators far beyond the floating-point range.
inline long double to_long_double(const Rational& x) {
  BigInt n = numerator(x), d = denominator(x);
  if (n == 0) return 0.0L;
  bool neg = n < 0;
  if (neg) n = -n;
  long shift = 0;
  if (unsigned nb = boost::multiprecision::msb(n); nb > 8000) {
    n >>= (nb - 8000);
    shift += static_cast<long>(nb - 8000);
  }
  if (unsigned db = boost::multiprecision::msb(d); db > 8000) {
    d >>= (db - 8000);
    shift -= static_cast<long>(db - 8000);
  }
  long double v = std::ldexp(n.convert_to<long double>() / d.convert_to<long double>(),
                             static_cast<int>(shift));
  return neg ? -v : v;
}

/// Decimal rendering with a fixed number of significant digits (12 by
/// default), for human-facing output next to the exact fraction.
inline std::string to_decimal_string(const Rational& x, int significant = 12) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*Lg", significant, to_long_double(x));
  return std::string(buf);
}

/// Natural log of a positive rational, correct to long double accuracy even
/// when numerator/denominator exceed the floating-point range.
inline long double log_rational(const Rational& x) {
  auto log_big = [](const BigInt& n) -> long double {
    const unsigned bits = boost::multiprecision::msb(n);  // n > 0
    if (bits <= 62) return std::log(n.convert_to<long double>());
    const unsigned shift = bits - 62;
    BigInt top = n >> shift;
    return std::log(top.convert_to<long double>()) +
           static_cast<long double>(shift) * 0.6931471805599453094L;
  };
  return log_big(numerator(x)) - log_big(denominator(x));
}

}  // namespace elocc
