#pragma once

// Exact rational scalars and big integers (GMP-backed). Every structural
// decision in the library is made in this arithmetic; floating point only
// appears at output and during root refinement.

#include <boost/multiprecision/gmp.hpp>

#include <cstdlib>
#include <stdexcept>
#include <string>
#include <string_view>

namespace boxatom {

namespace mp = boost::multiprecision;

using Integer = mp::number<mp::gmp_int, mp::et_off>;
using Rational = mp::number<mp::gmp_rational, mp::et_off>;

inline int sign(const Integer& z) { return z.sign(); }
inline int sign(const Rational& q) { return q.sign(); }

inline Integer pow_integer(const Integer& base, unsigned exp) {
  return mp::pow(base, exp);
}

inline Rational make_rational(const Integer& num, const Integer& den) {
  if (den.is_zero()) throw std::invalid_argument("make_rational: zero denominator");
  return Rational(num) / Rational(den);
}

// base^exp with negative exponents allowed (base must be nonzero then)
inline Rational pow_rational(const Rational& base, long exp) {
  if (exp == 0) return Rational(1);
  const unsigned mag = static_cast<unsigned>(exp < 0 ? -exp : exp);
  Integer num = pow_integer(numerator(base), mag);
  Integer den = pow_integer(denominator(base), mag);
  if (exp < 0) {
    if (num.is_zero()) throw std::domain_error("pow_rational: zero base with negative exponent");
    std::swap(num, den);
    if (den < 0) { den = -den; num = -num; }
  }
  return make_rational(num, den);
}

namespace detail {
inline bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}
inline Integer integer_from_digits(std::string_view s) {
  while (s.size() > 1 && s.front() == '0') s.remove_prefix(1);
  return Integer(std::string(s));
}
}  // namespace detail

// Accepts "7", "-3/4", "0.25", "1.5e-3", ".5"; decimal forms convert exactly.
inline Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  if (s.empty()) throw std::invalid_argument("parse_rational: empty input");

  bool negative = false;
  if (s.front() == '+' || s.front() == '-') {
    negative = (s.front() == '-');
    s.remove_prefix(1);
  }
  if (s.empty()) throw std::invalid_argument("parse_rational: sign without digits");

  Rational value;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    std::string_view num = s.substr(0, slash), den = s.substr(slash + 1);
    if (!detail::all_digits(num) || !detail::all_digits(den))
      throw std::invalid_argument("parse_rational: malformed fraction '" + std::string(text) + "'");
    Integer d = detail::integer_from_digits(den);
    if (d.is_zero()) throw std::invalid_argument("parse_rational: zero denominator");
    value = make_rational(detail::integer_from_digits(num), d);
  } else {
    long exp10 = 0;
    if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
      std::string_view es = s.substr(e + 1);
      s = s.substr(0, e);
      bool eneg = false;
      if (!es.empty() && (es.front() == '+' || es.front() == '-')) {
        eneg = (es.front() == '-');
        es.remove_prefix(1);
      }
      if (!detail::all_digits(es) || es.size() > 9)
        throw std::invalid_argument("parse_rational: malformed exponent '" + std::string(text) + "'");
      exp10 = std::strtol(std::string(es).c_str(), nullptr, 10);
      if (eneg) exp10 = -exp10;
    }
    std::string digits;
    if (auto dot = s.find('.'); dot != std::string_view::npos) {
      std::string_view ip = s.substr(0, dot), fp = s.substr(dot + 1);
      if (ip.empty() && fp.empty())
        throw std::invalid_argument("parse_rational: lone decimal point");
      if ((!ip.empty() && !detail::all_digits(ip)) || (!fp.empty() && !detail::all_digits(fp)))
        throw std::invalid_argument("parse_rational: malformed decimal '" + std::string(text) + "'");
      digits = std::string(ip) + std::string(fp);
      exp10 -= static_cast<long>(fp.size());
    } else {
      if (!detail::all_digits(s))
        throw std::invalid_argument("parse_rational: malformed number '" + std::string(text) + "'");
      digits = std::string(s);
    }
    value = Rational(detail::integer_from_digits(digits));
    if (exp10 > 0)
      value *= Rational(pow_integer(Integer(10), static_cast<unsigned>(exp10)));
    else if (exp10 < 0)
      value /= Rational(pow_integer(Integer(10), static_cast<unsigned>(-exp10)));
  }
  return negative ? Rational(-value) : value;
}

inline std::string to_string(const Rational& q) { return q.str(); }

}  // namespace boxatom
