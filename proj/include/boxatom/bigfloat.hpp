#pragma once

// Arbitrary-precision binary floating point (MPFR-backed). Each value
// carries its precision; fresh results of arithmetic take the scope's
// working precision, so computations wrap themselves in a ScopedPrecision.

#include <boost/multiprecision/mpfr.hpp>
#include <mpfr.h>

#include <algorithm>
#include <stdexcept>
#include <string>
#include <string_view>

#include "boxatom/rational.hpp"

namespace boxatom {

using BigFloat = mp::number<mp::mpfr_float_backend<0>, mp::et_off>;

inline constexpr unsigned kDefaultPrecisionBits = 256;
inline constexpr unsigned kMinPrecisionBits = 64;

inline unsigned digits10_for_bits(unsigned bits) {
  return static_cast<unsigned>(bits * 0.3010299956639812) + 1;
}
inline unsigned bits_for_digits10(unsigned digits10) {
  return static_cast<unsigned>(digits10 * 3.3219280948873623) + 4;
}

inline unsigned precision_bits(const BigFloat& x) {
  return static_cast<unsigned>(mpfr_get_prec(x.backend().data()));
}

// Sets the working precision for values created inside the scope.
class ScopedPrecision {
 public:
  explicit ScopedPrecision(unsigned bits) : previous_digits10_(BigFloat::default_precision()) {
    BigFloat::default_precision(digits10_for_bits(std::max(bits, kMinPrecisionBits)));
  }
  ~ScopedPrecision() { BigFloat::default_precision(previous_digits10_); }
  ScopedPrecision(const ScopedPrecision&) = delete;
  ScopedPrecision& operator=(const ScopedPrecision&) = delete;

 private:
  unsigned previous_digits10_;
};

inline BigFloat to_bigfloat(const Rational& q, unsigned bits) {
  BigFloat out;
  mpfr_set_prec(out.backend().data(), std::max(bits, kMinPrecisionBits));
  mpfr_set_q(out.backend().data(), q.backend().data(), MPFR_RNDN);
  return out;
}

// Conversion at the scope's working precision.
inline BigFloat to_bigfloat(const Rational& q) {
  return to_bigfloat(q, bits_for_digits10(BigFloat::default_precision()));
}

// Exact: every finite binary float is a dyadic rational.
inline Rational to_rational(const BigFloat& x) {
  if (!mpfr_number_p(x.backend().data()))
    throw std::invalid_argument("to_rational: non-finite value");
  Rational out;
  mpfr_get_q(out.backend().data(), x.backend().data());
  return out;
}

inline BigFloat at_precision(const BigFloat& x, unsigned bits) {
  BigFloat out;
  mpfr_set_prec(out.backend().data(), std::max(bits, kMinPrecisionBits));
  mpfr_set(out.backend().data(), x.backend().data(), MPFR_RNDN);
  return out;
}

inline int sign(const BigFloat& x) { return mpfr_sgn(x.backend().data()); }

inline BigFloat bigfloat_pi(unsigned bits) {
  BigFloat out;
  mpfr_set_prec(out.backend().data(), std::max(bits, kMinPrecisionBits));
  mpfr_const_pi(out.backend().data(), MPFR_RNDN);
  return out;
}

// floor(log10(|x|)); x must be nonzero
inline long exponent10(const BigFloat& x) {
  if (x.is_zero()) throw std::invalid_argument("exponent10: zero");
  mpfr_exp_t e;
  char* raw = mpfr_get_str(nullptr, &e, 10, 4, x.backend().data(), MPFR_RNDZ);
  mpfr_free_str(raw);
  return static_cast<long>(e) - 1;
}

// Renders with exactly `digits` significant decimal digits, half-even ties.
// Positional form when the exponent allows it, scientific otherwise.
inline std::string format_sig(const BigFloat& x, int digits) {
  if (digits < 1) throw std::invalid_argument("format_sig: digits must be >= 1");
  if (!mpfr_number_p(x.backend().data())) return mpfr_nan_p(x.backend().data()) ? "nan" : "inf";
  if (x.is_zero()) {
    std::string s = "0";
    if (digits > 1) s += "." + std::string(static_cast<size_t>(digits - 1), '0');
    return s;
  }
  mpfr_exp_t e;
  char* raw = mpfr_get_str(nullptr, &e, 10, static_cast<size_t>(digits),
                           x.backend().data(), MPFR_RNDN);
  std::string d(raw);
  mpfr_free_str(raw);
  bool negative = !d.empty() && d[0] == '-';
  if (negative) d.erase(0, 1);
  // value = 0.d * 10^e
  std::string body;
  if (e > 0 && e <= digits) {
    body = d.substr(0, static_cast<size_t>(e));
    if (e < digits) body += "." + d.substr(static_cast<size_t>(e));
  } else if (e <= 0 && e > -4) {
    body = "0." + std::string(static_cast<size_t>(-e), '0') + d;
  } else {
    body = d.substr(0, 1);
    if (digits > 1) body += "." + d.substr(1);
    body += "e" + std::to_string(static_cast<long>(e) - 1);
  }
  return negative ? "-" + body : body;
}

// Half-even rounding to `digits` significant decimal digits.
inline BigFloat round_sig(const BigFloat& x, int digits) {
  if (x.is_zero() || !mpfr_number_p(x.backend().data())) return x;
  const std::string s = format_sig(x, digits);
  BigFloat out;
  mpfr_set_prec(out.backend().data(),
                std::max(precision_bits(x), bits_for_digits10(static_cast<unsigned>(digits)) + 32));
  mpfr_set_str(out.backend().data(), s.c_str(), 10, MPFR_RNDN);
  return out;
}

inline BigFloat parse_bigfloat(std::string_view text, unsigned bits) {
  BigFloat out;
  mpfr_set_prec(out.backend().data(), std::max(bits, kMinPrecisionBits));
  std::string buf(text);
  char* end = nullptr;
  mpfr_strtofr(out.backend().data(), buf.c_str(), &end, 10, MPFR_RNDN);
  if (end == buf.c_str() || *end != '\0')
    throw std::invalid_argument("parse_bigfloat: malformed number '" + buf + "'");
  return out;
}

}  // namespace boxatom
