#pragma once

// Bessel-function zeros as an independent oracle route. Evaluation is a
// plain power series at elevated precision (no upward recurrences), zeros
// come from a coarse sign scan followed by bisection:
//
//   J_m(x)  = sum_t (-1)^t (x/2)^{2t+m} / (t! (t+m)!)
//   j_l(x)  = x^l sum_t (-1)^t x^{2t} / (2^t t! (2l+2t+1)!!)
//
// The box spectrum at beta = 0 is E = x^2/2 with x a spherical-Bessel zero;
// the zero-energy radial equation is solvable in closed form, which turns
// critical couplings into ordinary-Bessel zeros: beta^c = j_{2l+1,n+1}^2 / 8.

#include <stdexcept>
#include <vector>

#include "boxatom/bigfloat.hpp"
#include "boxatom/rational.hpp"

namespace boxatom {

namespace detail {

// Series guard: terms peak near e^x, so cancellation costs about 1.5 x bits.
inline unsigned series_guard_bits(const BigFloat& x) {
  double xa = static_cast<double>(abs(x));
  return 96 + static_cast<unsigned>(1.5 * xa);
}

template <typename TermRatio>
BigFloat alternating_series(BigFloat term, const BigFloat& eps, TermRatio ratio) {
  BigFloat sum = term;
  for (unsigned t = 0; t < 100000; ++t) {
    term *= ratio(t);
    sum += term;
    if (abs(term) < eps) return sum;
  }
  throw std::runtime_error("bessel series did not converge");
}

}  // namespace detail

// Ordinary Bessel function of integer order, power series.
inline BigFloat cyl_bessel_j(int order, const BigFloat& x) {
  if (order < 0) throw std::invalid_argument("cyl_bessel_j: order must be >= 0");
  const unsigned out_bits = precision_bits(x);
  const unsigned work_bits = out_bits + detail::series_guard_bits(x);
  ScopedPrecision scope(work_bits);
  const BigFloat half = at_precision(x, work_bits) / 2;
  const BigFloat q = half * half;
  Integer fact(1);
  for (int t = 2; t <= order; ++t) fact *= t;
  BigFloat first = pow(half, order) / to_bigfloat(Rational(fact), work_bits);
  BigFloat eps = to_bigfloat(pow_rational(Rational(1, 2), static_cast<long>(out_bits + 32)), work_bits);
  BigFloat sum = detail::alternating_series(first, eps, [&](unsigned t) {
    return -q / to_bigfloat(Rational(Integer(t + 1) * Integer(t + 1 + static_cast<unsigned>(order))),
                            work_bits);
  });
  return at_precision(sum, out_bits);
}

// Spherical Bessel function j_l, power series.
inline BigFloat spherical_bessel_j(int l, const BigFloat& x) {
  if (l < 0) throw std::invalid_argument("spherical_bessel_j: l must be >= 0");
  const unsigned out_bits = precision_bits(x);
  const unsigned work_bits = out_bits + detail::series_guard_bits(x);
  ScopedPrecision scope(work_bits);
  const BigFloat xw = at_precision(x, work_bits);
  const BigFloat q = xw * xw / 2;
  Integer dfact(1);  // (2l+1)!!
  for (int k = 3; k <= 2 * l + 1; k += 2) dfact *= k;
  BigFloat first = pow(xw, l) / to_bigfloat(Rational(dfact), work_bits);
  BigFloat eps = to_bigfloat(pow_rational(Rational(1, 2), static_cast<long>(out_bits + 32)), work_bits);
  BigFloat sum = detail::alternating_series(first, eps, [&](unsigned t) {
    return -q / to_bigfloat(Rational(Integer(t + 1) * Integer(2 * (t + 1 + static_cast<unsigned>(l)) + 1)),
                            work_bits);
  });
  return at_precision(sum, out_bits);
}

namespace detail {

// k-th positive zero by sign scan (step 1/2, safe: consecutive zeros of
// either family are separated by more than pi) plus bisection.
template <typename F>
BigFloat bessel_zero_impl(F eval, double scan_start, int k, int digits) {
  if (k < 1) throw std::invalid_argument("bessel zero index must be >= 1");
  if (digits < 1) throw std::invalid_argument("digits must be >= 1");
  const unsigned bits = bits_for_digits10(static_cast<unsigned>(digits) + 6) + 32;
  ScopedPrecision scope(bits);
  const BigFloat step = to_bigfloat(Rational(1, 2), bits);
  BigFloat lo = to_bigfloat(Rational(std::max(1l, static_cast<long>(2 * scan_start)), 2), bits);
  int slo = sign(eval(lo));
  if (slo == 0) slo = 1;  // scan starts strictly before the first zero
  int found = 0;
  BigFloat hi = lo;
  for (int guard = 0; guard < 4000; ++guard) {
    hi = lo + step;
    const int shi = sign(eval(hi));
    if (shi != 0 && shi != slo) {
      if (++found == k) break;
      slo = shi;
    }
    lo = hi;
    if (guard == 3999) throw std::runtime_error("bessel zero scan exhausted");
  }
  // bisection to relative 10^-(digits+4)
  const BigFloat tol = to_bigfloat(pow_rational(Rational(1, 10), digits + 4), bits) * hi;
  while (hi - lo > tol) {
    BigFloat mid = (lo + hi) / 2;
    const int sm = sign(eval(mid));
    if (sm == 0) return mid;
    if (sm == slo)
      lo = mid;
    else
      hi = mid;
  }
  return (lo + hi) / 2;
}

}  // namespace detail

// k-th positive zero of J_m, accurate to at least `digits` significant digits.
inline BigFloat cyl_bessel_zero(int order, int k, int digits) {
  return detail::bessel_zero_impl(
      [order](const BigFloat& x) { return cyl_bessel_j(order, x); },
      static_cast<double>(order), k, digits);
}

// k-th positive zero of j_l.
inline BigFloat spherical_bessel_zero(int l, int k, int digits) {
  return detail::bessel_zero_impl(
      [l](const BigFloat& x) { return spherical_bessel_j(l, x); },
      static_cast<double>(l), k, digits);
}

// Oracle: particle-in-a-box level E_nl = x^2/2, x the (n+1)-th zero of j_l.
inline BigFloat box_level_oracle(int n, int l, int digits) {
  if (n < 0 || l < 0) throw std::invalid_argument("box_level_oracle: n, l must be >= 0");
  ScopedPrecision scope(bits_for_digits10(static_cast<unsigned>(digits) + 6) + 32);
  BigFloat x = spherical_bessel_zero(l, n + 1, digits + 2);
  return x * x / 2;
}

// Oracle: critical coupling beta_nl^c = j_{2l+1, n+1}^2 / 8.
inline BigFloat critical_coupling_oracle(int n, int l, int digits) {
  if (n < 0 || l < 0) throw std::invalid_argument("critical_coupling_oracle: n, l must be >= 0");
  ScopedPrecision scope(bits_for_digits10(static_cast<unsigned>(digits) + 6) + 32);
  BigFloat x = cyl_bessel_zero(2 * l + 1, n + 1, digits + 2);
  return x * x / 8;
}

}  // namespace boxatom
