#pragma once

// Univariate polynomials over exact rationals, plus the primitive
// integer-coefficient form the Sturm machinery works on.

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <utility>
#include <vector>

#include "boxatom/bigfloat.hpp"
#include "boxatom/rational.hpp"

namespace boxatom {

// Coefficients ascending by power; trailing zeros stripped, so the zero
// polynomial is the empty coefficient list and degree() == -1.
class RationalPoly {
 public:
  RationalPoly() = default;
  RationalPoly(std::initializer_list<Rational> ascending) : c_(ascending) { normalize(); }
  explicit RationalPoly(std::vector<Rational> ascending) : c_(std::move(ascending)) { normalize(); }

  static RationalPoly constant(Rational v) { return RationalPoly({std::move(v)}); }
  static RationalPoly monomial(Rational coeff, std::size_t power) {
    std::vector<Rational> c(power + 1, Rational(0));
    c[power] = std::move(coeff);
    return RationalPoly(std::move(c));
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Rational>& coefficients() const { return c_; }
  Rational coefficient(std::size_t k) const { return k < c_.size() ? c_[k] : Rational(0); }
  const Rational& leading() const {
    if (c_.empty()) throw std::logic_error("leading coefficient of zero polynomial");
    return c_.back();
  }

  RationalPoly operator-() const {
    std::vector<Rational> c(c_);
    for (auto& v : c) v = -v;
    return RationalPoly(std::move(c));
  }
  RationalPoly operator+(const RationalPoly& o) const {
    std::vector<Rational> c(std::max(c_.size(), o.c_.size()), Rational(0));
    for (std::size_t i = 0; i < c_.size(); ++i) c[i] = c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) c[i] += o.c_[i];
    return RationalPoly(std::move(c));
  }
  RationalPoly operator-(const RationalPoly& o) const { return *this + (-o); }
  RationalPoly operator*(const RationalPoly& o) const {
    if (is_zero() || o.is_zero()) return {};
    std::vector<Rational> c(c_.size() + o.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < c_.size(); ++i)
      for (std::size_t j = 0; j < o.c_.size(); ++j) c[i + j] += c_[i] * o.c_[j];
    return RationalPoly(std::move(c));
  }
  RationalPoly operator*(const Rational& s) const {
    if (s.is_zero()) return {};
    std::vector<Rational> c(c_);
    for (auto& v : c) v *= s;
    return RationalPoly(std::move(c));
  }
  friend RationalPoly operator*(const Rational& s, const RationalPoly& p) { return p * s; }
  bool operator==(const RationalPoly& o) const { return c_ == o.c_; }

  RationalPoly derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<Rational> c(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) c[i - 1] = c_[i] * Rational(static_cast<long>(i));
    return RationalPoly(std::move(c));
  }

  Rational operator()(const Rational& x) const {
    Rational acc(0);
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
  }

  BigFloat operator()(const BigFloat& x) const {
    const unsigned bits = precision_bits(x);
    ScopedPrecision scope(bits);
    BigFloat acc = to_bigfloat(Rational(0), bits);
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + to_bigfloat(c_[i], bits);
    return acc;
  }

 private:
  void normalize() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  std::vector<Rational> c_;
};

// Primitive integer-coefficient polynomial; sign evaluation at rational
// points never leaves integer arithmetic.
struct IntPoly {
  std::vector<Integer> c;  // ascending; normalized: empty or c.back() != 0

  void normalize() {
    while (!c.empty() && c.back().is_zero()) c.pop_back();
  }
  int degree() const { return static_cast<int>(c.size()) - 1; }
  bool is_zero() const { return c.empty(); }
  const Integer& leading() const { return c.back(); }

  Integer content() const {
    Integer g(0);
    for (const auto& v : c) g = mp::gcd(g, v);
    return g;
  }
  void make_primitive() {
    Integer g = content();
    if (g > 1)
      for (auto& v : c) v /= g;
  }

  IntPoly derivative() const {
    IntPoly d;
    if (c.size() <= 1) return d;
    d.c.resize(c.size() - 1);
    for (std::size_t i = 1; i < c.size(); ++i) d.c[i - 1] = c[i] * Integer(static_cast<long>(i));
    d.normalize();
    return d;
  }

  // b^deg * p(a/b); same sign as p(a/b) for b > 0
  Integer eval_homogeneous(const Integer& a, const Integer& b) const {
    if (c.empty()) return Integer(0);
    Integer acc = c.back(), bpow(1);
    for (std::size_t i = c.size() - 1; i-- > 0;) {
      bpow *= b;
      acc = acc * a + c[i] * bpow;
    }
    return acc;
  }

  int sign_at(const Rational& x) const {
    if (c.empty()) return 0;
    return eval_homogeneous(numerator(x), denominator(x)).sign();
  }
};

// Clears denominators and strips the content; the sign of every value is
// preserved (the scaling factor is positive).
inline IntPoly to_primitive_integer(const RationalPoly& p) {
  IntPoly out;
  if (p.is_zero()) return out;
  Integer scale(1);
  for (const auto& q : p.coefficients()) scale = mp::lcm(scale, denominator(q));
  out.c.reserve(p.coefficients().size());
  for (const auto& q : p.coefficients()) out.c.push_back(numerator(q) * (scale / denominator(q)));
  out.normalize();
  out.make_primitive();
  return out;
}

}  // namespace boxatom
