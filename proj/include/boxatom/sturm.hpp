#pragma once

// Sturm sequences over exact integer arithmetic: root counting on open
// intervals, isolation into single-root brackets, and refinement of each
// bracket to a requested number of significant decimal digits.
//
// The chain is built with pseudo-remainders; every member is reduced to its
// primitive part after each step to keep coefficient growth in check, with
// the sign corrected so the sequence stays a valid Sturm chain.

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

#include "boxatom/bigfloat.hpp"
#include "boxatom/polynomial.hpp"
#include "boxatom/rational.hpp"

namespace boxatom {

namespace detail {

// R = lc(B)^k * (A mod B) for the k elimination steps actually taken.
inline std::pair<IntPoly, unsigned> pseudo_remainder(const IntPoly& a, const IntPoly& b) {
  IntPoly r = a;
  unsigned steps = 0;
  const Integer& lead_b = b.leading();
  while (!r.is_zero() && r.degree() >= b.degree()) {
    const int shift = r.degree() - b.degree();
    const Integer lead_r = r.leading();
    IntPoly next;
    next.c.assign(static_cast<std::size_t>(r.degree()), Integer(0));
    for (std::size_t i = 0; i + 1 < r.c.size(); ++i) next.c[i] = r.c[i] * lead_b;
    for (std::size_t i = 0; i + 1 < b.c.size(); ++i)
      next.c[i + static_cast<std::size_t>(shift)] -= b.c[i] * lead_r;
    next.normalize();
    r = std::move(next);
    ++steps;
  }
  return {std::move(r), steps};
}

}  // namespace detail

class SturmChain {
 public:
  explicit SturmChain(const RationalPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("SturmChain: zero polynomial");
    seq_.push_back(to_primitive_integer(p));
    IntPoly d = seq_.front().derivative();
    if (d.is_zero()) return;  // constant polynomial
    d.make_primitive();
    seq_.push_back(std::move(d));
    while (seq_.back().degree() > 0) {
      const IntPoly& prev = seq_[seq_.size() - 2];
      const IntPoly& cur = seq_.back();
      auto [rem, steps] = detail::pseudo_remainder(prev, cur);
      if (rem.is_zero()) break;  // last member is gcd(p, p'); chain still counts distinct roots
      // next = -(prev mod cur) up to a positive factor
      const bool flip = !(cur.leading() < 0 && (steps & 1u));
      if (flip)
        for (auto& v : rem.c) v = -v;
      rem.make_primitive();
      seq_.push_back(std::move(rem));
    }
  }

  const IntPoly& polynomial() const { return seq_.front(); }
  bool is_root(const Rational& x) const { return seq_.front().sign_at(x) == 0; }

  int variations(const Rational& x) const {
    int count = 0, last = 0;
    for (const auto& f : seq_) {
      const int s = f.sign_at(x);
      if (s == 0) continue;
      if (last != 0 && s != last) ++count;
      last = s;
    }
    return count;
  }

  // Distinct real roots in the open interval (lo, hi).
  int count_open(const Rational& lo, const Rational& hi) const {
    if (!(lo < hi)) throw std::invalid_argument("count_open: requires lo < hi");
    if (is_root(lo) || is_root(hi))
      throw std::invalid_argument("count_open: endpoint is a root; perturb the endpoint");
    return variations(lo) - variations(hi);
  }

 private:
  std::vector<IntPoly> seq_;
};

inline int sturm_count(const RationalPoly& p, const Rational& lo, const Rational& hi) {
  return SturmChain(p).count_open(lo, hi);
}

// All real roots lie in (-bound, bound); rounded up to an integer so that
// bisection points downstream stay dyadic.
inline Rational cauchy_root_bound(const RationalPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("cauchy_root_bound: zero polynomial");
  Rational m(0);
  const Rational lead = abs(p.leading());
  for (const auto& c : p.coefficients()) {
    Rational a = abs(c) / lead;
    if (a > m) m = a;
  }
  return Rational(numerator(m) / denominator(m) + 2);
}

struct RootBracket {
  Rational lo, hi;
  bool pinpoint = false;  // lo == hi is the root itself
};

// Splits (lo, hi) into brackets each holding exactly one distinct root.
// Endpoints must not be roots.
inline std::vector<RootBracket> isolate_root_brackets(const SturmChain& chain, const Rational& lo,
                                                      const Rational& hi) {
  if (!(lo < hi)) throw std::invalid_argument("isolate_root_brackets: requires lo < hi");
  if (chain.is_root(lo) || chain.is_root(hi))
    throw std::invalid_argument("isolate_root_brackets: endpoint is a root; perturb the endpoint");

  std::vector<RootBracket> out;
  struct Seg {
    Rational a, b;
    int va, vb;
  };
  std::vector<Seg> stack{{lo, hi, chain.variations(lo), chain.variations(hi)}};
  while (!stack.empty()) {
    Seg s = std::move(stack.back());
    stack.pop_back();
    const int count = s.va - s.vb;
    if (count <= 0) continue;
    if (count == 1) {
      out.push_back({s.a, s.b, false});
      continue;
    }
    Rational mid = (s.a + s.b) / 2;
    if (chain.is_root(mid)) {
      out.push_back({mid, mid, true});
      // carve out a punctured neighbourhood of mid so the recursion sees
      // non-root endpoints
      Rational eps = (s.b - s.a) / 1024;
      while (true) {
        const Rational a2 = mid - eps, b2 = mid + eps;
        if (a2 > s.a && b2 < s.b && !chain.is_root(a2) && !chain.is_root(b2) &&
            chain.count_open(a2, b2) == 1)
          break;
        eps /= 2;
      }
      const Rational a2 = mid - eps, b2 = mid + eps;
      stack.push_back({s.a, a2, s.va, chain.variations(a2)});
      stack.push_back({b2, s.b, chain.variations(b2), s.vb});
    } else {
      const int vm = chain.variations(mid);
      stack.push_back({s.a, mid, s.va, vm});
      stack.push_back({mid, s.b, vm, s.vb});
    }
  }
  std::sort(out.begin(), out.end(),
            [](const RootBracket& x, const RootBracket& y) { return x.lo < y.lo; });
  return out;
}

// Narrows a single-root bracket until hi - lo <= width (collapses to a
// pinpoint if a midpoint hits the root exactly). Simple roots flip the sign
// of p across the bracket, so bisection runs on p alone; only even
// multiplicities fall back to full Sturm counts.
inline RootBracket tighten_bracket(const SturmChain& chain, RootBracket b, const Rational& width) {
  if (b.pinpoint) return b;
  const IntPoly& p = chain.polynomial();
  int s_lo = p.sign_at(b.lo);
  const bool sign_bisect = s_lo != 0 && s_lo == -p.sign_at(b.hi);
  while (b.hi - b.lo > width) {
    Rational mid = (b.lo + b.hi) / 2;
    if (sign_bisect) {
      const int sm = p.sign_at(mid);
      if (sm == 0) return {mid, mid, true};
      if (sm == s_lo)
        b.lo = std::move(mid);
      else
        b.hi = std::move(mid);
    } else {
      if (chain.is_root(mid)) return {mid, mid, true};
      if (chain.count_open(b.lo, mid) == 1)
        b.hi = std::move(mid);
      else
        b.lo = std::move(mid);
    }
  }
  return b;
}

// Refines one isolated root to `digits` significant decimal digits:
// Sturm bisection to digits+3, then a Newton polish at twice the working
// precision when the derivative is healthy, half-even rounding at the end.
inline BigFloat refine_root(const RationalPoly& p, const SturmChain& chain, RootBracket bracket,
                            int digits) {
  if (digits < 1) throw std::invalid_argument("refine_root: digits must be >= 1");
  const unsigned work_bits = bits_for_digits10(static_cast<unsigned>(2 * digits)) + 64;
  ScopedPrecision scope(work_bits);
  if (!bracket.pinpoint) {
    const IntPoly& ip = chain.polynomial();
    int s_lo = ip.sign_at(bracket.lo);
    const bool sign_bisect = s_lo != 0 && s_lo == -ip.sign_at(bracket.hi);
    // relative width 10^-(digits+3)
    const Rational tol_num = pow_rational(Rational(10), digits + 3);
    while (!bracket.pinpoint) {
      Rational scale = abs(bracket.lo);
      if (Rational h = abs(bracket.hi); h > scale) scale = h;
      if ((bracket.hi - bracket.lo) * tol_num <= scale) break;
      Rational mid = (bracket.lo + bracket.hi) / 2;
      if (sign_bisect) {
        const int sm = ip.sign_at(mid);
        if (sm == 0) {
          bracket = {mid, mid, true};
          break;
        }
        if (sm == s_lo)
          bracket.lo = std::move(mid);
        else
          bracket.hi = std::move(mid);
      } else {
        if (chain.is_root(mid)) {
          bracket = {mid, mid, true};
          break;
        }
        if (chain.count_open(bracket.lo, mid) == 1)
          bracket.hi = std::move(mid);
        else
          bracket.lo = std::move(mid);
      }
    }
  }
  if (bracket.pinpoint) return round_sig(to_bigfloat(bracket.lo, work_bits), digits);

  const BigFloat lo_f = to_bigfloat(bracket.lo, work_bits);
  const BigFloat hi_f = to_bigfloat(bracket.hi, work_bits);
  BigFloat x = (lo_f + hi_f) / 2;
  const RationalPoly dp = p.derivative();
  for (int it = 0; it < 3; ++it) {
    const BigFloat fx = p(x);
    if (fx.is_zero()) break;
    const BigFloat dfx = dp(x);
    if (dfx.is_zero()) break;
    BigFloat step = fx / dfx;
    // only trust Newton while it stays inside the certified bracket
    BigFloat next = x - step;
    if (next < lo_f || next > hi_f) break;
    x = next;
  }
  return round_sig(x, digits);
}

// All distinct real roots of p in (lo, hi), ascending, each correct to
// `digits` significant decimal digits.
inline std::vector<BigFloat> isolate_real_roots(const RationalPoly& p, const Rational& lo,
                                                const Rational& hi, int digits) {
  SturmChain chain(p);
  std::vector<BigFloat> roots;
  for (auto& bracket : isolate_root_brackets(chain, lo, hi))
    roots.push_back(refine_root(p, chain, bracket, digits));
  return roots;
}

}  // namespace boxatom
