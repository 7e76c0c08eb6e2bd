#pragma once

// Polynomial solutions of the radial problem. The ansatz
//   R(r) = r^l (1-r) e^{-alpha r} P(r),  P of degree nu,
// closes when alpha = beta/(l+nu+2); the expansion coefficients then obey
//   c_{j+2} = A_j c_{j+1} + B_j c_j,  c_0 = 1,  c_1 = A_{-1} c_0,
// with A_j, B_j linear in beta (alpha already eliminated):
//   A_j = [2 beta (j-nu) + (j^2 + j(2l+5) + 2(2l+3))(l+nu+2)]
//         / [(j+2)(j+2l+3)(l+nu+2)]
//   B_j = 2 beta (nu-j) / [(j+2)(j+2l+3)(l+nu+2)]
// The same formula evaluated at j = -1 reproduces the initial relation
// c_1 = (alpha + 1 - beta/(l+1)) c_0, which the tests validate by recovering
// the closed-form roots beta_l = (l+1)(l+2) at nu = 0.
//
// Requiring c_{nu+1} = 0 quantizes beta: the truncation polynomial has
// degree nu+1 and (observed, checked per instance) nu+1 simple positive
// roots; the i-th root in ascending order yields a solution whose
// polynomial factor has exactly i zeros in (0,1), so i is the radial
// quantum number. The energy is E = -beta^2 / (2 (l+nu+2)^2).

#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "boxatom/bigfloat.hpp"
#include "boxatom/polynomial.hpp"
#include "boxatom/rational.hpp"
#include "boxatom/sturm.hpp"

namespace boxatom {

// Raised when a structural expectation fails (root count, node ordering):
// such a case would be evidence against the model, not a recoverable input
// error, so it is never silently dropped.
class ModelAnomalyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RecurrenceSpec {
  int l = 0;
  int nu = 0;  // degree of the polynomial factor
};

struct RecurrenceCoefficients {
  RationalPoly a;  // A_j(beta)
  RationalPoly b;  // B_j(beta)
};

inline RecurrenceCoefficients recurrence_coefficients(const RecurrenceSpec& spec, int j) {
  if (spec.l < 0 || spec.nu < 0)
    throw std::invalid_argument("recurrence_coefficients: l, nu must be >= 0");
  if (j < -1) throw std::invalid_argument("recurrence_coefficients: j must be >= -1");
  const long l = spec.l, nu = spec.nu;
  const Rational den((j + 2) * (j + 2 * l + 3) * (l + nu + 2));
  RecurrenceCoefficients out;
  out.a = RationalPoly({Rational((j * j + j * (2 * l + 5) + 2 * (2 * l + 3)) * (l + nu + 2)) / den,
                        Rational(2 * (j - nu)) / den});
  // B_{-1} multiplies c_{-1} = 0; return it as zero
  out.b = (j == -1) ? RationalPoly{}
                    : RationalPoly({Rational(0), Rational(2 * (nu - j)) / den});
  return out;
}

// c_0 ... c_{nu+1} as exact polynomials in beta.
inline std::vector<RationalPoly> recurrence_polynomials(const RecurrenceSpec& spec) {
  std::vector<RationalPoly> c;
  c.reserve(static_cast<std::size_t>(spec.nu) + 2);
  c.push_back(RationalPoly::constant(Rational(1)));
  c.push_back(recurrence_coefficients(spec, -1).a);
  for (int j = 0; j <= spec.nu - 1; ++j) {
    const auto [a, b] = recurrence_coefficients(spec, j);
    c.push_back(a * c[c.size() - 1] + b * c[c.size() - 2]);
  }
  return c;
}

// The truncation condition c_{nu+1}(beta) = 0; degree is exactly nu+1.
inline RationalPoly truncation_polynomial(const RecurrenceSpec& spec) {
  RationalPoly p = recurrence_polynomials(spec).back();
  if (p.degree() != spec.nu + 1)
    throw ModelAnomalyError("truncation polynomial for (l=" + std::to_string(spec.l) +
                            ", nu=" + std::to_string(spec.nu) + ") has degree " +
                            std::to_string(p.degree()) + ", expected " +
                            std::to_string(spec.nu + 1));
  return p;
}

inline BigFloat polysol_energy(int l, int nu, const BigFloat& beta) {
  if (l < 0 || nu < 0) throw std::invalid_argument("polysol_energy: l, nu must be >= 0");
  const long m = l + nu + 2;
  ScopedPrecision scope(precision_bits(beta));
  return -beta * beta / to_bigfloat(Rational(2 * m * m));
}

// Zeros of the polynomial factor sum c_j r^j in the open interval (0,1),
// by exact Sturm count. Boundary zeros at r = 0 (vanishing low-order
// coefficients) and r = 1 (exact factors of 1-r) are divided out, matching
// the convention that nodes are counted strictly inside the box.
inline int node_count(const std::vector<Rational>& coefficients) {
  RationalPoly p{std::vector<Rational>(coefficients)};
  if (p.is_zero()) throw std::invalid_argument("node_count: zero polynomial");
  if (p.degree() == 0) return 0;
  // strip r = 0 roots: drop leading zero coefficients
  std::vector<Rational> c = p.coefficients();
  std::size_t low = 0;
  while (low < c.size() && c[low].is_zero()) ++low;
  c.erase(c.begin(), c.begin() + static_cast<long>(low));
  p = RationalPoly(std::move(c));
  // strip r = 1 roots by exact synthetic division
  while (!p.is_zero() && p(Rational(1)).is_zero()) {
    const auto& pc = p.coefficients();
    std::vector<Rational> q(pc.size() - 1, Rational(0));
    Rational carry(0);
    for (std::size_t i = pc.size(); i-- > 1;) {
      carry += pc[i];
      q[i - 1] = carry;
    }
    p = RationalPoly(std::move(q));
  }
  if (p.is_zero() || p.degree() == 0) return 0;
  return sturm_count(p, Rational(0), Rational(1));
}

// Floating-coefficient entry point: the dyadic values embed exactly into
// rationals, so the count is exact for the polynomial given. `digits` is
// the precision the coefficients were prepared at (see the precondition on
// the caller); it only enters the error message on failure.
inline int node_count(std::span<const BigFloat> coefficients, int digits) {
  if (digits < 1) throw std::invalid_argument("node_count: digits must be >= 1");
  std::vector<Rational> c;
  c.reserve(coefficients.size());
  for (const auto& v : coefficients) c.push_back(to_rational(v));
  return node_count(c);
}

struct PolySolution {
  int l = 0;
  int nu = 0;
  int nodes = 0;  // index i in ascending root order; the radial quantum number
  BigFloat beta_root;
  BigFloat alpha;
  BigFloat energy;
  std::vector<BigFloat> coefficients;  // c_0 ... c_nu at beta_root, c_0 = 1
};

// All nu+1 positive truncation roots for (l, nu), ascending, each carrying
// its verified node count. Works at twice the requested digits internally.
inline std::vector<PolySolution> polysol_roots(int l, int nu, int digits) {
  if (digits < 1) throw std::invalid_argument("polysol_roots: digits must be >= 1");
  const RecurrenceSpec spec{l, nu};
  const std::vector<RationalPoly> c = recurrence_polynomials(spec);
  const RationalPoly& trunc = c.back();
  if (trunc.degree() != nu + 1)
    throw ModelAnomalyError("truncation polynomial degree mismatch");

  SturmChain chain(trunc);
  const Rational bound = cauchy_root_bound(trunc);
  auto brackets = isolate_root_brackets(chain, Rational(0), bound);
  if (static_cast<int>(brackets.size()) != nu + 1)
    throw ModelAnomalyError("(l=" + std::to_string(l) + ", nu=" + std::to_string(nu) + "): found " +
                            std::to_string(brackets.size()) + " positive roots, expected " +
                            std::to_string(nu + 1));

  const int work_digits = 2 * digits;
  const unsigned work_bits = bits_for_digits10(static_cast<unsigned>(work_digits)) + 64;
  std::vector<PolySolution> out;
  out.reserve(brackets.size());
  for (std::size_t i = 0; i < brackets.size(); ++i) {
    // stable node count: the count must agree across the sampling interval;
    // shrink the interval and retry if it does not. Widths are powers of two
    // so the sample points keep small dyadic denominators.
    RootBracket b = brackets[i];
    long width_log2 = 32;
    int nodes = -1;
    for (int attempt = 0; attempt < 4; ++attempt) {
      b = tighten_bracket(chain, b, pow_rational(Rational(1, 2), width_log2));
      auto eval_nodes = [&](const Rational& beta) {
        std::vector<Rational> coeffs;
        coeffs.reserve(static_cast<std::size_t>(nu) + 1);
        for (int j = 0; j <= nu; ++j) coeffs.push_back(c[static_cast<std::size_t>(j)](beta));
        return node_count(coeffs);
      };
      if (b.pinpoint) {
        nodes = eval_nodes(b.lo);
        break;
      }
      const int at_mid = eval_nodes((b.lo + b.hi) / 2);
      if (eval_nodes(b.lo) == at_mid && eval_nodes(b.hi) == at_mid) {
        nodes = at_mid;
        break;
      }
      width_log2 *= 2;  // escalate
    }
    if (nodes < 0)
      throw ModelAnomalyError("node count did not stabilize for (l=" + std::to_string(l) +
                              ", nu=" + std::to_string(nu) + ") root " + std::to_string(i));
    if (nodes != static_cast<int>(i))
      throw ModelAnomalyError("node count " + std::to_string(nodes) + " != ascending index " +
                              std::to_string(i) + " for (l=" + std::to_string(l) +
                              ", nu=" + std::to_string(nu) + ")");

    ScopedPrecision scope(work_bits);
    PolySolution sol;
    sol.l = l;
    sol.nu = nu;
    sol.nodes = nodes;
    const BigFloat refined = refine_root(trunc, chain, b, work_digits);
    sol.beta_root = round_sig(refined, digits);
    sol.alpha = round_sig(refined / to_bigfloat(Rational(l + nu + 2), work_bits), digits);
    sol.energy = round_sig(polysol_energy(l, nu, refined), digits);
    sol.coefficients.reserve(static_cast<std::size_t>(nu) + 1);
    for (int j = 0; j <= nu; ++j)
      sol.coefficients.push_back(c[static_cast<std::size_t>(j)](at_precision(refined, work_bits)));
    out.push_back(std::move(sol));
  }
  return out;
}

}  // namespace boxatom
