#pragma once

// Symmetric matrices over exact rationals: Sylvester inertia via LDL^T with
// diagonal and 2x2 block pivoting, an exact dense linear solver for inverse
// iteration, and a floating LDL^T used only to steer bisection probes.

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "boxatom/bigfloat.hpp"
#include "boxatom/rational.hpp"

namespace boxatom {

class SymmetricRational {
 public:
  explicit SymmetricRational(int n) : n_(n), upper_(index_count(n), Rational(0)) {
    if (n < 1) throw std::invalid_argument("SymmetricRational: dimension must be >= 1");
  }

  static SymmetricRational identity(int n) {
    SymmetricRational m(n);
    for (int i = 0; i < n; ++i) m.set(i, i, Rational(1));
    return m;
  }
  static SymmetricRational diagonal(const std::vector<Rational>& d) {
    SymmetricRational m(static_cast<int>(d.size()));
    for (int i = 0; i < m.n_; ++i) m.set(i, i, d[static_cast<std::size_t>(i)]);
    return m;
  }

  int dimension() const { return n_; }
  const Rational& at(int i, int j) const { return upper_[index(i, j)]; }
  void set(int i, int j, Rational v) { upper_[index(i, j)] = std::move(v); }

  // this += a * other
  SymmetricRational& axpy(const Rational& a, const SymmetricRational& other) {
    if (other.n_ != n_) throw std::invalid_argument("axpy: dimension mismatch");
    for (std::size_t k = 0; k < upper_.size(); ++k) upper_[k] += a * other.upper_[k];
    return *this;
  }

  std::vector<std::vector<Rational>> dense() const {
    std::vector<std::vector<Rational>> a(static_cast<std::size_t>(n_),
                                         std::vector<Rational>(static_cast<std::size_t>(n_)));
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = at(i, j);
    return a;
  }

 private:
  static std::size_t index_count(int n) { return static_cast<std::size_t>(n) * (n + 1) / 2; }
  std::size_t index(int i, int j) const {
    if (i > j) std::swap(i, j);
    if (i < 0 || j >= n_) throw std::out_of_range("SymmetricRational: index");
    // row-major upper triangle
    return static_cast<std::size_t>(i) * (2 * n_ - i - 1) / 2 + static_cast<std::size_t>(j);
  }

  int n_;
  std::vector<Rational> upper_;
};

struct Inertia {
  int negative = 0, zero = 0, positive = 0;
  bool operator==(const Inertia&) const = default;
};

// Exact Sylvester inertia. Diagonal pivoting on the largest remaining
// diagonal entry; when the whole trailing diagonal vanishes, a 2x2 block
// pivot [[0,a],[a,0]] contributes one negative and one positive eigenvalue.
inline Inertia inertia(const SymmetricRational& m) {
  const int n = m.dimension();
  auto a = m.dense();
  auto sym_swap = [&](int p, int q) {
    if (p == q) return;
    std::swap(a[static_cast<std::size_t>(p)], a[static_cast<std::size_t>(q)]);
    for (int r = 0; r < n; ++r)
      std::swap(a[static_cast<std::size_t>(r)][static_cast<std::size_t>(p)],
                a[static_cast<std::size_t>(r)][static_cast<std::size_t>(q)]);
  };

  Inertia result;
  int k = 0;
  while (k < n) {
    int pivot = -1;
    for (int i = k; i < n; ++i) {
      const auto& d = a[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)];
      if (d.is_zero()) continue;
      if (pivot < 0 || abs(d) > abs(a[static_cast<std::size_t>(pivot)][static_cast<std::size_t>(pivot)]))
        pivot = i;
    }
    if (pivot >= 0) {
      sym_swap(k, pivot);
      const Rational d = a[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)];
      (d < 0 ? result.negative : result.positive) += 1;
      for (int i = k + 1; i < n; ++i) {
        const Rational f = a[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] / d;
        if (f.is_zero()) continue;
        for (int j = i; j < n; ++j)
          a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] -=
              f * a[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
      }
      for (int i = k + 1; i < n; ++i)
        for (int j = i; j < n; ++j)
          a[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] =
              a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      ++k;
      continue;
    }
    // trailing diagonal is all zero; look for an off-diagonal entry
    int bi = -1, bj = -1;
    for (int i = k; i < n && bi < 0; ++i)
      for (int j = i + 1; j < n; ++j)
        if (!a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)].is_zero()) {
          bi = i;
          bj = j;
          break;
        }
    if (bi < 0) {
      result.zero += n - k;
      break;
    }
    sym_swap(k, bi);
    sym_swap(k + 1, bj);
    const Rational off = a[static_cast<std::size_t>(k)][static_cast<std::size_t>(k + 1)];
    result.negative += 1;
    result.positive += 1;
    for (int r = k + 2; r < n; ++r) {
      const Rational u = a[static_cast<std::size_t>(r)][static_cast<std::size_t>(k)];
      const Rational v = a[static_cast<std::size_t>(r)][static_cast<std::size_t>(k + 1)];
      if (u.is_zero() && v.is_zero()) continue;
      // Schur update for the block [[0, off], [off, 0]]
      for (int s = r; s < n; ++s) {
        const Rational us = a[static_cast<std::size_t>(s)][static_cast<std::size_t>(k)];
        const Rational vs = a[static_cast<std::size_t>(s)][static_cast<std::size_t>(k + 1)];
        a[static_cast<std::size_t>(r)][static_cast<std::size_t>(s)] -= (u * vs + v * us) / off;
      }
    }
    for (int i = k + 2; i < n; ++i)
      for (int j = i; j < n; ++j)
        a[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] =
            a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    k += 2;
  }
  result.zero = n - result.negative - result.positive;
  return result;
}

// Exact dense solve A x = b by Gaussian elimination with partial pivoting.
// Returns nullopt when A is singular.
inline std::optional<std::vector<Rational>> solve_dense(std::vector<std::vector<Rational>> a,
                                                        std::vector<Rational> b) {
  const std::size_t n = a.size();
  if (b.size() != n) throw std::invalid_argument("solve_dense: size mismatch");
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    for (std::size_t i = k + 1; i < n; ++i)
      if (abs(a[i][k]) > abs(a[pivot][k])) pivot = i;
    if (a[pivot][k].is_zero()) return std::nullopt;
    std::swap(a[k], a[pivot]);
    std::swap(b[k], b[pivot]);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a[i][k].is_zero()) continue;
      const Rational f = a[i][k] / a[k][k];
      for (std::size_t j = k; j < n; ++j) a[i][j] -= f * a[k][j];
      b[i] -= f * b[k];
    }
  }
  std::vector<Rational> x(n, Rational(0));
  for (std::size_t i = n; i-- > 0;) {
    Rational s = b[i];
    for (std::size_t j = i + 1; j < n; ++j) s -= a[i][j] * x[j];
    x[i] = s / a[i][i];
  }
  return x;
}

struct FloatInertia {
  int negative = 0, positive = 0;
  bool reliable = true;  // false when a pivot fell below the trust threshold
};

// Floating LDL^T inertia at `bits` working precision. Used purely as a
// bisection accelerator; anything certified goes through inertia() above.
inline FloatInertia ldlt_inertia_float(std::vector<BigFloat> a, int n, unsigned bits) {
  ScopedPrecision scope(bits);
  BigFloat max_entry = to_bigfloat(Rational(0), bits);
  for (const auto& v : a)
    if (abs(v) > max_entry) max_entry = abs(v);
  FloatInertia result;
  if (max_entry.is_zero()) {
    result.reliable = false;
    return result;
  }
  BigFloat tau = max_entry;
  mpfr_mul_2si(tau.backend().data(), tau.backend().data(),
               -static_cast<long>(bits * 3 / 5), MPFR_RNDN);
  auto at = [&](int i, int j) -> BigFloat& { return a[static_cast<std::size_t>(i) * n + j]; };
  auto sym_swap = [&](int p, int q) {
    if (p == q) return;
    for (int r = 0; r < n; ++r) std::swap(at(p, r), at(q, r));
    for (int r = 0; r < n; ++r) std::swap(at(r, p), at(r, q));
  };
  int k = 0;
  while (k < n) {
    int pivot = k;
    for (int i = k + 1; i < n; ++i)
      if (abs(at(i, i)) > abs(at(pivot, pivot))) pivot = i;
    if (abs(at(pivot, pivot)) > tau) {
      sym_swap(k, pivot);
      const BigFloat d = at(k, k);
      (sign(d) < 0 ? result.negative : result.positive) += 1;
      for (int i = k + 1; i < n; ++i) {
        const BigFloat f = at(i, k) / d;
        for (int j = k + 1; j <= i; ++j) at(i, j) -= f * at(k, j);
      }
      for (int i = k + 1; i < n; ++i)
        for (int j = k + 1; j < i; ++j) at(j, i) = at(i, j);
      ++k;
      continue;
    }
    // no trustworthy diagonal pivot; try a 2x2 block
    int bi = -1, bj = -1;
    BigFloat best = tau;
    for (int i = k; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (abs(at(i, j)) > best) {
          best = abs(at(i, j));
          bi = i;
          bj = j;
        }
    if (bi < 0) {
      result.reliable = false;  // trailing block numerically zero: probe sits on an eigenvalue
      return result;
    }
    sym_swap(k, bi);
    sym_swap(k + 1, bj);
    const BigFloat off = at(k, k + 1);
    const BigFloat dk = at(k, k), dk1 = at(k + 1, k + 1);
    // det = dk*dk1 - off^2 < 0 within trust region, so one of each sign
    if (dk * dk1 >= off * off) {
      result.reliable = false;
      return result;
    }
    result.negative += 1;
    result.positive += 1;
    const BigFloat det = dk * dk1 - off * off;
    for (int r = k + 2; r < n; ++r) {
      const BigFloat u = at(r, k), v = at(r, k + 1);
      // multipliers from the exact 2x2 inverse
      const BigFloat mu = (dk1 * u - off * v) / det;
      const BigFloat mv = (dk * v - off * u) / det;
      for (int s = k + 2; s <= r; ++s)
        at(r, s) -= mu * at(k, s) + mv * at(k + 1, s);
    }
    for (int i = k + 2; i < n; ++i)
      for (int j = k + 2; j < i; ++j) at(j, i) = at(i, j);
    k += 2;
  }
  return result;
}

}  // namespace boxatom
