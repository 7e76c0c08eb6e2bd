#pragma once

// Problem definitions and the scaling identities that reduce the physical
// Hamiltonian to the two equivalent dimensionless forms:
//   E(r0, K) = hbar^2/(m r0^2) * E(1, beta),   beta = m r0 K / hbar^2
//   E(1, beta) = beta^2 * E(beta, 1)

#include <stdexcept>

#include "boxatom/bigfloat.hpp"
#include "boxatom/rational.hpp"

namespace boxatom {

struct PhysicalConfig {
  Rational electron_mass;
  Rational hbar;
  Rational coulomb_strength;  // energy * length, > 0
  Rational box_radius;
};

struct DimensionlessProblem {
  int l = 0;
  Rational beta;
  Rational r0 = Rational(1);
};

struct QuantumNumbers {
  int n = 0;
  int l = 0;
};

struct DimensionlessReduction {
  DimensionlessProblem problem;  // r0 = 1
  Rational energy_scale;         // physical E = energy_scale * E(1, beta)
};

inline DimensionlessReduction to_dimensionless(const PhysicalConfig& cfg) {
  if (cfg.electron_mass <= 0 || cfg.hbar <= 0 || cfg.coulomb_strength <= 0 || cfg.box_radius <= 0)
    throw std::invalid_argument("to_dimensionless: physical inputs must be positive");
  const Rational h2 = cfg.hbar * cfg.hbar;
  DimensionlessReduction out;
  out.problem.beta = cfg.electron_mass * cfg.box_radius * cfg.coulomb_strength / h2;
  out.problem.r0 = Rational(1);
  out.energy_scale = h2 / (cfg.electron_mass * cfg.box_radius * cfg.box_radius);
  return out;
}

struct ScalingPair {
  DimensionlessProblem unit_radius;    // (l, beta, r0 = 1)
  DimensionlessProblem unit_coupling;  // (l, 1, r0 = beta)
  Rational factor;                     // E(1, beta) = factor * E(beta, 1), factor = beta^2
};

inline ScalingPair scaling_partner(int l, const Rational& beta) {
  if (l < 0) throw std::invalid_argument("scaling_partner: l must be >= 0");
  if (beta <= 0) throw std::invalid_argument("scaling_partner: beta must be positive");
  return {{l, beta, Rational(1)}, {l, Rational(1), beta}, beta * beta};
}

inline ScalingPair scaling_partner(int l, const BigFloat& beta) {
  return scaling_partner(l, to_rational(beta));
}

// Free-atom limit: -1 / (2 (n+l+1)^2), exact.
inline Rational free_atom_energy(const QuantumNumbers& q) {
  if (q.n < 0 || q.l < 0) throw std::invalid_argument("free_atom_energy: quantum numbers must be >= 0");
  const long p = q.n + q.l + 1;
  return Rational(-1, 2 * p * p);
}

}  // namespace boxatom
