#include <catch2/catch_amalgamated.hpp>

#include "boxatom/model.hpp"

using namespace boxatom;

TEST_CASE("to_dimensionless reduces the physical problem", "[model]") {
  // atomic units
  auto r = to_dimensionless({Rational(1), Rational(1), Rational(1), Rational(1)});
  CHECK(r.problem.beta == Rational(1));
  CHECK(r.energy_scale == Rational(1));
  CHECK(r.problem.r0 == Rational(1));

  r = to_dimensionless({Rational(1), Rational(1), Rational(1), Rational(2)});
  CHECK(r.problem.beta == Rational(2));
  CHECK(r.energy_scale == Rational(1, 4));

  r = to_dimensionless({Rational(1), Rational(1), Rational(3), Rational(4)});
  CHECK(r.problem.beta == Rational(12));
  CHECK(r.energy_scale == Rational(1, 16));

  CHECK_THROWS_AS(to_dimensionless({Rational(0), Rational(1), Rational(1), Rational(1)}),
                  std::invalid_argument);
  CHECK_THROWS_AS(to_dimensionless({Rational(1), Rational(1), Rational(-1), Rational(1)}),
                  std::invalid_argument);
}

TEST_CASE("round trip through re-dimensionalization is exact", "[model]") {
  PhysicalConfig cfg{Rational(2), Rational(3), Rational(5, 7), Rational(11, 13)};
  auto r = to_dimensionless(cfg);
  // physical E = scale * E(1, beta); reconstructing beta from the scale and
  // the config is the identity in exact arithmetic
  Rational beta_back = cfg.electron_mass * cfg.box_radius * cfg.coulomb_strength /
                       (cfg.hbar * cfg.hbar);
  CHECK(beta_back == r.problem.beta);
  CHECK(r.energy_scale * cfg.electron_mass * cfg.box_radius * cfg.box_radius ==
        cfg.hbar * cfg.hbar);
}

TEST_CASE("scaling_partner pairs the two dimensionless forms", "[model]") {
  auto p = scaling_partner(0, Rational(1));
  CHECK(p.unit_radius.beta == Rational(1));
  CHECK(p.unit_coupling.r0 == Rational(1));
  CHECK(p.factor == Rational(1));

  p = scaling_partner(1, Rational(2));
  CHECK(p.unit_radius.r0 == Rational(1));
  CHECK(p.unit_radius.beta == Rational(2));
  CHECK(p.unit_coupling.beta == Rational(1));
  CHECK(p.unit_coupling.r0 == Rational(2));
  CHECK(p.factor == Rational(4));
  CHECK(p.unit_radius.l == 1);
  CHECK(p.unit_coupling.l == 1);

  CHECK_THROWS_AS(scaling_partner(0, Rational(0)), std::invalid_argument);
  CHECK_THROWS_AS(scaling_partner(0, Rational(-2)), std::invalid_argument);
}

TEST_CASE("free_atom_energy is exact", "[model]") {
  CHECK(free_atom_energy({0, 0}) == Rational(-1, 2));
  CHECK(free_atom_energy({1, 1}) == Rational(-1, 18));
  CHECK(free_atom_energy({0, 2}) == Rational(-1, 18));
  CHECK(free_atom_energy({2, 0}) == Rational(-1, 18));
  CHECK_THROWS_AS(free_atom_energy({-1, 0}), std::invalid_argument);
}

TEST_CASE("free-atom ordering follows n+l", "[model]") {
  for (int n = 0; n <= 4; ++n)
    for (int l = 0; l <= 4; ++l)
      for (int n2 = 0; n2 <= 4; ++n2)
        for (int l2 = 0; l2 <= 4; ++l2)
          if (n + l > n2 + l2) CHECK(free_atom_energy({n, l}) > free_atom_energy({n2, l2}));
}
