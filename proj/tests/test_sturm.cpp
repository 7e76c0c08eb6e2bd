#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "boxatom/sturm.hpp"

using namespace boxatom;

namespace {

RationalPoly quadratic(Rational c0, Rational c1, Rational c2) {
  return RationalPoly({std::move(c0), std::move(c1), std::move(c2)});
}

// c_2(beta) for the (l=0, nu=1) truncation condition: 1 - 2b/3 + 2b^2/27
RationalPoly c2_poly() {
  return quadratic(Rational(1), Rational(-2, 3), Rational(2, 27));
}

double as_double(const BigFloat& x) { return static_cast<double>(x); }

}  // namespace

TEST_CASE("sturm_count on reference polynomials", "[sturm]") {
  CHECK(sturm_count(quadratic(Rational(-2), Rational(0), Rational(1)), Rational(0), Rational(2)) == 1);
  CHECK(sturm_count(quadratic(Rational(1), Rational(0), Rational(1)), Rational(-10), Rational(10)) == 0);
  CHECK(sturm_count(c2_poly(), Rational(0), Rational(10)) == 2);
  CHECK(sturm_count(c2_poly(), Rational(0), Rational(100)) == 2);
  CHECK(sturm_count(c2_poly(), Rational(0), Rational(5)) == 1);
}

TEST_CASE("sturm preconditions are rejected", "[sturm]") {
  RationalPoly p = quadratic(Rational(-1), Rational(0), Rational(1));  // roots +-1
  CHECK_THROWS_AS(sturm_count(p, Rational(1), Rational(2)), std::invalid_argument);
  CHECK_THROWS_AS(sturm_count(p, Rational(0), Rational(0)), std::invalid_argument);
  CHECK_THROWS_AS(SturmChain(RationalPoly{}), std::invalid_argument);
}

TEST_CASE("isolate_real_roots matches closed forms", "[sturm]") {
  auto roots = isolate_real_roots(quadratic(Rational(-2), Rational(0), Rational(1)), Rational(0),
                                  Rational(2), 10);
  REQUIRE(roots.size() == 1);
  CHECK(format_sig(roots[0], 10) == "1.414213562");

  // roots (9 +- 3*sqrt(3))/2
  roots = isolate_real_roots(c2_poly(), Rational(0), Rational(100), 10);
  REQUIRE(roots.size() == 2);
  CHECK(format_sig(roots[0], 10) == "1.901923789");
  CHECK(format_sig(roots[1], 10) == "7.098076211");

  // c_1(beta) for (l=0, nu=0): 1 - beta/2
  roots = isolate_real_roots(RationalPoly({Rational(1), Rational(-1, 2)}), Rational(0),
                             Rational(100), 10);
  REQUIRE(roots.size() == 1);
  CHECK(format_sig(roots[0], 10) == "2.000000000");
}

TEST_CASE("isolation handles exact rational and multiple roots", "[sturm]") {
  // (x-1)^2: one distinct root, found exactly
  auto roots = isolate_real_roots(quadratic(Rational(1), Rational(-2), Rational(1)), Rational(0),
                                  Rational(3), 12);
  REQUIRE(roots.size() == 1);
  CHECK(to_rational(roots[0]) == Rational(1));

  // midpoint collision: root at 1/2 inside (0,1) next to another root
  RationalPoly p = quadratic(Rational(1, 8), Rational(-3, 4), Rational(1)) *
                   RationalPoly({Rational(-3), Rational(1)});  // roots 1/4, 1/2 (x2 scaled), 3
  auto all = isolate_real_roots(p, Rational(0), Rational(4), 10);
  REQUIRE(all.size() == 3);
  CHECK(as_double(all[0]) == Catch::Approx(0.25).epsilon(1e-9));
  CHECK(as_double(all[1]) == Catch::Approx(0.5).epsilon(1e-9));
  CHECK(as_double(all[2]) == Catch::Approx(3.0).epsilon(1e-9));
}

TEST_CASE("count is monotone under interval nesting", "[sturm]") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> coef(-9, 9);
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<Rational> c;
    for (int i = 0; i <= 6; ++i) c.emplace_back(coef(rng));
    RationalPoly p(std::move(c));
    if (p.is_zero()) continue;
    SturmChain chain(p);
    Rational a(-20), b(20), a2(-3), b2(5);
    if (chain.is_root(a) || chain.is_root(b) || chain.is_root(a2) || chain.is_root(b2)) continue;
    CHECK(chain.count_open(a2, b2) <= chain.count_open(a, b));
  }
}

TEST_CASE("isolation returns exactly sturm_count roots with small residuals", "[sturm]") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> coef(-9, 9);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<Rational> c;
    for (int i = 0; i <= 5; ++i) c.emplace_back(coef(rng));
    RationalPoly p(std::move(c));
    if (p.degree() < 1) continue;
    SturmChain chain(p);
    Rational lo(-50), hi(50);
    if (chain.is_root(lo) || chain.is_root(hi)) continue;
    const int expected = chain.count_open(lo, hi);
    auto roots = isolate_real_roots(p, lo, hi, 10);
    REQUIRE(static_cast<int>(roots.size()) == expected);
    const RationalPoly dp = p.derivative();
    for (std::size_t i = 0; i < roots.size(); ++i) {
      if (i > 0) CHECK(roots[i - 1] < roots[i]);  // strictly ascending
      // |p(r)| below the derivative-scaled tolerance at 2x precision
      ScopedPrecision scope(bits_for_digits10(20) + 64);
      BigFloat r = at_precision(roots[i], bits_for_digits10(20) + 64);
      BigFloat residual = abs(p(r));
      BigFloat scale = abs(dp(r)) * abs(r) + 1;
      CHECK(residual <= scale * to_bigfloat(pow_rational(Rational(1, 10), 9)));
    }
  }
}

TEST_CASE("cauchy bound contains every real root", "[sturm]") {
  RationalPoly p = c2_poly();
  Rational bound = cauchy_root_bound(p);
  SturmChain chain(p);
  CHECK(chain.count_open(Rational(0), bound) == 2);
  CHECK(chain.count_open(-bound, bound) == 2);
}
