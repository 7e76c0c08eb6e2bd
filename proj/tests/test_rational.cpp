#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "boxatom/rational.hpp"

using namespace boxatom;

TEST_CASE("rational arithmetic is canonical", "[rational]") {
  Rational q(2, 6);
  CHECK(numerator(q) == 1);
  CHECK(denominator(q) == 3);

  Rational r(-4, 8);
  CHECK(numerator(r) == -1);
  CHECK(denominator(r) == 2);  // denominator stays positive

  std::mt19937 rng(42);
  std::uniform_int_distribution<int> dist(-50, 50);
  for (int i = 0; i < 200; ++i) {
    int a = dist(rng), b = dist(rng), c = dist(rng), d = dist(rng);
    if (b == 0 || d == 0) continue;
    Rational x(a, b), y(c, d);
    for (Rational v : {x + y, x - y, x * y}) {
      CHECK(denominator(v) > 0);
      CHECK(mp::gcd(abs(numerator(v)), denominator(v)) == 1);
    }
  }
}

TEST_CASE("pow_rational handles negative exponents", "[rational]") {
  CHECK(pow_rational(Rational(2, 3), 3) == Rational(8, 27));
  CHECK(pow_rational(Rational(2, 3), -2) == Rational(9, 4));
  CHECK(pow_rational(Rational(-2), 3) == Rational(-8));
  CHECK(pow_rational(Rational(-2), -3) == Rational(-1, 8));
  CHECK(pow_rational(Rational(5), 0) == Rational(1));
  CHECK_THROWS_AS(pow_rational(Rational(0), -1), std::domain_error);
}

TEST_CASE("parse_rational covers fractions, decimals, exponents", "[rational]") {
  CHECK(parse_rational("7") == Rational(7));
  CHECK(parse_rational("-3/4") == Rational(-3, 4));
  CHECK(parse_rational("0.25") == Rational(1, 4));
  CHECK(parse_rational("-1.5e-3") == Rational(-3, 2000));
  CHECK(parse_rational(".5") == Rational(1, 2));
  CHECK(parse_rational("2e3") == Rational(2000));
  CHECK(parse_rational(" 12.0 ") == Rational(12));
  CHECK(parse_rational("+9/3") == Rational(3));

  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1.2.3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("."), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1e"), std::invalid_argument);
}

TEST_CASE("sign helpers", "[rational]") {
  CHECK(sign(Rational(-5, 7)) == -1);
  CHECK(sign(Rational(0)) == 0);
  CHECK(sign(Integer(12)) == 1);
}
