#include <catch2/catch_amalgamated.hpp>

#include "boxatom/bessel.hpp"

using namespace boxatom;

namespace {

double rel_err(const BigFloat& got, const char* ref) {
  BigFloat r = parse_bigfloat(ref, 256);
  return static_cast<double>(abs(got - r) / abs(r));
}

}  // namespace

TEST_CASE("series evaluation matches known values", "[bessel]") {
  ScopedPrecision scope(256);
  BigFloat one = to_bigfloat(Rational(1), 256);
  // J_0(1) and J_1(1), 16 digits
  CHECK(rel_err(cyl_bessel_j(0, one), "0.7651976865579666") < 1e-15);
  CHECK(rel_err(cyl_bessel_j(1, one), "0.4400505857449335") < 1e-15);
  // j_0(x) = sin(x)/x
  BigFloat x = to_bigfloat(Rational(7, 3), 256);
  CHECK(abs(spherical_bessel_j(0, x) - sin(x) / x) < to_bigfloat(pow_rational(Rational(1, 10), 70)));
  // j_1(x) = sin(x)/x^2 - cos(x)/x
  CHECK(abs(spherical_bessel_j(1, x) - (sin(x) / (x * x) - cos(x) / x)) <
        to_bigfloat(pow_rational(Rational(1, 10), 70)));
}

TEST_CASE("spherical zeros of j_0 are multiples of pi", "[bessel]") {
  ScopedPrecision scope(256);
  const BigFloat pi = bigfloat_pi(256);
  for (int k = 1; k <= 5; ++k) {
    BigFloat z = spherical_bessel_zero(0, k, 14);
    CHECK(abs(z - k * pi) < to_bigfloat(pow_rational(Rational(1, 10), 13)) * z);
  }
}

TEST_CASE("ordinary Bessel zeros match references", "[bessel]") {
  CHECK(rel_err(cyl_bessel_zero(1, 1, 12), "3.831705970207512") < 1e-11);
  CHECK(rel_err(cyl_bessel_zero(0, 2, 12), "5.520078110286311") < 1e-11);
  CHECK(rel_err(cyl_bessel_zero(7, 4, 12), "21.64154101989096") < 1e-11);
}

TEST_CASE("box-level oracle reproduces the free spectrum", "[bessel]") {
  // E_00 = pi^2/2
  ScopedPrecision scope(256);
  const BigFloat pi = bigfloat_pi(256);
  CHECK(abs(box_level_oracle(0, 0, 12) - pi * pi / 2) <
        to_bigfloat(pow_rational(Rational(1, 10), 11)));
  CHECK(rel_err(box_level_oracle(0, 1, 12), "10.09536427") < 5e-10);
  CHECK(rel_err(box_level_oracle(2, 0, 12), "44.41321980") < 5e-10);
  CHECK(rel_err(box_level_oracle(5, 1, 12), "207.4949921") < 5e-10);
}

TEST_CASE("critical-coupling oracle spot values", "[bessel]") {
  CHECK(rel_err(critical_coupling_oracle(0, 0, 12), "1.835246330") < 5e-10);
  CHECK(rel_err(critical_coupling_oracle(1, 2, 12), "19.03014419") < 5e-10);
  CHECK(rel_err(critical_coupling_oracle(3, 3, 12), "58.54453721") < 5e-10);
  CHECK(rel_err(critical_coupling_oracle(0, 3, 12), "15.36345002") < 5e-10);
}

TEST_CASE("invalid arguments are rejected", "[bessel]") {
  CHECK_THROWS_AS(cyl_bessel_zero(-1, 1, 10), std::invalid_argument);
  CHECK_THROWS_AS(cyl_bessel_zero(0, 0, 10), std::invalid_argument);
  CHECK_THROWS_AS(box_level_oracle(0, 0, 0), std::invalid_argument);
}
