#include "doctest.h"

#include <cmath>

#include "geometry.hpp"

using namespace hypres;

TEST_CASE("sinhc is smooth through zero") {
  CHECK(sinhc(0.0) == 1.0);
  CHECK(sinhc(1.0) == doctest::Approx(std::sinh(1.0)).epsilon(1e-15));
  // series branch agrees with the direct quotient just above the switch
  double lo = sinhc(0.99e-4), hi = std::sinh(1.01e-4) / 1.01e-4;
  CHECK(std::fabs(lo - 1.0) < 2e-9);
  CHECK(std::fabs(hi - 1.0) < 2e-9);
  CHECK(sinhc(-2.5) == sinhc(2.5));
}

TEST_CASE("acosh1p avoids cancellation near zero") {
  CHECK(acosh1p(0.0) == 0.0);
  double x = 1e-12;
  // acosh(1+x) ~ sqrt(2x)
  CHECK(acosh1p(x) == doctest::Approx(std::sqrt(2.0 * x)).epsilon(1e-10));
  CHECK(acosh1p(std::cosh(2.0) - 1.0) == doctest::Approx(2.0).epsilon(1e-14));
  CHECK_THROWS_AS(acosh1p(-1e-3), std::domain_error);
}

TEST_CASE("warp factor") {
  HyperbolicModel curved(2.0, 3), flat(0.0, 3);
  CHECK(warp(curved, 1.5) == doctest::Approx(std::sinh(3.0) / 2.0).epsilon(1e-15));
  CHECK(warp(flat, 1.5) == 1.5);
  CHECK(warp(0.7, 0.0) == 0.0);
  // continuity in kappa at the flat limit
  CHECK(std::fabs(warp(1e-7, 2.0) - 2.0) < 1e-12);
  CHECK_THROWS_AS(warp(curved, -0.1), std::domain_error);
}

TEST_CASE("geodesic distance, law of cosines") {
  HyperbolicModel m(1.0, 3);
  // antipodal directions add radii
  CHECK(geodesic_distance(m, 0.7, 0.4, -1.0) == doctest::Approx(1.1).epsilon(1e-14));
  CHECK(geodesic_distance(m, 0.7, 0.4, 1.0) == doctest::Approx(0.3).epsilon(1e-12));
  // right angle at unit radii: cosh d = cosh(1)^2 = 1 + sinh(1)^2
  double s1 = std::sinh(1.0);
  CHECK(geodesic_distance(m, 1.0, 1.0, 0.0) ==
        doctest::Approx(1.5133740065965040).epsilon(1e-14));
  CHECK(std::acosh(1.0 + s1 * s1) == doctest::Approx(1.5133740065965040).epsilon(1e-14));

  // flat limit matches the Euclidean law of cosines
  HyperbolicModel flat(0.0, 3);
  double cg = 0.3;
  double d0 = geodesic_distance(flat, 1.2, 0.8, cg);
  CHECK(d0 == doctest::Approx(std::sqrt(1.2 * 1.2 + 0.64 - 2.0 * 1.2 * 0.8 * cg))
                  .epsilon(1e-14));
  HyperbolicModel tiny(1e-7, 3);
  CHECK(std::fabs(geodesic_distance(tiny, 1.2, 0.8, cg) - d0) < 1e-12);

  // triangle inequality on a sample of configurations
  for (int i = 0; i < 20; i++) {
    double a = 0.1 + 0.13 * i, b = 2.0 - 0.07 * i, c = std::cos(0.37 * i);
    double lhs = geodesic_distance(m, a, b, c);
    CHECK(lhs <= a + b + 1e-12);
    CHECK(lhs >= std::fabs(a - b) - 1e-12);
  }
}

TEST_CASE("geodesic distance from polar points") {
  HyperbolicModel m(0.5, 3);
  PolarPoint p{1.0, {1.0, 0.0, 0.0}}, q{2.0, {0.0, 1.0, 0.0}};
  CHECK(geodesic_distance(m, p, q) ==
        doctest::Approx(geodesic_distance(m, 1.0, 2.0, 0.0)).epsilon(1e-15));
  PolarPoint bad{1.0, {1.0, 0.0}};
  CHECK_THROWS_AS(geodesic_distance(m, p, bad), std::invalid_argument);
}

TEST_CASE("harmonic space dimensions") {
  // n = 3: 2 ell + 1
  CHECK(harmonic_dimension(3, 0) == 1);
  CHECK(harmonic_dimension(3, 1) == 3);
  CHECK(harmonic_dimension(3, 7) == 15);
  // n = 2: two Fourier modes except the constant
  CHECK(harmonic_dimension(2, 0) == 1);
  CHECK(harmonic_dimension(2, 5) == 2);
  // higher dimensional values
  CHECK(harmonic_dimension(4, 2) == 9);
  CHECK(harmonic_dimension(5, 2) == 14);
  CHECK(harmonic_dimension(6, 3) == 50);
  // sum over ell <= L equals dim of degree <= L polynomials restricted: n = 3,
  // L = 3 -> 16
  std::uint64_t total = 0;
  for (int l = 0; l <= 3; l++) total += harmonic_dimension(3, l);
  CHECK(total == 16);
  CHECK_THROWS_AS(harmonic_dimension(1, 0), std::invalid_argument);
}

TEST_CASE("surface measure density") {
  HyperbolicModel m(1.0, 3);
  double s = std::sinh(0.25);
  CHECK(surface_measure_density(m, 0.25, 0.0) == doctest::Approx(s * s).epsilon(1e-14));
  // gradient term enters under the root
  double g2 = 0.01;
  CHECK(surface_measure_density(m, 0.25, g2) ==
        doctest::Approx(s * s * std::sqrt(1.0 + g2 / (s * s))).epsilon(1e-14));
  HyperbolicModel m4(2.0, 4);
  double s4 = std::sinh(2.0) / 2.0;
  CHECK(surface_measure_density(m4, 1.0, 0.0) ==
        doctest::Approx(s4 * s4 * s4).epsilon(1e-13));
  CHECK_THROWS_AS(surface_measure_density(m, 0.0, 0.0), std::domain_error);
}
