#include "doctest.h"

#include <cmath>

#include "surface.hpp"

using namespace hypres;

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_CASE("surface spec parsing") {
  auto plain = parse_surface_spec("0.25\n");
  CHECK(plain.base == 0.25);
  CHECK(plain.terms.empty());

  auto spec = parse_surface_spec(
      "# bumpy sphere\n"
      "1.0\n"
      "2 0 0.05   # zonal\n"
      "\n"
      "3 -2 -0.01\n");
  CHECK(spec.base == 1.0);
  REQUIRE(spec.terms.size() == 2);
  CHECK(spec.terms[0].l == 2);
  CHECK(spec.terms[0].m == 0);
  CHECK(spec.terms[0].coeff == 0.05);
  CHECK(spec.terms[1].m == -2);

  CHECK_THROWS_AS(parse_surface_spec("# nothing\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_surface_spec("1.0\n2 5 0.1\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_surface_spec("1.0\nbogus\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_surface_spec("-2.0\n"), std::invalid_argument);
}

TEST_CASE("real spherical harmonics are orthonormal") {
  // quadrature mesh is exact for these products
  HyperbolicModel m(1.0, 3);
  auto s = build_surface(m, parse_surface_spec("1.0\n"), 12, 16);
  struct LM {
    int l, m;
  };
  const LM basis[] = {{0, 0}, {1, 0}, {1, 1}, {1, -1}, {2, 0}, {2, 2}, {3, -2}, {3, 3}};
  for (const auto& a : basis) {
    for (const auto& b : basis) {
      double acc = 0.0;
      for (const auto& nd : s.nodes) {
        acc += nd.w * real_sph_harm(a.l, a.m, nd.theta, nd.phi) *
               real_sph_harm(b.l, b.m, nd.theta, nd.phi);
      }
      double want = (a.l == b.l && a.m == b.m) ? 1.0 : 0.0;
      CHECK(std::fabs(acc - want) < 1e-12);
    }
  }
  // Y_00 is the constant mode
  CHECK(real_sph_harm(0, 0, 1.1, 2.2) ==
        doctest::Approx(1.0 / std::sqrt(4.0 * kPi)).epsilon(1e-14));
  CHECK(real_sph_harm(1, 0, 0.7, 0.0) ==
        doctest::Approx(std::sqrt(3.0 / (4.0 * kPi)) * std::cos(0.7)).epsilon(1e-14));
}

TEST_CASE("harmonic gradients agree with finite differences") {
  const double h = 1e-6;
  for (int l = 1; l <= 4; l++) {
    for (int m = -l; m <= l; m += std::max(1, l)) {
      double theta = 1.1, phi = 0.8, y, dt, dp;
      real_sph_harm_grad(l, m, theta, phi, &y, &dt, &dp);
      double dt_fd = (real_sph_harm(l, m, theta + h, phi) -
                      real_sph_harm(l, m, theta - h, phi)) /
                     (2.0 * h);
      double dp_fd = (real_sph_harm(l, m, theta, phi + h) -
                      real_sph_harm(l, m, theta, phi - h)) /
                     (2.0 * h);
      CHECK(std::fabs(dt - dt_fd) < 1e-8);
      CHECK(std::fabs(dp - dp_fd) < 1e-8);
    }
  }
}

TEST_CASE("radius function and gradient") {
  auto spec = parse_surface_spec("0.5\n2 1 0.03\n");
  double f, ft, fp;
  surface_radius_grad(spec, 1.0, 0.4, &f, &ft, &fp);
  CHECK(f == doctest::Approx(0.5 + 0.03 * real_sph_harm(2, 1, 1.0, 0.4))
                 .epsilon(1e-14));
  const double h = 1e-6;
  double fd = (surface_radius(spec, 1.0 + h, 0.4) - surface_radius(spec, 1.0 - h, 0.4)) /
              (2.0 * h);
  CHECK(std::fabs(ft - fd) < 1e-8);
}

TEST_CASE("sphere mesh area") {
  HyperbolicModel m(1.0, 3);
  auto s = build_surface(m, parse_surface_spec("0.25\n"), 10, 14);
  REQUIRE(s.nodes.size() == 140);
  double sh = std::sinh(0.25);
  CHECK(s.area() == doctest::Approx(4.0 * kPi * sh * sh).epsilon(1e-12));
  CHECK(s.min_radius == doctest::Approx(0.25).epsilon(1e-15));
  CHECK(s.max_radius == doctest::Approx(0.25).epsilon(1e-15));

  // flat limit
  HyperbolicModel flat(0.0, 3);
  auto sf = build_surface(flat, parse_surface_spec("2.0\n"), 8, 8);
  CHECK(sf.area() == doctest::Approx(16.0 * kPi).epsilon(1e-12));

  // cell edges partition [-1, 1] around the nodes
  REQUIRE(s.tedges.size() == 11);
  CHECK(s.tedges.front() == -1.0);
  CHECK(s.tedges.back() == 1.0);
  for (int i = 0; i < 10; i++) {
    CHECK(s.tedges[i] < s.tnodes[i]);
    CHECK(s.tnodes[i] < s.tedges[i + 1]);
  }
}

TEST_CASE("perturbed surface stays star shaped or is rejected") {
  HyperbolicModel m(1.0, 3);
  auto mild = build_surface(m, parse_surface_spec("1.0\n2 0 0.1\n"), 8, 10);
  CHECK(mild.min_radius > 0.8);
  CHECK(mild.max_radius < 1.2);
  CHECK(mild.area() > 4.0 * kPi * std::sinh(1.0) * std::sinh(1.0));

  auto wild = parse_surface_spec("0.1\n2 0 1.5\n");
  CHECK_THROWS_AS(build_surface(m, wild, 8, 10), std::domain_error);
  CHECK_THROWS_AS(build_surface(HyperbolicModel(1.0, 4),
                                parse_surface_spec("1.0\n"), 8, 10),
                  std::invalid_argument);
}
