#include "doctest.h"

#include <algorithm>
#include <cmath>

#include "euclid.hpp"

using namespace hypres;

TEST_CASE("flat outgoing polynomial coefficients") {
  auto p2 = build_euclid_polynomial(2, 1.0);
  REQUIRE(p2.coeff.size() == 2);
  CHECK(p2.coeff[0] == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(p2.coeff[1] == doctest::Approx(-1.0).epsilon(1e-15));

  auto p3 = build_euclid_polynomial(3, 1.0);
  REQUIRE(p3.coeff.size() == 3);
  CHECK(p3.coeff[0] == doctest::Approx(3.0).epsilon(1e-15));
  CHECK(p3.coeff[1] == doctest::Approx(-3.0).epsilon(1e-15));
  CHECK(p3.coeff[2] == doctest::Approx(1.0).epsilon(1e-15));

  // radius enters through powers of 1/R
  auto p3h = build_euclid_polynomial(3, 2.0);
  CHECK(p3h.coeff[0] == doctest::Approx(0.75).epsilon(1e-15));
  CHECK(p3h.coeff[1] == doctest::Approx(-1.5).epsilon(1e-15));
}

TEST_CASE("unit ball poles match half-integer hankel zeros") {
  // ell = 1: single pole at -i
  auto r1 = euclid_ball_resonances(3, 1, 1.0);
  REQUIRE(r1.size() == 1);
  CHECK(std::abs(r1[0].sigma - cplx(0.0, -1.0)) < 1e-14);
  CHECK(r1[0].mult == 3);

  // ell = 2: zeros of x^2 + 3ix - 3
  auto r2 = euclid_ball_resonances(3, 2, 1.0);
  REQUIRE(r2.size() == 2);
  std::sort(r2.begin(), r2.end(), [](const Resonance& a, const Resonance& b) {
    return a.sigma.real() < b.sigma.real();
  });
  CHECK(std::abs(r2[0].sigma - cplx(-0.86602540378443865, -1.5)) < 1e-13);
  CHECK(std::abs(r2[1].sigma - cplx(0.86602540378443865, -1.5)) < 1e-13);
  CHECK(r2[0].sigma.real() == -r2[1].sigma.real());

  // ell = 5 against an independent high-precision solve
  auto r5 = euclid_ball_resonances(3, 5, 1.0);
  REQUIRE(r5.size() == 5);
  const cplx want[] = {cplx(-3.5710229203379764, -2.3246743031816452),
                       cplx(3.5710229203379764, -2.3246743031816452),
                       cplx(-1.7426614161831977, -3.3519563991535331),
                       cplx(1.7426614161831977, -3.3519563991535331),
                       cplx(0.0, -3.6467385953296433)};
  for (cplx w : want) {
    double best = 1e9;
    for (const auto& r : r5) best = std::min(best, std::abs(r.sigma - w));
    CHECK(best < 1e-12);
  }
}

TEST_CASE("poles scale like 1/R") {
  auto unit = euclid_ball_resonances(3, 4, 1.0);
  auto wide = euclid_ball_resonances(3, 4, 2.0);
  REQUIRE(unit.size() == wide.size());
  for (size_t i = 0; i < unit.size(); i++) {
    CHECK(std::abs(wide[i].sigma - 0.5 * unit[i].sigma) < 1e-12);
  }
}

TEST_CASE("unit ball, all momenta through twelve") {
  std::vector<Resonance> all;
  for (int ell = 0; ell <= 12; ell++) {
    auto r = euclid_ball_resonances(3, ell, 1.0);
    CHECK(r.size() == size_t(ell));  // k - 1 poles in dimension three
    all.insert(all.end(), r.begin(), r.end());
  }
  CHECK(all.size() == 78);
  double min_abs_im = 1e9;
  cplx argmin;
  for (const auto& r : all) {
    if (std::fabs(r.sigma.imag()) < min_abs_im) {
      min_abs_im = std::fabs(r.sigma.imag());
      argmin = r.sigma;
    }
  }
  CHECK(std::fabs(min_abs_im - 1.0) < 1e-10);
  CHECK(std::abs(argmin - cplx(0.0, -1.0)) < 1e-10);
}

TEST_CASE("sharp lower bound report") {
  std::vector<Resonance> all;
  for (int ell = 0; ell <= 8; ell++) {
    auto r = euclid_ball_resonances(3, ell, 1.0);
    all.insert(all.end(), r.begin(), r.end());
  }
  auto ok = check_ralston(all, 1.0);
  CHECK(ok.ok);
  CHECK(ok.min_abs_im == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(ok.bound == 1.0);
  CHECK(std::fabs(ok.margin) < 1e-9);

  // a tighter enclosing ball is still fine, a smaller claimed one is not
  CHECK(check_ralston(all, 1.3).ok);
  auto bad = check_ralston(all, 0.8);
  CHECK(!bad.ok);
  CHECK(std::abs(bad.offender.sigma - cplx(0.0, -1.0)) < 1e-10);

  CHECK(check_ralston({}, 1.0).ok);
}
