#include "doctest.h"

#include <cmath>

#include "bounds.hpp"
#include "exact_odd.hpp"

using namespace hypres;

TEST_CASE("decay profile") {
  // closed form in both branches
  CHECK(p_decay(1.0, 0.5, 4.0) ==
        doctest::Approx((std::cosh(1.5) - 1.0) / (std::cosh(2.5) - 1.0))
            .epsilon(1e-13));
  CHECK(p_decay(0.0, 0.5, 4.0) ==
        doctest::Approx(9.0 * 0.25 / (2.5 * 2.5)).epsilon(1e-13));
  // continuous at the flat limit
  CHECK(p_decay(1e-8, 0.7, 5.0) ==
        doctest::Approx(p_decay(0.0, 0.7, 5.0)).epsilon(1e-16 + 1e-10));
  // large argument branch avoids overflowing cosh
  double tail = p_decay(1.0, 1.0, 300.0);
  CHECK(tail > 0.0);
  CHECK(std::log(tail) == doctest::Approx(std::log(std::cosh(3.0) - 1.0) - 297.0 +
                                          std::log(2.0))
                              .epsilon(1e-10));
  CHECK_THROWS_AS(p_decay(1.0, 1.0, 2.9), std::invalid_argument);
}

TEST_CASE("flat width constant") {
  auto flat = alpha_generic(0.0, 1.0);
  CHECK(!flat.at_infinity);
  CHECK(flat.value == doctest::Approx(0.048185894665212612).epsilon(1e-10));
  // scale invariance: alpha(0, rho) = mu / rho
  auto half = alpha_generic(0.0, 2.0);
  CHECK(half.value == doctest::Approx(flat.value / 2.0).epsilon(1e-9));
}

TEST_CASE("normalized profile values") {
  CHECK(A_profile(0.0).value == doctest::Approx(0.048185894665212612).epsilon(1e-10));
  CHECK(A_profile(0.01).value ==
        doctest::Approx(0.048254187539651073).epsilon(1e-10));
  CHECK(A_profile(0.05).value ==
        doctest::Approx(0.049935686921648841).epsilon(1e-10));
  CHECK(A_profile(0.1).value == doctest::Approx(0.055896703898021).epsilon(1e-9));
  CHECK(!A_profile(0.1).at_infinity);

  // beyond the threshold the supremum is the half line, attained at infinity
  auto a3 = A_profile(0.3);
  CHECK(a3.at_infinity);
  CHECK(a3.value == doctest::Approx(0.15).epsilon(1e-12));
  auto a1 = A_profile(1.0);
  CHECK(a1.at_infinity);
  CHECK(a1.value == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("profile is monotone nondecreasing") {
  double prev = 0.0;
  for (int i = 1; i <= 40; i++) {
    double v = A_profile(0.005 * i).value;
    CHECK(v >= prev - 1e-12);
    prev = v;
  }
}

TEST_CASE("improvement threshold") {
  double x = improvement_threshold();
  CHECK(x == doctest::Approx(0.122129777460811).epsilon(1e-9));
  // root property of the defining equation
  CHECK(std::fabs(4.0 * std::exp(5.0 * x) * (std::cosh(3.0 * x) - 1.0) - 0.5) <
        1e-10);
  // profile beats the half line before the threshold, merges with it after
  CHECK(A_profile(0.9 * x).value > 0.45 * x);
  CHECK(!A_profile(0.9 * x).at_infinity);
  CHECK(A_profile(1.1 * x).at_infinity);
}

TEST_CASE("curved width constant") {
  auto a = alpha_generic(0.02, 2.5);
  CHECK(a.value == doctest::Approx(0.019974274768659536).epsilon(1e-9));
  CHECK(!a.at_infinity);

  // scaling identity alpha(kappa, rho) = max(kappa/2, A(kappa rho)/rho)
  struct Pair {
    double kappa, rho;
  };
  for (Pair p : {Pair{1.0, 0.05}, Pair{0.5, 0.1}, Pair{0.3, 1.0}, Pair{2.0, 1.0}}) {
    auto lhs = alpha_generic(p.kappa, p.rho);
    double rhs = std::max(0.5 * p.kappa, A_profile(p.kappa * p.rho).value / p.rho);
    CHECK(lhs.value == doctest::Approx(rhs).epsilon(1e-8));
  }
  // deep in the curved regime the half line wins
  auto deep = alpha_generic(1.0, 1.0);
  CHECK(deep.at_infinity);
  CHECK(deep.value == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("isoperimetric ratio") {
  HyperbolicModel m(1.0, 3);
  CHECK(marklof_ratio(m, 1.0) == doctest::Approx(3.3957377999494269).epsilon(1e-10));
  HyperbolicModel flat(0.0, 3);
  CHECK(marklof_ratio(flat, 0.5) == doctest::Approx(6.0).epsilon(1e-10));
  HyperbolicModel plane(0.0, 2);
  CHECK(marklof_ratio(plane, 2.0) == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("width bound verification on computed spectra") {
  HyperbolicModel m(1.0, 3);
  std::vector<Resonance> all;
  for (int ell = 1; ell <= 6; ell++) {
    auto r = ball_resonances_odd(m, ell, 0.25);
    all.insert(all.end(), r.begin(), r.end());
  }
  auto rep = verify_width_bounds(all, m, 0.25, true);
  CHECK(rep.ok);
  CHECK(rep.bound_half == 0.5);
  CHECK(rep.bound_width == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(rep.min_abs_im == doctest::Approx(4.0829881650735966).epsilon(1e-12));
  CHECK(rep.margin > 3.5);

  // a fabricated shallow pole is flagged
  auto bad = all;
  bad.push_back(Resonance{cplx(0.3, -0.2), 0, 1, 0.0});
  auto flag = verify_width_bounds(bad, m, 0.25, true);
  CHECK(!flag.ok);
  CHECK(std::abs(flag.offender.sigma - cplx(0.3, -0.2)) < 1e-15);

  CHECK(verify_width_bounds({}, m, 0.25, true).ok);
}

TEST_CASE("bound profile table") {
  auto prof = make_bound_profile({0.01, 0.1, 0.3});
  REQUIRE(prof.rho_tilde.size() == 3);
  CHECK(prof.width[0] == doctest::Approx(0.048254187539651073).epsilon(1e-9));
  CHECK(prof.half_line[1] == doctest::Approx(0.05).epsilon(1e-15));
  CHECK(prof.width[2] == doctest::Approx(0.15).epsilon(1e-12));
  CHECK(prof.flat_value == doctest::Approx(0.048185894665212612).epsilon(1e-10));
  CHECK(prof.threshold == doctest::Approx(0.122129777460811).epsilon(1e-9));
}
