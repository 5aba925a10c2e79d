#include "bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "geometry.hpp"
#include "special.hpp"

namespace hypres {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// log(cosh x - 1), stable for both tails.
double log_coshm1(double x) {
  if (x >= 1.0) return x - std::log(2.0) + 2.0 * std::log1p(-std::exp(-x));
  // cosh x - 1 = 2 sinh^2(x/2)
  return std::log(2.0) + 2.0 * std::log(std::sinh(0.5 * x));
}

// -log p(kappa, rho, t) with t > 3 rho; flat case handled exactly.
double neg_log_p(double kappa, double rho, double t) {
  if (kappa == 0.0) return 2.0 * std::log(t - 3.0 * rho) - std::log(9.0 * rho * rho);
  return log_coshm1(kappa * (t - 3.0 * rho)) - log_coshm1(3.0 * kappa * rho);
}

template <class F>
double golden_max(F&& f, double a, double b, double tol) {
  const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
  double c = b - gr * (b - a);
  double d = a + gr * (b - a);
  double fc = f(c), fd = f(d);
  while (b - a > tol) {
    if (fc < fd) {
      a = c;
      c = d;
      fc = fd;
      d = a + gr * (b - a);
      fd = f(d);
    } else {
      b = d;
      d = c;
      fd = fc;
      c = b - gr * (b - a);
      fc = f(c);
    }
  }
  return 0.5 * (a + b);
}

}  // namespace

double p_decay(double kappa, double rho, double t) {
  if (!(rho > 0.0)) throw std::invalid_argument("p_decay: rho must be positive");
  if (!(t > 3.0 * rho)) throw std::invalid_argument("p_decay: need t > 3 rho");
  const double num = sinhc(1.5 * kappa * rho);
  const double den = sinhc(0.5 * kappa * (t - 3.0 * rho));
  const double base = 3.0 * rho / (t - 3.0 * rho) * num / den;
  return base * base;
}

WidthOptimum A_profile(double rho_tilde) {
  if (!(rho_tilde >= 0.0))
    throw std::invalid_argument("A_profile: rho_tilde must be nonnegative");
  // a(rt, t) = (-log p - log 4) / (2 (t + 5)) with rho = 1, tau = t + 5.
  auto obj = [rho_tilde](double t) {
    return (neg_log_p(rho_tilde, 1.0, t + 3.0) - std::log(4.0)) / (2.0 * (t + 5.0));
  };
  // t here measures distance beyond the 3 rho core; grid covers ~5 decades.
  std::vector<double> ts, vals;
  double t = 0.05;
  for (int i = 0; i <= 300; i++) {
    ts.push_back(t);
    vals.push_back(obj(t));
    t *= 1.05;
  }
  size_t best = 0;
  for (size_t i = 1; i < vals.size(); i++)
    if (vals[i] > vals[best]) best = i;
  if (best + 1 == vals.size()) {
    // Monotone tail: supremum is the limit rho_tilde / 2 at t -> infinity.
    WidthOptimum w;
    w.value = 0.5 * rho_tilde;
    w.arg = kInf;
    w.at_infinity = true;
    return w;
  }
  const double lo = best == 0 ? 0.5 * ts[0] : ts[best - 1];
  const double hi = ts[best + 1];
  const double tstar = golden_max(obj, lo, hi, 1e-10 * (1.0 + hi));
  WidthOptimum w;
  w.value = obj(tstar);
  w.arg = tstar;
  return w;
}

WidthOptimum alpha_generic(double kappa, double rho) {
  if (!(rho > 0.0)) throw std::invalid_argument("alpha_generic: rho must be positive");
  if (!(kappa >= 0.0)) throw std::invalid_argument("alpha_generic: kappa must be nonnegative");
  // alpha = sup over tau > 5 rho of -log(4 p(tau - 2 rho)) / (2 tau).
  auto obj = [kappa, rho](double tau) {
    return (neg_log_p(kappa, rho, tau - 2.0 * rho) - std::log(4.0)) / (2.0 * tau);
  };
  std::vector<double> taus, vals;
  double u = 0.01 * rho;
  for (int i = 0; i <= 240; i++) {
    taus.push_back(5.0 * rho + u);
    vals.push_back(obj(taus.back()));
    u *= 1.07;
  }
  size_t best = 0;
  for (size_t i = 1; i < vals.size(); i++)
    if (vals[i] > vals[best]) best = i;
  if (best + 1 == vals.size()) {
    WidthOptimum w;
    w.value = 0.5 * kappa;
    w.arg = kInf;
    w.at_infinity = true;
    return w;
  }
  const double lo = best == 0 ? 5.0 * rho + 0.005 * rho : taus[best - 1];
  const double hi = taus[best + 1];
  const double tstar = golden_max(obj, lo, hi, 1e-10 * (rho + hi));
  WidthOptimum w;
  w.value = obj(tstar);
  w.arg = tstar;
  return w;
}

double improvement_threshold() {
  // Root of 4 e^{5x} (cosh 3x - 1) = 1/2 in x = kappa rho.
  auto g = [](double x) {
    const double s = std::sinh(1.5 * x);
    return 4.0 * std::exp(5.0 * x) * 2.0 * s * s - 0.5;
  };
  double lo = 0.01, hi = 0.5;
  for (int i = 0; i < 200; i++) {
    const double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;
    (g(mid) < 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

double marklof_ratio(const HyperbolicModel& model, double rho) {
  if (!(rho > 0.0)) throw std::invalid_argument("marklof_ratio: rho must be positive");
  const int m = model.dim - 1;
  auto wpow = [&](double r) { return std::pow(warp(model.kappa, r), m); };
  const double vol = integrate(wpow, 0.0, rho, 1e-12);
  return wpow(rho) / vol;
}

WidthReport verify_width_bounds(const std::vector<Resonance>& resonances,
                                const HyperbolicModel& model, double rho,
                                bool n_odd) {
  WidthReport rep;
  rep.bound_half = 0.5 * model.kappa;
  rep.bound_width = n_odd ? alpha_generic(model.kappa, rho).value : rep.bound_half;
  const double bound = std::max(rep.bound_half, rep.bound_width);
  rep.min_abs_im = kInf;
  rep.ok = true;
  for (const auto& r : resonances) {
    const double width = -r.sigma.imag();
    if (width < rep.min_abs_im) {
      rep.min_abs_im = width;
      rep.offender = r;
    }
  }
  rep.margin = rep.min_abs_im - bound;
  if (rep.min_abs_im < bound - 1e-9) rep.ok = false;
  return rep;
}

BoundProfile make_bound_profile(const std::vector<double>& grid) {
  BoundProfile p;
  p.flat_value = A_profile(0.0).value;
  p.threshold = improvement_threshold();
  for (double rt : grid) {
    p.rho_tilde.push_back(rt);
    p.width.push_back(A_profile(rt).value);
    p.half_line.push_back(0.5 * rt);
  }
  return p;
}

}  // namespace hypres
