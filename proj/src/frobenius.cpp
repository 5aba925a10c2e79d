#include "frobenius.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "geometry.hpp"
#include "ode.hpp"
#include "special.hpp"

namespace hypres {

FrobeniusSolution series_coefficients(double c, int terms) {
  if (terms < 1) throw std::invalid_argument("series: need at least one term");
  FrobeniusSolution s;
  s.c = c;
  s.d.reserve(terms);
  double d = 1.0;
  for (int j = 0; j < terms; ++j) {
    s.d.push_back(d);
    if (std::fabs(d) > 1e290) break;  // overflow guard; tail never needed
    d *= (c - static_cast<double>(j) * (j + 1)) / (2.0 * (j + 1));
  }
  return s;
}

double coupling_constant(int n, int ell) {
  if (n < 2) throw std::invalid_argument("coupling: n must be >= 2");
  if (ell < 0) throw std::invalid_argument("coupling: ell must be >= 0");
  return 0.25 * (n - 1) * (n - 3) + static_cast<double>(ell) * (ell + n - 2);
}

namespace {

// Series value and x-derivative at x (requires x - 1 < 2 for convergence;
// callers keep x <= 2.5).
void series_eval(double c, double kappa, double x, cplx sigma, cplx& v,
                 cplx& dv) {
  double t = x - 1.0;
  cplx bt = cplx(0.0, 1.0) * sigma / kappa;
  v = 0.0;
  dv = 0.0;
  double w = 1.0;  // d_j t^j
  int small_streak = 0;
  for (int j = 0; j < 4000; ++j) {
    cplx rg = reciprocal_gamma(static_cast<double>(j + 1) - bt);
    cplx term = w * rg;
    v += term;
    if (j >= 1 && t != 0.0) dv += static_cast<double>(j) * (w / t) * rg;
    double mag = std::abs(term);
    if (j > 10 && mag <= 1e-16 * std::abs(v)) {
      if (++small_streak >= 5) return;
    } else {
      small_streak = 0;
    }
    w *= t * (c - static_cast<double>(j) * (j + 1)) / (2.0 * (j + 1));
  }
  throw std::runtime_error("series: no convergence within term cap");
}

}  // namespace

cplx evaluate_outgoing_general(double kappa, double c, double x0, cplx sigma,
                               double handover) {
  if (!(kappa > 0.0)) throw std::domain_error("evaluate: requires kappa > 0");
  if (!(x0 > 1.0)) throw std::domain_error("evaluate: x0 must exceed 1");
  if (!(handover > 1.0 && handover <= 2.5))
    throw std::invalid_argument("evaluate: handover must lie in (1, 2.5]");
  cplx v, dv;
  if (x0 <= handover) {
    series_eval(c, kappa, x0, sigma, v, dv);
    return v;
  }
  series_eval(c, kappa, handover, sigma, v, dv);
  cplx two_i_sok = cplx(0.0, 2.0) * sigma / kappa;
  auto rhs = [&](double x, const std::array<cplx, 2>& y) -> std::array<cplx, 2> {
    cplx vpp = ((2.0 * x) * y[1] - two_i_sok * y[1] - c * y[0]) / (1.0 - x * x);
    return {y[1], vpp};
  };
  auto y = integrate_rk45<2>(rhs, handover, x0, {v, dv}, 1e-11);
  return y[0];
}

GeneralResonances ball_resonances_general(const HyperbolicModel& model, int ell,
                                          double radius, const ComplexBox& box) {
  if (!(model.kappa > 0.0))
    throw std::domain_error("ball resonances: requires kappa > 0");
  if (!(radius > 0.0))
    throw std::domain_error("ball resonances: radius must be positive");
  double kappa = model.kappa;
  double c = coupling_constant(model.dim, ell);
  double x0 = 1.0 / std::tanh(kappa * radius);
  auto F = [kappa, c, x0](cplx sigma) {
    return evaluate_outgoing_general(kappa, c, x0, sigma);
  };

  ZeroSearchResult zr = locate_zeros(F, box);

  GeneralResonances out;
  out.complete = zr.complete;
  out.warnings = zr.warnings;
  long long hdim = static_cast<long long>(harmonic_dimension(model.dim, ell));
  for (const Zero& z : zr.zeros) {
    // Gamma-lattice filter: candidates near sigma = -i kappa m survive only
    // if the Gamma-restored solution itself winds around them.
    long m = std::lround(-z.z.imag() / kappa);
    bool near_lattice =
        m >= 1 && std::abs(z.z - cplx(0.0, -kappa * m)) <
                      1e-5 * kappa * std::max(1.0, static_cast<double>(m));
    if (near_lattice) {
      auto restored = [&](cplx s) {
        return gamma_cplx(1.0 - cplx(0.0, 1.0) * s / kappa) * F(s);
      };
      int w = 0;
      try {
        w = winding_number_circle(restored, z.z, 1e-3 * kappa);
      } catch (const std::exception&) {
        w = 0;
      }
      if (w < 1) {
        out.lattice_rejected.push_back(z);
        continue;
      }
      Zero kept = z;
      kept.order = w;
      out.resonances.push_back(
          {kept.z, ell, hdim * kept.order, kept.residual});
      continue;
    }
    out.resonances.push_back({z.z, ell, hdim * z.order, z.residual});
  }
  // F(-conj(sigma)) = conj(F(sigma)) since the series data are real, so zeros
  // come in mirror pairs; enforce the symmetry exactly on the output.
  std::vector<bool> paired(out.resonances.size(), false);
  for (size_t i = 0; i < out.resonances.size(); ++i) {
    if (paired[i]) continue;
    cplx si = out.resonances[i].sigma;
    double tol = 1e-6 * (1.0 + std::abs(si));
    if (std::fabs(si.real()) <= tol) {
      out.resonances[i].sigma = cplx(0.0, si.imag());
      paired[i] = true;
      continue;
    }
    for (size_t j = i + 1; j < out.resonances.size(); ++j) {
      if (paired[j]) continue;
      if (std::abs(out.resonances[j].sigma - cplx(-si.real(), si.imag())) < tol) {
        double re = 0.5 * (std::fabs(si.real()) +
                           std::fabs(out.resonances[j].sigma.real()));
        double im = 0.5 * (si.imag() + out.resonances[j].sigma.imag());
        double sgn = si.real() > 0.0 ? 1.0 : -1.0;
        out.resonances[i].sigma = cplx(sgn * re, im);
        out.resonances[j].sigma = cplx(-sgn * re, im);
        paired[i] = paired[j] = true;
        break;
      }
    }
  }
  std::sort(out.resonances.begin(), out.resonances.end(),
            [](const Resonance& a, const Resonance& b) {
              if (a.sigma.imag() != b.sigma.imag())
                return a.sigma.imag() > b.sigma.imag();
              return a.sigma.real() < b.sigma.real();
            });
  return out;
}

}  // namespace hypres
