#include "euclid.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "geometry.hpp"
#include "polyroots.hpp"

namespace hypres {

EuclidOutgoingPolynomial build_euclid_polynomial(int k, double radius) {
  if (k < 1) throw std::invalid_argument("euclid polynomial: k must be >= 1");
  if (!(radius > 0.0))
    throw std::domain_error("euclid polynomial: radius must be positive");
  EuclidOutgoingPolynomial p;
  p.k = k;
  p.radius = radius;
  p.coeff.assign(k, 0.0);
  double w = 1.0;  // prod(k(k-1)-l(l-1)) / (2^j j! R^j)
  for (int j = 0; j < k; ++j) {
    if (j > 0) w *= (k * (k - 1) - j * (j - 1)) / (2.0 * j * radius);
    int deg = k - 1 - j;
    p.coeff[deg] += (deg % 2 == 0 ? w : -w);
  }
  return p;
}

std::vector<Resonance> euclid_ball_resonances(int n, int ell, double radius) {
  if (n < 3 || n % 2 == 0)
    throw std::invalid_argument("euclid resonances: dimension must be odd >= 3");
  if (ell < 0) throw std::invalid_argument("euclid resonances: ell must be >= 0");
  int k = (n - 1) / 2 + ell;
  if (k < 2) return {};
  EuclidOutgoingPolynomial p = build_euclid_polynomial(k, radius);
  std::vector<cplx> betas = poly_roots(p.coeff);
  long long hdim = static_cast<long long>(harmonic_dimension(n, ell));
  std::vector<Resonance> out;
  std::vector<bool> used(betas.size(), false);
  for (size_t i = 0; i < betas.size(); ++i) {
    if (used[i]) continue;
    cplx b = betas[i];
    int order = 1;
    used[i] = true;
    for (size_t j = i + 1; j < betas.size(); ++j) {
      if (used[j]) continue;
      if (std::abs(betas[j] - b) < 5e-8 * (1.0 + std::abs(b))) {
        b = (b * static_cast<double>(order) + betas[j]) /
            static_cast<double>(order + 1);
        ++order;
        used[j] = true;
      }
    }
    Resonance res;
    res.sigma = cplx(0.0, -1.0) * b;  // lambda = -i beta
    res.ell = ell;
    res.mult = hdim * order;
    double scale =
        std::max(1.0, std::abs(polyval_deriv(p.coeff, b)) * (1.0 + std::abs(b)));
    res.residual = std::abs(polyval(p.coeff, b)) / scale;
    out.push_back(res);
  }
  std::sort(out.begin(), out.end(), [](const Resonance& a, const Resonance& b) {
    if (a.sigma.imag() != b.sigma.imag()) return a.sigma.imag() > b.sigma.imag();
    return a.sigma.real() < b.sigma.real();
  });
  return out;
}

RalstonReport check_ralston(const std::vector<Resonance>& resonances,
                            double rho) {
  if (!(rho > 0.0)) throw std::domain_error("ralston: rho must be positive");
  RalstonReport rep;
  rep.bound = 1.0 / rho;
  if (resonances.empty()) {
    rep.ok = true;
    rep.min_abs_im = std::numeric_limits<double>::infinity();
    rep.margin = std::numeric_limits<double>::infinity();
    return rep;
  }
  rep.min_abs_im = std::numeric_limits<double>::infinity();
  for (const Resonance& r : resonances) {
    double v = std::fabs(r.sigma.imag());
    if (v < rep.min_abs_im) {
      rep.min_abs_im = v;
      rep.offender = r;
    }
  }
  rep.margin = rep.min_abs_im - rep.bound;
  rep.ok = rep.min_abs_im >= rep.bound - 1e-9;
  return rep;
}

}  // namespace hypres
