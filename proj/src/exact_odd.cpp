#include "exact_odd.hpp"

#include <algorithm>
#include <cmath>

#include "geometry.hpp"
#include "polyroots.hpp"

namespace hypres {

OutgoingPolynomial build_outgoing_polynomial(const HyperbolicModel& model,
                                             int k, double radius) {
  if (model.kappa <= 0.0)
    throw std::domain_error("outgoing polynomial: requires kappa > 0");
  if (k < 1) throw std::invalid_argument("outgoing polynomial: k must be >= 1");
  if (!(radius > 0.0))
    throw std::domain_error("outgoing polynomial: radius must be positive");

  OutgoingPolynomial p;
  p.k = k;
  p.kappa = model.kappa;
  p.radius = radius;
  p.coeff.assign(k, 0.0);

  double c = 1.0 / std::tanh(model.kappa * radius) - 1.0;  // coth(kR) - 1
  double w = 1.0;                                          // (c/2)^j / j! * prod(k(k-1)-l(l-1))
  for (int j = 0; j < k; ++j) {
    if (j > 0) w *= 0.5 * c / j * (k * (k - 1) - j * (j - 1));
    // prod_{m=j+1}^{k-1} (m - beta), ascending
    std::vector<double> prod{1.0};
    for (int m = j + 1; m < k; ++m) {
      std::vector<double> next(prod.size() + 1, 0.0);
      for (size_t a = 0; a < prod.size(); ++a) {
        next[a] += prod[a] * m;
        next[a + 1] -= prod[a];
      }
      prod = std::move(next);
    }
    for (size_t a = 0; a < prod.size(); ++a) p.coeff[a] += w * prod[a];
  }
  return p;
}

cplx evaluate_outgoing(const HyperbolicModel& model, int k, double r,
                       cplx sigma) {
  OutgoingPolynomial p = build_outgoing_polynomial(model, k, r);
  cplx beta = cplx(0.0, 1.0) * sigma / model.kappa;
  return std::exp(cplx(0.0, 1.0) * r * sigma) * polyval(p.coeff, beta);
}

std::vector<Resonance> ball_resonances_odd(const HyperbolicModel& model,
                                           int ell, double radius) {
  if (model.dim < 3 || model.dim % 2 == 0)
    throw std::invalid_argument("ball resonances: dimension must be odd >= 3");
  if (ell < 0) throw std::invalid_argument("ball resonances: ell must be >= 0");
  int k = (model.dim - 1) / 2 + ell;
  if (k < 2) return {};

  OutgoingPolynomial p = build_outgoing_polynomial(model, k, radius);
  std::vector<cplx> betas = poly_roots(p.coeff);

  // group clustered roots into orders
  std::vector<Resonance> out;
  long long hdim =
      static_cast<long long>(harmonic_dimension(model.dim, ell));
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
    res.sigma = cplx(0.0, -model.kappa) * b;
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

}  // namespace hypres
