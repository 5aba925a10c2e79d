#include "polyroots.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

namespace hypres {

cplx polyval(const std::vector<double>& coeff, cplx z) {
  cplx acc = 0.0;
  for (auto it = coeff.rbegin(); it != coeff.rend(); ++it) acc = acc * z + *it;
  return acc;
}

cplx polyval_deriv(const std::vector<double>& coeff, cplx z) {
  cplx acc = 0.0;
  for (size_t i = coeff.size(); i-- > 1;)
    acc = acc * z + static_cast<double>(i) * coeff[i];
  return acc;
}

std::vector<cplx> poly_roots(const std::vector<double>& coeff) {
  std::vector<double> c = coeff;
  while (c.size() > 1 && c.back() == 0.0) c.pop_back();
  int deg = static_cast<int>(c.size()) - 1;
  if (deg < 1) return {};

  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(deg, deg);
  for (int i = 0; i < deg; ++i) m(i, deg - 1) = -c[i] / c[deg];
  for (int i = 1; i < deg; ++i) m(i, i - 1) = 1.0;
  Eigen::EigenSolver<Eigen::MatrixXd> es(m, false);
  std::vector<cplx> roots(deg);
  for (int i = 0; i < deg; ++i) roots[i] = es.eigenvalues()(i);

  for (auto& z : roots) {
    if (z.imag() == 0.0) {
      double x = z.real();
      for (int it = 0; it < 6; ++it) {
        cplx d = polyval_deriv(c, x);
        if (std::abs(d) == 0.0) break;
        double step = (polyval(c, x) / d).real();
        x -= step;
        if (std::fabs(step) < 1e-15 * (1.0 + std::fabs(x))) break;
      }
      z = x;
      continue;
    }
    for (int it = 0; it < 6; ++it) {
      cplx d = polyval_deriv(c, z);
      if (std::abs(d) == 0.0) break;
      cplx step = polyval(c, z) / d;
      z -= step;
      if (std::abs(step) < 1e-15 * (1.0 + std::abs(z))) break;
    }
  }

  // re-pair conjugates exactly
  std::vector<bool> used(roots.size(), false);
  for (size_t i = 0; i < roots.size(); ++i) {
    if (used[i] || roots[i].imag() == 0.0) continue;
    size_t best = i;
    double best_d = 1e300;
    for (size_t j = 0; j < roots.size(); ++j) {
      if (j == i || used[j]) continue;
      double d = std::abs(roots[j] - std::conj(roots[i]));
      if (d < best_d) {
        best_d = d;
        best = j;
      }
    }
    if (best != i && best_d < 1e-6 * (1.0 + std::abs(roots[i]))) {
      cplx avg = 0.5 * (roots[i] + std::conj(roots[best]));
      roots[i] = avg;
      roots[best] = std::conj(avg);
      used[i] = used[best] = true;
    }
  }
  std::sort(roots.begin(), roots.end(), [](cplx a, cplx b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });
  return roots;
}

}  // namespace hypres
