#include "geometry.hpp"

#include <cmath>

namespace hypres {

double sinhc(double x) {
  double ax = std::fabs(x);
  if (ax < 1e-4) {
    double x2 = x * x;
    return 1.0 + x2 / 6.0 * (1.0 + x2 / 20.0 * (1.0 + x2 / 42.0));
  }
  return std::sinh(x) / x;
}

double acosh1p(double x) {
  if (x < 0.0) throw std::domain_error("acosh1p: negative argument");
  return std::log1p(x + std::sqrt(x * (2.0 + x)));
}

double warp(double kappa, double r) {
  if (r < 0.0) throw std::domain_error("warp: negative radius");
  return r * sinhc(kappa * r);
}

double warp(const HyperbolicModel& model, double r) {
  return warp(model.kappa, r);
}

double geodesic_distance(const HyperbolicModel& model, double r1, double r2,
                         double cos_gamma) {
  if (r1 < 0.0 || r2 < 0.0) throw std::domain_error("distance: negative radius");
  if (cos_gamma > 1.0) cos_gamma = 1.0;
  if (cos_gamma < -1.0) cos_gamma = -1.0;
  double k = model.kappa;
  // half-angle form, exact for both signs of r1 - r2:
  //   cosh(kd) - 1 = 2 sinh^2(k(r1-r2)/2) + 2 sinh(kr1) sinh(kr2) sin^2(g/2)
  double s2 = 0.5 * (1.0 - cos_gamma);  // sin^2(gamma/2)
  if (k == 0.0) {
    double dr = r1 - r2;
    return std::sqrt(dr * dr + 4.0 * r1 * r2 * s2);
  }
  double sh = std::sinh(0.5 * k * (r1 - r2));
  double x = 2.0 * sh * sh + 2.0 * std::sinh(k * r1) * std::sinh(k * r2) * s2;
  return acosh1p(x) / k;
}

double geodesic_distance(const HyperbolicModel& model, const PolarPoint& p,
                         const PolarPoint& q) {
  if (p.omega.size() != q.omega.size() ||
      static_cast<int>(p.omega.size()) != model.dim)
    throw std::invalid_argument("distance: direction dimension mismatch");
  double dot = 0.0;
  for (size_t i = 0; i < p.omega.size(); ++i) dot += p.omega[i] * q.omega[i];
  return geodesic_distance(model, p.r, q.r, dot);
}

std::uint64_t harmonic_dimension(int n, int ell) {
  if (n < 2) throw std::invalid_argument("harmonic_dimension: n must be >= 2");
  if (ell < 0) throw std::invalid_argument("harmonic_dimension: ell must be >= 0");
  if (ell == 0) return 1;
  // (2l + n - 2) * C(l + n - 3, n - 2) / l
  unsigned __int128 binom = 1;
  for (int i = 1; i <= n - 2; ++i) {
    binom = binom * static_cast<unsigned __int128>(ell - 1 + i) / i;
  }
  unsigned __int128 v = binom * static_cast<unsigned __int128>(2 * ell + n - 2) /
                        static_cast<unsigned __int128>(ell);
  if (v > static_cast<unsigned __int128>(UINT64_MAX))
    throw std::overflow_error("harmonic_dimension: overflow");
  return static_cast<std::uint64_t>(v);
}

double surface_measure_density(const HyperbolicModel& model, double f,
                               double grad2) {
  if (!(f > 0.0)) throw std::domain_error("surface density: f must be positive");
  if (grad2 < 0.0) throw std::domain_error("surface density: negative |grad|^2");
  double s = warp(model, f);
  double area = 1.0;
  for (int i = 0; i < model.dim - 1; ++i) area *= s;
  return area * std::sqrt(1.0 + grad2 / (s * s));
}

}  // namespace hypres
