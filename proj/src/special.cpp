#include "special.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>

namespace hypres {

namespace {

constexpr double kPi = std::numbers::pi;

// Lanczos g = 7, 9 terms.
constexpr double kLanczos[9] = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

// Valid for Re z > 1/2.
cplx rgamma_right(cplx z) {
  cplx zz = z - 1.0;
  cplx acc = kLanczos[0];
  for (int i = 1; i < 9; ++i) acc += kLanczos[i] / (zz + static_cast<double>(i));
  cplx t = zz + 7.5;
  // 1/Gamma = t^{-(zz+1/2)} e^{t} / (sqrt(2 pi) acc)
  cplx lg = (zz + 0.5) * std::log(t) - t;
  return std::exp(-lg) / (std::sqrt(2.0 * kPi) * acc);
}

cplx gamma_right(cplx z) {
  cplx zz = z - 1.0;
  cplx acc = kLanczos[0];
  for (int i = 1; i < 9; ++i) acc += kLanczos[i] / (zz + static_cast<double>(i));
  cplx t = zz + 7.5;
  return std::sqrt(2.0 * kPi) * std::exp((zz + 0.5) * std::log(t) - t) * acc;
}

}  // namespace

cplx reciprocal_gamma(cplx z) {
  if (z.real() >= 0.5) return rgamma_right(z);
  // 1/Gamma(z) = sin(pi z) Gamma(1 - z) / pi
  return std::sin(kPi * z) * gamma_right(1.0 - z) / kPi;
}

cplx gamma_cplx(cplx z) {
  if (z.real() >= 0.5) return gamma_right(z);
  // Gamma(z) = pi / (sin(pi z) Gamma(1 - z))
  return kPi / (std::sin(kPi * z) * gamma_right(1.0 - z));
}

double legendre_p(int l, double x) {
  if (l < 0) throw std::invalid_argument("legendre_p: negative degree");
  if (l == 0) return 1.0;
  double pm1 = 1.0, p = x;
  for (int k = 2; k <= l; ++k) {
    double pk = ((2 * k - 1) * x * p - (k - 1) * pm1) / k;
    pm1 = p;
    p = pk;
  }
  return p;
}

const Quadrature& gauss_legendre(int n) {
  static std::map<int, Quadrature> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  if (n < 1) throw std::invalid_argument("gauss_legendre: n must be >= 1");
  Quadrature q;
  q.x.resize(n);
  q.w.resize(n);
  for (int i = 0; i < n; ++i) {
    double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double pm1 = 1.0, p = x;
      for (int k = 2; k <= n; ++k) {
        double pk = ((2 * k - 1) * x * p - (k - 1) * pm1) / k;
        pm1 = p;
        p = pk;
      }
      dp = n * (x * p - pm1) / (x * x - 1.0);
      double dx = p / dp;
      x -= dx;
      if (std::fabs(dx) < 1e-15) break;
    }
    q.x[i] = x;
    q.w[i] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
  std::reverse(q.x.begin(), q.x.end());
  std::reverse(q.w.begin(), q.w.end());
  auto [pos, _] = cache.emplace(n, std::move(q));
  return pos->second;
}

namespace {

double panel(const std::function<double(double)>& f, double a, double b,
             const Quadrature& q) {
  double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  double s = 0.0;
  for (size_t i = 0; i < q.x.size(); ++i) s += q.w[i] * f(mid + half * q.x[i]);
  return half * s;
}

double adapt(const std::function<double(double)>& f, double a, double b,
             double coarse, double tol, int depth) {
  const Quadrature& lo = gauss_legendre(10);
  double m = 0.5 * (a + b);
  double left = panel(f, a, m, lo), right = panel(f, m, b, lo);
  if (depth > 48) return left + right;
  if (std::fabs(left + right - coarse) <= tol) return left + right;
  return adapt(f, a, m, left, 0.5 * tol, depth + 1) +
         adapt(f, m, b, right, 0.5 * tol, depth + 1);
}

}  // namespace

double integrate(const std::function<double(double)>& f, double a, double b,
                 double rel_tol) {
  if (!(b > a)) throw std::invalid_argument("integrate: empty interval");
  const Quadrature& lo = gauss_legendre(10);
  const Quadrature& hi = gauss_legendre(21);
  double rough = panel(f, a, b, hi);
  double scale = std::fabs(rough);
  if (scale == 0.0) scale = 1.0;
  return adapt(f, a, b, panel(f, a, b, lo), rel_tol * scale, 0);
}

}  // namespace hypres
