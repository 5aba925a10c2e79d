#pragma once

#include <array>
#include <cmath>
#include <functional>
#include <stdexcept>

#include "types.hpp"

namespace hypres {

// Adaptive embedded Runge-Kutta 5(4), Dormand-Prince coefficients, on a
// complex N-vector.  Integrates y' = f(x, y) from x0 to x1 (either
// direction) with the given relative tolerance.
template <size_t N>
std::array<cplx, N> integrate_rk45(
    const std::function<std::array<cplx, N>(double, const std::array<cplx, N>&)>& f,
    double x0, double x1, std::array<cplx, N> y, double rtol) {
  static constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5,
                          c5 = 8.0 / 9;
  static constexpr double a21 = 1.0 / 5;
  static constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
  static constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
  static constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187,
                          a53 = 64448.0 / 6561, a54 = -212.0 / 729;
  static constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33,
                          a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                          a65 = -5103.0 / 18656;
  static constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                          b5 = -2187.0 / 6784, b6 = 11.0 / 84;
  static constexpr double e1 = 35.0 / 384 - 5179.0 / 57600,
                          e3 = 500.0 / 1113 - 7571.0 / 16695,
                          e4 = 125.0 / 192 - 393.0 / 640,
                          e5 = -2187.0 / 6784 + 92097.0 / 339200,
                          e6 = 11.0 / 84 - 187.0 / 2100, e7 = -1.0 / 40;

  if (x1 == x0) return y;
  double dir = x1 > x0 ? 1.0 : -1.0;
  double x = x0;
  double h = dir * std::min(0.1 * std::fabs(x1 - x0), 0.1);
  auto k1 = f(x, y);
  const double atol = 1e-300;
  for (long step = 0; step < 2000000; ++step) {
    if (dir * (x + h - x1) > 0.0) h = x1 - x;
    std::array<cplx, N> t, k2, k3, k4, k5, k6, k7, ynew;
    for (size_t i = 0; i < N; ++i) t[i] = y[i] + h * a21 * k1[i];
    k2 = f(x + c2 * h, t);
    for (size_t i = 0; i < N; ++i)
      t[i] = y[i] + h * (a31 * k1[i] + a32 * k2[i]);
    k3 = f(x + c3 * h, t);
    for (size_t i = 0; i < N; ++i)
      t[i] = y[i] + h * (a41 * k1[i] + a42 * k2[i] + a43 * k3[i]);
    k4 = f(x + c4 * h, t);
    for (size_t i = 0; i < N; ++i)
      t[i] = y[i] + h * (a51 * k1[i] + a52 * k2[i] + a53 * k3[i] + a54 * k4[i]);
    k5 = f(x + c5 * h, t);
    for (size_t i = 0; i < N; ++i)
      t[i] = y[i] + h * (a61 * k1[i] + a62 * k2[i] + a63 * k3[i] + a64 * k4[i] +
                         a65 * k5[i]);
    k6 = f(x + h, t);
    for (size_t i = 0; i < N; ++i)
      ynew[i] = y[i] + h * (b1 * k1[i] + b3 * k3[i] + b4 * k4[i] + b5 * k5[i] +
                            b6 * k6[i]);
    k7 = f(x + h, ynew);

    double err = 0.0;
    for (size_t i = 0; i < N; ++i) {
      cplx e = h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] +
                    e6 * k6[i] + e7 * k7[i]);
      double sc = atol + rtol * std::max(std::abs(y[i]), std::abs(ynew[i]));
      double q = std::abs(e) / sc;
      err = std::max(err, q);
    }
    if (err <= 1.0) {
      x += h;
      y = ynew;
      k1 = k7;
      if (x == x1) return y;
    }
    double fac = 0.9 * std::pow(std::max(err, 1e-10), -0.2);
    h *= std::min(5.0, std::max(0.2, fac));
    if (std::fabs(h) < 1e-14 * (1.0 + std::fabs(x)))
      throw std::runtime_error("rk45: step size underflow");
  }
  throw std::runtime_error("rk45: step budget exhausted");
}

}  // namespace hypres
