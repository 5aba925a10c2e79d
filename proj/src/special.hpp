#pragma once

#include <functional>
#include <vector>

#include "types.hpp"

namespace hypres {

// 1/Gamma(z), entire.  Lanczos (g = 7) with the reflection formula on
// Re z < 1/2; relative accuracy ~1e-13 on the strip used by the series
// evaluator, exact zeros at nonpositive integers up to rounding.
cplx reciprocal_gamma(cplx z);

// Gamma(z) away from poles, same approximation.
cplx gamma_cplx(cplx z);

// Legendre polynomial P_l(x) on [-1, 1].
double legendre_p(int l, double x);

// Gauss-Legendre rule on [-1, 1].
struct Quadrature {
  std::vector<double> x, w;
};
const Quadrature& gauss_legendre(int n);

// Adaptive quadrature on [a, b] built from nested Gauss panels; relative
// tolerance on the whole integral.
double integrate(const std::function<double(double)>& f, double a, double b,
                 double rel_tol);

}  // namespace hypres
