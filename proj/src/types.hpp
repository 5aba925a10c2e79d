#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace hypres {

using cplx = std::complex<double>;

// Constant-curvature model H^n_kappa: curvature -kappa^2, kappa = 0 means R^n.
struct HyperbolicModel {
  double kappa = 1.0;
  int dim = 3;

  HyperbolicModel() = default;
  HyperbolicModel(double kappa_, int dim_) : kappa(kappa_), dim(dim_) {
    if (!(kappa >= 0.0)) throw std::invalid_argument("model: kappa must be >= 0");
    if (dim < 2) throw std::invalid_argument("model: dimension must be >= 2");
  }
};

// Geodesic polar coordinates about a fixed center: radius r and a unit
// direction omega in S^{n-1}.
struct PolarPoint {
  double r = 0.0;
  std::vector<double> omega;
};

struct Resonance {
  cplx sigma;          // spectral parameter, Im sigma < 0
  int ell = 0;         // angular momentum of the mode
  long long mult = 1;  // total multiplicity (harmonic space x zero order)
  double residual = 0.0;
};

struct ComplexBox {
  double re_min, re_max, im_min, im_max;

  bool contains(cplx z) const {
    return z.real() >= re_min && z.real() <= re_max && z.imag() >= im_min &&
           z.imag() <= im_max;
  }
  cplx center() const { return {0.5 * (re_min + re_max), 0.5 * (im_min + im_max)}; }
  double diameter() const {
    double w = re_max - re_min, h = im_max - im_min;
    return w > h ? w : h;
  }
};

}  // namespace hypres
