#pragma once

#include <string>
#include <vector>

#include "types.hpp"
#include "zerofind.hpp"

namespace hypres {

// Coefficients of the regular series solution about x = 1 of
//   d/dx[(1 - x^2) v'] + 2 i sigma/kappa v' + c v = 0,
// in the normalization whose coefficients are sigma-independent:
//   v(x) = sum_j d_j (x-1)^j / Gamma(j + 1 - i sigma/kappa).
// For c = k(k-1) the series terminates: d_j = 0 for j >= k.
struct FrobeniusSolution {
  double c = 0.0;
  std::vector<double> d;  // d_0 .. d_J (possibly fewer if overflow guard hit)
};

FrobeniusSolution series_coefficients(double c, int terms);

// Angular coupling constant for H^n, momentum ell:
// c = (n-1)(n-3)/4 + ell(ell + n - 2).
double coupling_constant(int n, int ell);

// The entire function sigma -> v(x0; sigma) in the normalization above.
// x0 = coth(kappa R) > 1.  For x0 beyond `handover` the series is summed at
// the handover point and continued by the ODE; the result is independent of
// the handover choice.
cplx evaluate_outgoing_general(double kappa, double c, double x0, cplx sigma,
                               double handover = 2.5);

struct GeneralResonances {
  std::vector<Resonance> resonances;
  std::vector<Zero> lattice_rejected;  // Gamma-lattice candidates filtered out
  bool complete = true;
  std::vector<std::string> warnings;
};

// Resonances of the geodesic ball in H^n_kappa (any n >= 2) with angular
// momentum ell, located as zeros of the entire function above inside `box`.
// Zeros within 1e-5 kappa of the lattice sigma = -i kappa m are kept only if
// the Gamma-restored function winds around them; rejected candidates are
// reported separately.
GeneralResonances ball_resonances_general(const HyperbolicModel& model, int ell,
                                          double radius, const ComplexBox& box);

}  // namespace hypres
