#pragma once

#include <vector>

#include "types.hpp"

namespace hypres {

// Decay profile of the energy comparison: ratio of boundary-sphere data at
// scale 3 rho to scale t - 3 rho; t > 3 rho required.
double p_decay(double kappa, double rho, double t);

struct WidthOptimum {
  double value = 0.0;
  double arg = 0.0;         // optimizing t (or tau); meaningless at infinity
  bool at_infinity = false; // supremum attained only in the limit
};

// Resonance-free-strip width for obstacles inside a ball of radius rho:
// alpha = sup_{tau > 5 rho} -log(4 p(tau - 2 rho)) / (2 tau).
// For kappa > 0 the supremum may be the limit kappa/2 at tau -> infinity.
WidthOptimum alpha_generic(double kappa, double rho);

// Scale-invariant form: A(rho_t) = rho * alpha at kappa rho = rho_t.  The
// profile increases from the flat-space value at rho_t -> 0 to rho_t / 2,
// which it attains (as a supremum) beyond the improvement threshold.
WidthOptimum A_profile(double rho_tilde);

// The critical kappa rho below which the optimized width beats kappa/2:
// root of 4 e^{5 x} (cosh 3x - 1) = 1/2.
double improvement_threshold();

// Isoperimetric-type ratio s_kappa(rho)^{n-1} / int_0^rho s_kappa^{n-1}.
double marklof_ratio(const HyperbolicModel& model, double rho);

struct WidthReport {
  bool ok = false;
  double min_abs_im = 0.0;
  double bound_half = 0.0;   // kappa / 2
  double bound_width = 0.0;  // optimized width (odd dimension only)
  double margin = 0.0;
  Resonance offender;        // meaningful when !ok
};

// Checks Im sigma <= -kappa/2 for every resonance, and additionally
// Im sigma <= -alpha(kappa, rho) when the dimension is odd.
WidthReport verify_width_bounds(const std::vector<Resonance>& resonances,
                                const HyperbolicModel& model, double rho,
                                bool n_odd);

struct BoundProfile {
  std::vector<double> rho_tilde;
  std::vector<double> width;      // A(rho_tilde)
  std::vector<double> half_line;  // rho_tilde / 2
  double flat_value = 0.0;        // limit at rho_tilde -> 0
  double threshold = 0.0;
};

BoundProfile make_bound_profile(const std::vector<double>& grid);

}  // namespace hypres
