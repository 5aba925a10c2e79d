#pragma once

#include <vector>

#include "types.hpp"

namespace hypres {

// Polynomial part of the outgoing radial solution in odd dimension,
// expressed in beta = i sigma / kappa.  Real coefficients, degree k - 1,
// where k = (n - 1)/2 + ell indexes the reduced radial problem.
struct OutgoingPolynomial {
  int k = 0;
  double kappa = 0.0;
  double radius = 0.0;
  std::vector<double> coeff;  // ascending in beta
};

OutgoingPolynomial build_outgoing_polynomial(const HyperbolicModel& model,
                                             int k, double radius);

// Outgoing radial solution u(r; sigma) = e^{i r sigma} Q_{k,r}(i sigma/kappa).
cplx evaluate_outgoing(const HyperbolicModel& model, int k, double r,
                       cplx sigma);

// Resonances of the geodesic ball of the given radius for one angular
// momentum: roots of the outgoing polynomial mapped by sigma = -i kappa beta.
// Multiplicity is dim(harmonics) x root order.  Requires odd dimension >= 3
// and kappa > 0; k = 1 has no resonances.
std::vector<Resonance> ball_resonances_odd(const HyperbolicModel& model,
                                           int ell, double radius);

}  // namespace hypres
