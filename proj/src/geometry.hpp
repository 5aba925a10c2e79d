#pragma once

#include <cstdint>

#include "types.hpp"

namespace hypres {

// sinh(x)/x, series below |x| = 1e-4 so the kappa -> 0 branch is continuous
// to machine precision.
double sinhc(double x);

// acosh(1 + x) for x >= 0 without cancellation at small x.
double acosh1p(double x);

// Warp factor s_kappa(r) = sinh(kappa r)/kappa, s_0(r) = r.
double warp(double kappa, double r);
double warp(const HyperbolicModel& model, double r);

// Geodesic distance between polar points, law of cosines in curvature
// -kappa^2.  cos_gamma is the cosine of the angle between the two
// directions.
double geodesic_distance(const HyperbolicModel& model, double r1, double r2,
                         double cos_gamma);
double geodesic_distance(const HyperbolicModel& model, const PolarPoint& p,
                         const PolarPoint& q);

// Dimension of the space of degree-ell spherical harmonics on S^{n-1}.
std::uint64_t harmonic_dimension(int n, int ell);

// Area density of the radial graph r = f(omega) with respect to the round
// volume on S^{n-1}: s_kappa(f)^{n-1} sqrt(1 + |grad_h f|^2 / s_kappa(f)^2).
// grad2 is |grad_h f|^2 in the round metric.
double surface_measure_density(const HyperbolicModel& model, double f,
                               double grad2);

}  // namespace hypres
