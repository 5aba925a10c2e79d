#pragma once

#include <vector>

#include "types.hpp"

namespace hypres {

// Flat-space analogue of the outgoing polynomial, beta = i lambda:
// Q^E_{k,R}(beta) = sum_j prod_{l=1}^j (k(k-1) - l(l-1)) (-beta)^{k-1-j} /
//                   (2^j j! R^j).
// Its roots are the scattering poles of the ball of radius R in R^n for odd
// n, k = (n-1)/2 + ell (equivalently the zeros of the half-integer Hankel
// function of order ell + n/2 - 1 at lambda R).
struct EuclidOutgoingPolynomial {
  int k = 0;
  double radius = 0.0;
  std::vector<double> coeff;  // ascending in beta
};

EuclidOutgoingPolynomial build_euclid_polynomial(int k, double radius);

std::vector<Resonance> euclid_ball_resonances(int n, int ell, double radius);

struct RalstonReport {
  bool ok = false;
  double min_abs_im = 0.0;  // over the supplied resonances
  double bound = 0.0;       // 1/rho
  double margin = 0.0;      // min_abs_im - bound
  Resonance offender;       // meaningful when !ok
};

// Checks the sharp lower bound inf |Im lambda| >= 1/rho for obstacles inside
// a ball of radius rho (attained by the sphere in dimension 3).
RalstonReport check_ralston(const std::vector<Resonance>& resonances,
                            double rho);

}  // namespace hypres
