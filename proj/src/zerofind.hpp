#pragma once

#include <functional>
#include <string>
#include <vector>

#include "types.hpp"

namespace hypres {

struct Zero {
  cplx z;
  int order = 1;
  double residual = 0.0;
};

struct ZeroSearchResult {
  std::vector<Zero> zeros;
  int total_winding = 0;
  bool complete = true;
  std::vector<std::string> warnings;
};

struct ZeroSearchOptions {
  int max_depth = 48;
  double min_diameter = 1e-6;
  // Newton acceptance: |F| <= residual_tol * max(1, |F'| (1 + |z|)).
  double residual_tol = 1e-10;
};

// All zeros of an analytic function inside a rectangle by the argument
// principle: adaptive boundary winding, recursive bisection, Newton finish.
// Boxes whose boundary grazes a zero are dilated by up to 1% and retried, so
// zeros within that margin of the requested box may be included.
ZeroSearchResult locate_zeros(const std::function<cplx(cplx)>& f,
                              const ComplexBox& box,
                              const ZeroSearchOptions& opts = {});

// Winding number of f along the boundary of a box / a circle, by adaptive
// phase tracking.  Throws on an unresolvable boundary (phase jump persists
// at the refinement cap or a sample collapses to zero).
int winding_number_box(const std::function<cplx(cplx)>& f, const ComplexBox& box);
int winding_number_circle(const std::function<cplx(cplx)>& f, cplx center,
                          double radius);

}  // namespace hypres
