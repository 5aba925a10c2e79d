#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "surface.hpp"
#include "types.hpp"

namespace hypres {

// Outgoing free kernel in three dimensions: e^{i lambda d} / (4 pi s_kappa(d)).
cplx free_kernel(const HyperbolicModel& model, cplx lambda, double d);
// Its derivative in the distance.
cplx free_kernel_deriv(const HyperbolicModel& model, cplx lambda, double d);

// Eigenvalue of the single-layer operator on a geodesic sphere of the given
// radius, acting on the degree-ell spherical-harmonic subspace.
cplx ball_mode_symbol(const HyperbolicModel& model, double radius, int ell,
                      cplx lambda);

// Nystrom matrices on the surface mesh.  Rows are target nodes; the quadrature
// weights sit inside the matrix, with locally corrected entries on the 3x3
// cell patch around each target (Duffy treatment on the singular cell).
Eigen::MatrixXcd assemble_single_layer(const BoundarySurface& s, cplx lambda);
// Principal-value double layer (outward normal, derivative in the source).
Eigen::MatrixXcd assemble_double_layer(const BoundarySurface& s, cplx lambda);
// Combined field operator I + N + 2iG with N = 2 * double layer.
Eigen::MatrixXcd assemble_combined(const BoundarySurface& s, cplx lambda);

struct BemContour {
  cplx center;
  double a = 0.0;  // real semi-axis
  double b = 0.0;  // imaginary semi-axis
};

// Ellipse inscribed in the box; trapezoid quadrature on it is spectrally
// accurate, unlike on a path with corners.
BemContour inscribed_contour(const ComplexBox& box);

struct BemOptions {
  int probes = 8;
  int min_nodes = 32;
  int max_nodes = 256;
  double tol = 1e-8;        // contour-refinement agreement
  double rank_tol = 1e-8;   // relative singular-value cutoff
  unsigned long long seed = 0x9e3779b97f4a7c15ull;
  bool compute_residuals = true;
};

struct BemResult {
  std::vector<Resonance> resonances;  // clustered; mult = cluster size
  int nodes_used = 0;
  bool converged = false;
  std::vector<std::string> warnings;
};

// Contour-integral eigenvalue extraction for the single-layer family G(z)
// on the ellipse z = center + a cos t + i b sin t.
BemResult bem_resonances(const BoundarySurface& s, const BemContour& contour,
                         const BemOptions& opt = {});

// (1 / 2 pi i) contour integral of tr(G' G^{-1}): enclosed zero multiplicity.
double multiplicity_winding(const BoundarySurface& s, const BemContour& contour,
                            int nodes = 64);

struct ExteriorField {
  Eigen::VectorXcd density;
  std::vector<cplx> values;
};

// Exterior Dirichlet solve: boundary_data at the mesh nodes, field evaluated
// at the given exterior points (kept well away from the surface).  combined
// selects the second-kind operator; otherwise the single-layer equation.
ExteriorField solve_exterior_dirichlet(const BoundarySurface& s, cplx lambda,
                                       const std::vector<cplx>& boundary_data,
                                       const std::vector<PolarPoint>& points,
                                       bool combined = true);

}  // namespace hypres
