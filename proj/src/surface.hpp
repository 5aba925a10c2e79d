#pragma once

#include <array>
#include <string>
#include <vector>

#include "types.hpp"

namespace hypres {

// Star-shaped surface r = f(theta, phi) about the origin: a constant base
// radius plus real orthonormal spherical-harmonic perturbations.
struct SurfaceSpec {
  struct Term {
    int l = 0;
    int m = 0;
    double coeff = 0.0;
  };
  double base = 1.0;
  std::vector<Term> terms;
};

// Text format: '#' starts a comment, first data token is the base radius,
// each further data line reads "l m coeff".
SurfaceSpec parse_surface_spec(const std::string& text);

// Real orthonormal spherical harmonic on S^2 and its angular derivatives.
double real_sph_harm(int l, int m, double theta, double phi);
void real_sph_harm_grad(int l, int m, double theta, double phi, double* y,
                        double* dtheta, double* dphi);

double surface_radius(const SurfaceSpec& spec, double theta, double phi);
void surface_radius_grad(const SurfaceSpec& spec, double theta, double phi,
                         double* f, double* ftheta, double* fphi);

struct SurfaceNode {
  double theta = 0.0, phi = 0.0;
  double r = 0.0;                    // radius of the surface point
  double ftheta = 0.0, fphi = 0.0;   // angular derivatives of f
  double w = 0.0;                    // quadrature weight in (t, phi)
  double jac = 0.0;                  // surface measure density over dt dphi
  std::array<double, 3> omega{};     // unit direction
};

// Quadrature mesh on the surface: Gauss-Legendre in t = cos theta times a
// uniform periodic grid in phi.  Cells (for near-field treatment) are the
// Voronoi-style boxes between node midpoints.
struct BoundarySurface {
  HyperbolicModel model;
  SurfaceSpec spec;
  int ntheta = 0, nphi = 0;
  std::vector<SurfaceNode> nodes;  // ntheta * nphi, row-major (i_t, j_phi)
  std::vector<double> tnodes;      // ascending GL points in t
  std::vector<double> tedges;      // ntheta + 1 cell edges, [-1, 1]
  double dphi = 0.0;               // phi_j = (j + 1/2) dphi
  double min_radius = 0.0, max_radius = 0.0;

  double area() const;
};

BoundarySurface build_surface(const HyperbolicModel& model,
                              const SurfaceSpec& spec, int ntheta, int nphi);

}  // namespace hypres
