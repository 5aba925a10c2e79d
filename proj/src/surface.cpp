#include "surface.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "geometry.hpp"
#include "special.hpp"

namespace hypres {
namespace {

// P_l^m and P_{l-1}^m (no Condon-Shortley phase), |x| <= 1, 0 <= m <= l.
void assoc_legendre_pair(int l, int m, double x, double* pl, double* plm1) {
  const double sx = std::sqrt(std::max(0.0, 1.0 - x * x));
  double pmm = 1.0;
  for (int i = 1; i <= m; i++) pmm *= (2.0 * i - 1.0) * sx;
  if (l == m) {
    *pl = pmm;
    *plm1 = 0.0;  // P_{m-1}^m vanishes
    return;
  }
  double p0 = pmm;                       // P_m^m
  double p1 = x * (2.0 * m + 1.0) * pmm; // P_{m+1}^m
  for (int ll = m + 2; ll <= l; ll++) {
    const double p2 =
        (x * (2.0 * ll - 1.0) * p1 - (ll + m - 1.0) * p0) / (ll - m);
    p0 = p1;
    p1 = p2;
  }
  *pl = p1;
  *plm1 = p0;
}

double sh_norm(int l, int m) {
  double ratio = 1.0;  // (l-m)! / (l+m)!
  for (int i = l - m + 1; i <= l + m; i++) ratio /= i;
  return std::sqrt((2.0 * l + 1.0) / (4.0 * std::numbers::pi) * ratio);
}

}  // namespace

SurfaceSpec parse_surface_spec(const std::string& text) {
  SurfaceSpec spec;
  std::istringstream in(text);
  std::string line;
  bool have_base = false;
  int lineno = 0;
  while (std::getline(in, line)) {
    lineno++;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    if (!have_base) {
      double b;
      if (ls >> b) {
        if (!(b > 0.0)) throw std::invalid_argument("surface: base radius must be positive");
        spec.base = b;
        have_base = true;
      }
      continue;
    }
    SurfaceSpec::Term t;
    if (!(ls >> t.l >> t.m >> t.coeff)) {
      std::string tok;
      if (std::istringstream(line) >> tok)
        throw std::invalid_argument("surface: bad term at line " + std::to_string(lineno));
      continue;  // blank after comment strip
    }
    if (t.l < 0 || std::abs(t.m) > t.l)
      throw std::invalid_argument("surface: need 0 <= |m| <= l at line " + std::to_string(lineno));
    spec.terms.push_back(t);
  }
  if (!have_base) throw std::invalid_argument("surface: missing base radius");
  return spec;
}

double real_sph_harm(int l, int m, double theta, double phi) {
  double y, dt, dp;
  real_sph_harm_grad(l, m, theta, phi, &y, &dt, &dp);
  return y;
}

void real_sph_harm_grad(int l, int m, double theta, double phi, double* y,
                        double* dtheta, double* dphi) {
  const int am = std::abs(m);
  if (l < 0 || am > l) throw std::invalid_argument("sph harm: need |m| <= l");
  const double x = std::cos(theta);
  const double sx = std::sin(theta);
  double pl, plm1;
  assoc_legendre_pair(l, am, x, &pl, &plm1);
  // d/dtheta P_l^m(cos theta) = -((l+m) P_{l-1}^m - l x P_l^m) / sin theta
  double dpl;
  if (std::fabs(sx) > 1e-14) {
    dpl = -((l + am) * plm1 - l * x * pl) / sx;
  } else {
    dpl = 0.0;  // poles: only used at interior quadrature angles
  }
  double norm = sh_norm(l, am);
  double azim, dazim;
  if (m == 0) {
    azim = 1.0;
    dazim = 0.0;
  } else if (m > 0) {
    norm *= std::numbers::sqrt2;
    azim = std::cos(am * phi);
    dazim = -am * std::sin(am * phi);
  } else {
    norm *= std::numbers::sqrt2;
    azim = std::sin(am * phi);
    dazim = am * std::cos(am * phi);
  }
  *y = norm * pl * azim;
  *dtheta = norm * dpl * azim;
  *dphi = norm * pl * dazim;
}

double surface_radius(const SurfaceSpec& spec, double theta, double phi) {
  double f, ft, fp;
  surface_radius_grad(spec, theta, phi, &f, &ft, &fp);
  return f;
}

void surface_radius_grad(const SurfaceSpec& spec, double theta, double phi,
                         double* f, double* ftheta, double* fphi) {
  double v = spec.base, vt = 0.0, vp = 0.0;
  for (const auto& t : spec.terms) {
    double y, dt, dp;
    real_sph_harm_grad(t.l, t.m, theta, phi, &y, &dt, &dp);
    v += t.coeff * y;
    vt += t.coeff * dt;
    vp += t.coeff * dp;
  }
  *f = v;
  *ftheta = vt;
  *fphi = vp;
}

double BoundarySurface::area() const {
  double a = 0.0;
  for (const auto& n : nodes) a += n.w * n.jac;
  return a;
}

BoundarySurface build_surface(const HyperbolicModel& model,
                              const SurfaceSpec& spec, int ntheta, int nphi) {
  if (model.dim != 3) throw std::invalid_argument("surface mesh: dimension must be 3");
  if (ntheta < 2 || nphi < 2) throw std::invalid_argument("surface mesh: too few nodes");
  BoundarySurface s;
  s.model = model;
  s.spec = spec;
  s.ntheta = ntheta;
  s.nphi = nphi;
  const auto& gl = gauss_legendre(ntheta);
  s.tnodes = gl.x;  // ascending in t = cos theta
  s.tedges.resize(ntheta + 1);
  s.tedges[0] = -1.0;
  s.tedges[ntheta] = 1.0;
  for (int i = 1; i < ntheta; i++)
    s.tedges[i] = 0.5 * (gl.x[i - 1] + gl.x[i]);
  s.dphi = 2.0 * std::numbers::pi / nphi;
  s.nodes.resize(static_cast<size_t>(ntheta) * nphi);
  s.min_radius = 1e300;
  s.max_radius = 0.0;
  for (int i = 0; i < ntheta; i++) {
    const double t = gl.x[i];
    const double theta = std::acos(t);
    const double st = std::sin(theta);
    for (int j = 0; j < nphi; j++) {
      const double phi = (j + 0.5) * s.dphi;
      SurfaceNode& nd = s.nodes[static_cast<size_t>(i) * nphi + j];
      nd.theta = theta;
      nd.phi = phi;
      surface_radius_grad(spec, theta, phi, &nd.r, &nd.ftheta, &nd.fphi);
      if (!(nd.r > 0.0))
        throw std::domain_error("surface mesh: radius must stay positive (not star-shaped)");
      s.min_radius = std::min(s.min_radius, nd.r);
      s.max_radius = std::max(s.max_radius, nd.r);
      const double grad2 =
          nd.ftheta * nd.ftheta +
          (st > 1e-14 ? (nd.fphi / st) * (nd.fphi / st) : 0.0);
      nd.jac = surface_measure_density(model, nd.r, grad2);
      nd.w = gl.w[i] * s.dphi;
      nd.omega = {st * std::cos(phi), st * std::sin(phi), t};
    }
  }
  return s;
}

}  // namespace hypres
