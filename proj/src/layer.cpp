#include "layer.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <random>
#include <stdexcept>

#include "geometry.hpp"
#include "parallel.hpp"
#include "special.hpp"

namespace hypres {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr cplx kI{0.0, 1.0};

struct YPoint {
  double t = 0.0, st = 0.0, theta = 0.0, phi = 0.0;
  double r = 0.0, ftheta = 0.0, fphi = 0.0, jac = 0.0;
  std::array<double, 3> omega{};
};

YPoint make_ypoint(const HyperbolicModel& model, const SurfaceSpec& spec,
                   double t, double phi) {
  YPoint y;
  y.t = std::clamp(t, -1.0, 1.0);
  y.st = std::sqrt(std::max(0.0, 1.0 - y.t * y.t));
  y.theta = std::acos(y.t);
  y.phi = phi;
  surface_radius_grad(spec, y.theta, y.phi, &y.r, &y.ftheta, &y.fphi);
  if (!(y.r > 0.0)) throw std::domain_error("layer: surface radius not positive");
  const double gphi = y.st > 1e-14 ? y.fphi / y.st : 0.0;
  y.jac = surface_measure_density(model, y.r, y.ftheta * y.ftheta + gphi * gphi);
  y.omega = {y.st * std::cos(phi), y.st * std::sin(phi), y.t};
  return y;
}

YPoint node_point(const SurfaceNode& n) {
  YPoint y;
  y.t = std::cos(n.theta);
  y.st = std::sin(n.theta);
  y.theta = n.theta;
  y.phi = n.phi;
  y.r = n.r;
  y.ftheta = n.ftheta;
  y.fphi = n.fphi;
  y.jac = n.jac;
  y.omega = n.omega;
  return y;
}

// sin^2(gamma/2) from the chordal distance: stable for nearby directions.
double half_angle_sq(const std::array<double, 3>& a, const std::array<double, 3>& b) {
  const double dx = a[0] - b[0], dy = a[1] - b[1], dz = a[2] - b[2];
  return 0.25 * (dx * dx + dy * dy + dz * dz);
}

double pair_distance(const HyperbolicModel& model, const YPoint& x, const YPoint& y) {
  const double s2 = half_angle_sq(x.omega, y.omega);
  const double k = model.kappa;
  if (k == 0.0) {
    const double dr = x.r - y.r;
    return std::sqrt(dr * dr + 4.0 * x.r * y.r * s2);
  }
  const double sh = std::sinh(0.5 * k * (x.r - y.r));
  const double cm1 = 2.0 * sh * sh + 2.0 * std::sinh(k * x.r) * std::sinh(k * y.r) * s2;
  return acosh1p(cm1) / k;
}

// Derivative of d(x, .) along the unit outward surface normal at y.
double normal_deriv_distance(const HyperbolicModel& model, const YPoint& x,
                             const YPoint& y, double d) {
  const double k = model.kappa;
  const double wx = warp(k, x.r), wy = warp(k, y.r), wd = warp(k, d);
  const double cx = std::cosh(k * x.r), cy = std::cosh(k * y.r);
  double cg = x.omega[0] * y.omega[0] + x.omega[1] * y.omega[1] + x.omega[2] * y.omega[2];
  cg = std::clamp(cg, -1.0, 1.0);
  const double radial = (cx * wy - wx * cy * cg) / wd;
  // tangential contribution of the surface gradient
  const double ct = y.t, st = y.st;
  const double eth[3] = {ct * std::cos(y.phi), ct * std::sin(y.phi), -st};
  const double eph[3] = {-std::sin(y.phi), std::cos(y.phi), 0.0};
  const double dth = eth[0] * x.omega[0] + eth[1] * x.omega[1] + eth[2] * x.omega[2];
  const double dph = eph[0] * x.omega[0] + eph[1] * x.omega[1] + eph[2] * x.omega[2];
  const double gphi = st > 1e-14 ? y.fphi / st : 0.0;
  const double tang = wx / (wy * wd) * (y.ftheta * dth + gphi * dph);
  const double wn = std::sqrt(1.0 + (y.ftheta * y.ftheta + gphi * gphi) / (wy * wy));
  return (radial + tang) / wn;
}

enum class Kind { Single, Double };

// dlam multiplies by i*d, the lambda-derivative of the phase factor; only
// meaningful for the single layer.
cplx kernel_value(const HyperbolicModel& model, cplx lambda, Kind kind, bool dlam,
                  const YPoint& x, const YPoint& y) {
  const double d = pair_distance(model, x, y);
  cplx v = kind == Kind::Single
               ? free_kernel(model, lambda, d)
               : free_kernel_deriv(model, lambda, d) * normal_deriv_distance(model, x, y, d);
  if (dlam) v *= kI * d;
  return v;
}

// Smooth cutoff in the angle on the parameter sphere: 1 up to g0, 0 past g1.
double pou_eta(double g, double g0, double g1) {
  if (g <= g0) return 1.0;
  if (g >= g1) return 0.0;
  const double u = (g - g0) / (g1 - g0);
  const double qa = std::exp(-1.0 / u), qb = std::exp(-1.0 / (1.0 - u));
  return qb / (qa + qb);
}

struct Frame {
  std::array<double, 3> e1, e2;
};

// Orthonormal pair completing the pole direction a.
Frame frame_at(const std::array<double, 3>& a) {
  Frame f;
  if (std::abs(a[2]) < 0.9) {
    const double s = std::sqrt(a[0] * a[0] + a[1] * a[1]);
    f.e1 = {-a[1] / s, a[0] / s, 0.0};
  } else {
    const double s = std::sqrt(a[1] * a[1] + a[2] * a[2]);
    f.e1 = {0.0, a[2] / s, -a[1] / s};
  }
  f.e2 = {a[1] * f.e1[2] - a[2] * f.e1[1], a[2] * f.e1[0] - a[0] * f.e1[2],
          a[0] * f.e1[1] - a[1] * f.e1[0]};
  return f;
}

// Barycentric weights for the Gauss colatitude nodes in the t = cos(theta)
// variable, rescaled to keep the running product in range.
std::vector<double> barycentric_t(const std::vector<double>& tnodes) {
  const int nt = static_cast<int>(tnodes.size());
  const double scale = 4.0 / (tnodes.back() - tnodes.front());
  std::vector<double> bw(static_cast<size_t>(nt));
  for (int b = 0; b < nt; b++) {
    double v = 1.0;
    for (int l = 0; l < nt; l++) {
      if (l == b) continue;
      v *= scale * (tnodes[static_cast<size_t>(b)] - tnodes[static_cast<size_t>(l)]);
    }
    bw[static_cast<size_t>(b)] = 1.0 / v;
  }
  return bw;
}

// Global interpolation in t across every colatitude node: exact on the whole
// polynomial space the grid carries, so rough colatitude modes keep a faithful
// operator response instead of being filtered away by a local stencil.
void t_weights(const std::vector<double>& tnodes, const std::vector<double>& bw,
               double t, double* w) {
  const int nt = static_cast<int>(tnodes.size());
  double sum = 0.0;
  for (int b = 0; b < nt; b++) {
    const double d = t - tnodes[static_cast<size_t>(b)];
    if (std::abs(d) < 1e-13) {
      for (int l = 0; l < nt; l++) w[l] = 0.0;
      w[b] = 1.0;
      return;
    }
    w[b] = bw[static_cast<size_t>(b)] / d;
    sum += w[b];
  }
  const double inv = 1.0 / sum;
  for (int b = 0; b < nt; b++) w[b] *= inv;
}

// Trigonometric cardinal weights on the uniform azimuth nodes: exact for
// every azimuthal frequency the grid can represent, so rough discrete modes
// keep a faithful operator response.
void phi_cardinal(int np, double dp, double phi, double* w) {
  // sin(np (phi - phi_b) / 2) = -cos(np phi / 2) (-1)^b for nodes at (b+1/2) dp
  const double num = -std::cos(0.5 * np * phi);
  const bool even = np % 2 == 0;
  const double u0 = 0.5 * (phi - 0.5 * dp);
  const double cstep = std::cos(0.5 * dp), sstep = std::sin(0.5 * dp);
  double su = std::sin(u0), cu = std::cos(u0);
  double sgn = 1.0;
  for (int b = 0; b < np; b++) {
    if (std::abs(su) < 1e-12) {
      for (int l = 0; l < np; l++) w[l] = 0.0;
      w[b] = 1.0;
      return;
    }
    w[b] = num * sgn / (np * su) * (even ? cu : 1.0);
    // rotate (cu, su) by -dp/2
    const double c2 = cu * cstep + su * sstep;
    su = su * cstep - cu * sstep;
    cu = c2;
    sgn = -sgn;
  }
}

// Nystrom matrix for the layer kernel.  The kernel is split by a smooth
// partition of unity around each target: the far part is smooth on the whole
// sphere and uses the native product rule at the nodes; the near part is
// integrated in rotated polar coordinates (the polar Jacobian absorbs the
// distance singularity) and lands back on the nodes through local Lagrange
// interpolation of the density.
Eigen::MatrixXcd assemble(const BoundarySurface& s, cplx lambda, Kind kind,
                          bool dlam = false) {
  const int nt = s.ntheta, np = s.nphi;
  if (nt < 3 || np < 4) throw std::invalid_argument("layer: mesh too coarse to assemble");
  const int n = nt * np;
  const double hbar = std::max(kPi / nt, 2.0 * kPi / np);
  const double g1 = std::min(12.0 * hbar, 2.9);
  const double g0 = std::min(4.0 * hbar, 0.4 * g1);
  // radial rule split at the plateau edge so each Gauss panel sees a smooth piece
  const auto& gla = gauss_legendre(14);
  const auto& glb = gauss_legendre(18);
  std::vector<double> rg, rw;
  for (size_t q = 0; q < gla.x.size(); q++) {
    rg.push_back(0.5 * g0 * (gla.x[q] + 1.0));
    rw.push_back(0.5 * g0 * gla.w[q]);
  }
  for (size_t q = 0; q < glb.x.size(); q++) {
    rg.push_back(0.5 * (g0 + g1) + 0.5 * (g1 - g0) * glb.x[q]);
    rw.push_back(0.5 * (g1 - g0) * glb.w[q]);
  }
  const int ma = std::max(32, np + 18);
  const double dpsi = 2.0 * kPi / ma;
  Eigen::MatrixXcd m(n, n);
  std::vector<YPoint> pts(static_cast<size_t>(n));
  for (int j = 0; j < n; j++) pts[static_cast<size_t>(j)] = node_point(s.nodes[static_cast<size_t>(j)]);
  const std::vector<double> bw = barycentric_t(s.tnodes);
  parallel_rows(n, [&](int i) {
    const YPoint& x = pts[static_cast<size_t>(i)];
    Eigen::VectorXcd row = Eigen::VectorXcd::Zero(n);
    std::vector<double> pcard(static_cast<size_t>(np));
    std::vector<double> tw(static_cast<size_t>(nt));
    for (int j = 0; j < n; j++) {
      if (j == i) continue;
      const double s2 = half_angle_sq(x.omega, pts[static_cast<size_t>(j)].omega);
      const double g = 2.0 * std::asin(std::min(1.0, std::sqrt(s2)));
      if (g <= g0) continue;
      const double far = 1.0 - pou_eta(g, g0, g1);
      if (far == 0.0) continue;
      const auto& nd = s.nodes[static_cast<size_t>(j)];
      row(j) = far * nd.w * nd.jac *
               kernel_value(s.model, lambda, kind, dlam, x, pts[static_cast<size_t>(j)]);
    }
    const Frame f = frame_at(x.omega);
    for (size_t q = 0; q < rg.size(); q++) {
      const double g = rg[q];
      const double wq = rw[q] * dpsi * std::sin(g) * pou_eta(g, g0, g1);
      if (wq == 0.0) continue;
      const double sg = std::sin(g), cg = std::cos(g);
      for (int a = 0; a < ma; a++) {
        const double psi = (a + 0.5) * dpsi;
        const double cp = std::cos(psi), sp = std::sin(psi);
        std::array<double, 3> dir;
        for (int c = 0; c < 3; c++)
          dir[c] = sg * cp * f.e1[c] + sg * sp * f.e2[c] + cg * x.omega[c];
        double phi = std::atan2(dir[1], dir[0]);
        if (phi < 0.0) phi += 2.0 * kPi;
        const YPoint y = make_ypoint(s.model, s.spec, dir[2], phi);
        const cplx coef = wq * kernel_value(s.model, lambda, kind, dlam, x, y) * y.jac;
        t_weights(s.tnodes, bw, dir[2], tw.data());
        phi_cardinal(np, s.dphi, phi, pcard.data());
        for (int u = 0; u < nt; u++) {
          const double twu = tw[static_cast<size_t>(u)];
          if (twu == 0.0) continue;
          const cplx cu = coef * twu;
          cplx* dst = row.data() + u * np;
          for (int v = 0; v < np; v++) dst[v] += cu * pcard[static_cast<size_t>(v)];
        }
      }
    }
    m.row(i) = row.transpose();
  });
  return m;
}

std::vector<double> normal_samples(unsigned long long seed, size_t count) {
  std::mt19937_64 rng(seed);
  auto unif = [&rng] {
    return (static_cast<double>(rng() >> 11) + 0.5) * 0x1.0p-53;
  };
  std::vector<double> out(count);
  for (size_t i = 0; i < count; i += 2) {
    const double u1 = unif(), u2 = unif();
    const double m = std::sqrt(-2.0 * std::log(u1));
    out[i] = m * std::cos(2.0 * kPi * u2);
    if (i + 1 < count) out[i + 1] = m * std::sin(2.0 * kPi * u2);
  }
  return out;
}

}  // namespace

BemContour inscribed_contour(const ComplexBox& box) {
  BemContour c;
  c.center = box.center();
  c.a = 0.5 * (box.re_max - box.re_min);
  c.b = 0.5 * (box.im_max - box.im_min);
  return c;
}

cplx free_kernel(const HyperbolicModel& model, cplx lambda, double d) {
  if (!(d > 0.0)) throw std::domain_error("free kernel: distance must be positive");
  return std::exp(kI * lambda * d) / (4.0 * kPi * warp(model.kappa, d));
}

cplx free_kernel_deriv(const HyperbolicModel& model, cplx lambda, double d) {
  if (!(d > 0.0)) throw std::domain_error("free kernel: distance must be positive");
  const double s = warp(model.kappa, d);
  const double c = std::cosh(model.kappa * d);
  return std::exp(kI * lambda * d) * (kI * lambda * s - c) / (4.0 * kPi * s * s);
}

cplx ball_mode_symbol(const HyperbolicModel& model, double radius, int ell,
                      cplx lambda) {
  if (model.dim != 3) throw std::invalid_argument("mode symbol: dimension must be 3");
  if (!(radius > 0.0)) throw std::domain_error("mode symbol: radius must be positive");
  if (ell < 0) throw std::invalid_argument("mode symbol: ell must be nonnegative");
  const double k = model.kappa;
  // R0(d(g)) sin g is analytic in g: sin g / s(d) stays bounded at g = 0.
  auto f = [&](double g) -> cplx {
    const double q = std::sin(0.5 * g), cq = std::cos(0.5 * g);
    double d, ratio;
    if (k > 0.0) {
      const double S = std::sinh(k * radius), Sq = S * q;
      d = 2.0 / k * std::asinh(Sq);
      ratio = k * cq / (S * std::sqrt(1.0 + Sq * Sq));
    } else {
      d = 2.0 * radius * q;
      ratio = cq / radius;
    }
    return std::exp(kI * lambda * d) * ratio / (4.0 * kPi) *
           legendre_p(ell, std::cos(g));
  };
  const double pref = 2.0 * kPi * warp(k, radius) * warp(k, radius);
  const auto& gl = gauss_legendre(16);
  cplx prev = 0.0;
  for (int panels = 4; panels <= 1024; panels *= 2) {
    cplx acc = 0.0;
    const double h = kPi / panels;
    for (int p = 0; p < panels; p++) {
      const double mid = (p + 0.5) * h;
      for (size_t q = 0; q < gl.x.size(); q++)
        acc += gl.w[q] * f(mid + 0.5 * h * gl.x[q]);
    }
    acc *= 0.5 * h * pref;
    if (panels > 4 && std::abs(acc - prev) <= 1e-12 * std::max(1.0, std::abs(acc)))
      return acc;
    prev = acc;
  }
  return prev;
}

Eigen::MatrixXcd assemble_single_layer(const BoundarySurface& s, cplx lambda) {
  return assemble(s, lambda, Kind::Single);
}

Eigen::MatrixXcd assemble_double_layer(const BoundarySurface& s, cplx lambda) {
  return assemble(s, lambda, Kind::Double);
}

Eigen::MatrixXcd assemble_combined(const BoundarySurface& s, cplx lambda) {
  const int n = s.ntheta * s.nphi;
  Eigen::MatrixXcd a = 2.0 * assemble(s, lambda, Kind::Double) +
                       2.0 * kI * assemble(s, lambda, Kind::Single);
  a += Eigen::MatrixXcd::Identity(n, n);
  return a;
}

BemResult bem_resonances(const BoundarySurface& s, const BemContour& contour,
                         const BemOptions& opt) {
  if (!(contour.a > 0.0) || !(contour.b > 0.0))
    throw std::invalid_argument("contour semi-axes must be positive");
  const int n = s.ntheta * s.nphi;
  const int m = std::min(opt.probes, n);
  BemResult res;
  const auto g = normal_samples(opt.seed, static_cast<size_t>(n) * m);
  Eigen::MatrixXcd probe(n, m);
  for (int i = 0; i < n; i++)
    for (int j = 0; j < m; j++) probe(i, j) = g[static_cast<size_t>(i) * m + j];
  const double probe_norm = probe.norm();

  struct NodeEval {
    cplx z, zp;
    Eigen::MatrixXcd y;  // G(z)^{-1} V
  };
  std::map<int, NodeEval> cache;  // key: index on the max_nodes grid
  int denom = 1;
  while (denom < opt.max_nodes) denom *= 2;

  // group near-coincident eigenvalues; the centroid/multiplicity pairs are the
  // stable quantities to compare across refinement levels (individual copies of
  // a split multiple eigenvalue permute under sorting)
  auto cluster = [](const std::vector<cplx>& eigs) {
    std::vector<std::pair<cplx, long long>> out;
    size_t i = 0;
    while (i < eigs.size()) {
      const double tol = 2e-4 * (1.0 + std::abs(eigs[i]));
      cplx sum = eigs[i];
      size_t j = i + 1;
      while (j < eigs.size() && std::abs(eigs[j] - eigs[i]) < tol) {
        sum += eigs[j];
        j++;
      }
      out.emplace_back(sum / static_cast<double>(j - i), static_cast<long long>(j - i));
      i = j;
    }
    return out;
  };

  std::vector<std::pair<cplx, long long>> prev_cl;
  bool have_prev = false;
  for (int nn = opt.min_nodes; nn <= opt.max_nodes; nn *= 2) {
    const int stride = denom / nn;
    for (int kk = 0; kk < nn; kk++) {
      const int key = kk * stride;
      if (cache.count(key)) continue;
      const double t = 2.0 * kPi * kk / nn;
      NodeEval ev;
      ev.z = contour.center + cplx(contour.a * std::cos(t), contour.b * std::sin(t));
      ev.zp = cplx(-contour.a * std::sin(t), contour.b * std::cos(t));
      const Eigen::MatrixXcd gm = assemble_single_layer(s, ev.z);
      ev.y = gm.partialPivLu().solve(probe);
      cache.emplace(key, std::move(ev));
    }
    Eigen::MatrixXcd a0 = Eigen::MatrixXcd::Zero(n, m);
    Eigen::MatrixXcd a1 = Eigen::MatrixXcd::Zero(n, m);
    for (int kk = 0; kk < nn; kk++) {
      const auto& ev = cache.at(kk * stride);
      const cplx f = ev.zp / (kI * static_cast<double>(nn));
      a0 += f * ev.y;
      a1 += f * (ev.z - contour.center) * ev.y;
    }
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(a0, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const auto& sv = svd.singularValues();
    std::vector<cplx> eigs;
    if (sv(0) >= 1e-10 * probe_norm) {
      int r = 0;
      while (r < m && sv(r) > opt.rank_tol * sv(0)) r++;
      if (r == m)
        res.warnings.push_back("probe rank saturated; multiplicity may exceed probe count");
      const Eigen::MatrixXcd u = svd.matrixU().leftCols(r);
      const Eigen::MatrixXcd w = svd.matrixV().leftCols(r);
      Eigen::MatrixXcd b = u.adjoint() * a1 * w;
      for (int i = 0; i < r; i++) b.col(i) /= sv(i);
      Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(b);
      for (int i = 0; i < r; i++) {
        const cplx mu = es.eigenvalues()(i);
        const double ex = mu.real() / contour.a, ey = mu.imag() / contour.b;
        if (ex * ex + ey * ey <= 1.0) eigs.push_back(contour.center + mu);
      }
    }
    std::sort(eigs.begin(), eigs.end(), [](cplx a, cplx b) {
      return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
    });
    res.nodes_used = nn;
    const auto cl = cluster(eigs);
    if (have_prev && prev_cl.size() == cl.size()) {
      double dmax = 0.0;
      bool same = true;
      for (size_t i = 0; i < cl.size(); i++) {
        if (cl[i].second != prev_cl[i].second) same = false;
        dmax = std::max(dmax, std::abs(cl[i].first - prev_cl[i].first));
      }
      if (same && dmax <= opt.tol) {
        res.converged = true;
        prev_cl = cl;
        break;
      }
    }
    prev_cl = cl;
    have_prev = true;
  }
  if (!res.converged)
    res.warnings.push_back("contour refinement did not meet tolerance; reporting last level");

  for (const auto& [sigma, mult] : prev_cl) {
    Resonance r;
    r.sigma = sigma;
    r.ell = -1;
    r.mult = mult;
    r.residual = 0.0;
    if (opt.compute_residuals) {
      Eigen::BDCSVD<Eigen::MatrixXcd> sres(assemble_single_layer(s, r.sigma));
      const auto& rv = sres.singularValues();
      r.residual = rv(rv.size() - 1) / rv(0);
    }
    res.resonances.push_back(r);
  }
  std::sort(res.resonances.begin(), res.resonances.end(),
            [](const Resonance& a, const Resonance& b) {
              return a.sigma.imag() != b.sigma.imag()
                         ? a.sigma.imag() > b.sigma.imag()
                         : a.sigma.real() < b.sigma.real();
            });
  return res;
}

double multiplicity_winding(const BoundarySurface& s, const BemContour& contour,
                            int nodes) {
  if (nodes < 8) throw std::invalid_argument("winding: need at least 8 nodes");
  cplx acc = 0.0;
  for (int kk = 0; kk < nodes; kk++) {
    const double t = 2.0 * kPi * kk / nodes;
    const cplx z = contour.center + cplx(contour.a * std::cos(t), contour.b * std::sin(t));
    const cplx zp = cplx(-contour.a * std::sin(t), contour.b * std::cos(t));
    const Eigen::MatrixXcd gp = assemble(s, z, Kind::Single, true);
    const Eigen::MatrixXcd gm = assemble(s, z, Kind::Single);
    acc += gm.partialPivLu().solve(gp).trace() * zp;
  }
  return (acc / (kI * static_cast<double>(nodes))).real();
}

ExteriorField solve_exterior_dirichlet(const BoundarySurface& s, cplx lambda,
                                       const std::vector<cplx>& boundary_data,
                                       const std::vector<PolarPoint>& points,
                                       bool combined) {
  const int n = s.ntheta * s.nphi;
  if (static_cast<int>(boundary_data.size()) != n)
    throw std::invalid_argument("solve: boundary data size must match node count");
  Eigen::VectorXcd rhs(n);
  for (int i = 0; i < n; i++) rhs(i) = boundary_data[static_cast<size_t>(i)];
  ExteriorField out;
  if (combined) {
    out.density = assemble_combined(s, lambda).partialPivLu().solve(2.0 * rhs);
  } else {
    out.density = assemble_single_layer(s, lambda).partialPivLu().solve(rhs);
  }
  std::vector<YPoint> pts(static_cast<size_t>(n));
  for (int j = 0; j < n; j++) pts[static_cast<size_t>(j)] = node_point(s.nodes[static_cast<size_t>(j)]);
  for (const auto& p : points) {
    if (p.omega.size() != 3)
      throw std::invalid_argument("solve: evaluation points need a 3-vector direction");
    YPoint x;
    x.r = p.r;
    double norm = 0.0;
    for (double c : p.omega) norm += c * c;
    norm = std::sqrt(norm);
    if (!(norm > 0.0)) throw std::invalid_argument("solve: zero direction");
    x.omega = {p.omega[0] / norm, p.omega[1] / norm, p.omega[2] / norm};
    cplx u = 0.0;
    for (int j = 0; j < n; j++) {
      const auto& nd = s.nodes[static_cast<size_t>(j)];
      cplx kv = kernel_value(s.model, lambda, Kind::Single, false, x, pts[static_cast<size_t>(j)]);
      if (combined)
        kv = kernel_value(s.model, lambda, Kind::Double, false, x, pts[static_cast<size_t>(j)]) + kI * kv;
      u += nd.w * nd.jac * kv * out.density(j);
    }
    out.values.push_back(u);
  }
  return out;
}

}  // namespace hypres
