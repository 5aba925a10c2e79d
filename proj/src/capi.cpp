#include "hypres.h"

#include <exception>
#include <new>
#include <stdexcept>
#include <string>
#include <vector>

#include "bounds.hpp"
#include "euclid.hpp"
#include "exact_odd.hpp"
#include "frobenius.hpp"
#include "geometry.hpp"
#include "layer.hpp"
#include "polyroots.hpp"
#include "surface.hpp"
#include "types.hpp"

namespace {

thread_local std::string g_error;

hypres_status fail(hypres_status code, const char* what) {
  g_error = what ? what : "unknown error";
  return code;
}

template <class F>
hypres_status guarded(F&& f) {
  try {
    return f();
  } catch (const std::invalid_argument& e) {
    return fail(HYPRES_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::domain_error& e) {
    return fail(HYPRES_ERR_DOMAIN, e.what());
  } catch (const std::bad_alloc&) {
    return fail(HYPRES_ERR_INTERNAL, "out of memory");
  } catch (const std::overflow_error& e) {
    return fail(HYPRES_ERR_DOMAIN, e.what());
  } catch (const std::runtime_error& e) {
    return fail(HYPRES_ERR_NO_CONVERGENCE, e.what());
  } catch (const std::exception& e) {
    return fail(HYPRES_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(HYPRES_ERR_INTERNAL, "unknown exception");
  }
}

hypres_status need(bool cond, const char* what) {
  return cond ? HYPRES_OK : fail(HYPRES_ERR_INVALID_ARGUMENT, what);
}

}  // namespace

struct hypres_model {
  hypres::HyperbolicModel m;
};

struct hypres_resonances {
  std::vector<hypres::Resonance> list;
  std::vector<hypres::cplx> rejected;
  std::vector<std::string> warnings;
  bool complete = true;
};

struct hypres_surface {
  hypres::BoundarySurface s;
};

extern "C" {

const char* hypres_version(void) { return "1.0.0"; }

const char* hypres_last_error(void) { return g_error.c_str(); }

hypres_status hypres_model_create(double kappa, int dim, hypres_model** out) {
  if (auto st = need(out != nullptr, "null output"); st != HYPRES_OK) return st;
  return guarded([&] {
    *out = new hypres_model{hypres::HyperbolicModel(kappa, dim)};
    return HYPRES_OK;
  });
}

void hypres_model_destroy(hypres_model* m) { delete m; }

hypres_status hypres_warp(const hypres_model* m, double r, double* out) {
  if (auto st = need(m && out, "null argument"); st != HYPRES_OK) return st;
  return guarded([&] {
    if (!(r >= 0.0)) throw std::domain_error("warp: r must be nonnegative");
    *out = hypres::warp(m->m.kappa, r);
    return HYPRES_OK;
  });
}

hypres_status hypres_geodesic_distance(const hypres_model* m, double r1,
                                       const double* omega1, double r2,
                                       const double* omega2, int dim,
                                       double* out) {
  if (auto st = need(m && omega1 && omega2 && out, "null argument"); st != HYPRES_OK) return st;
  return guarded([&] {
    hypres::PolarPoint p{r1, std::vector<double>(omega1, omega1 + dim)};
    hypres::PolarPoint q{r2, std::vector<double>(omega2, omega2 + dim)};
    *out = hypres::geodesic_distance(m->m, p, q);
    return HYPRES_OK;
  });
}

hypres_status hypres_harmonic_dimension(int n, int ell, long long* out) {
  if (auto st = need(out != nullptr, "null output"); st != HYPRES_OK) return st;
  return guarded([&] {
    *out = hypres::harmonic_dimension(n, ell);
    return HYPRES_OK;
  });
}

hypres_status hypres_surface_measure_density(const hypres_model* m, double f,
                                             double grad2, double* out) {
  if (auto st = need(m && out, "null argument"); st != HYPRES_OK) return st;
  return guarded([&] {
    *out = hypres::surface_measure_density(m->m, f, grad2);
    return HYPRES_OK;
  });
}

int hypres_resonances_count(const hypres_resonances* r) {
  return r ? static_cast<int>(r->list.size()) : 0;
}

hypres_status hypres_resonances_get(const hypres_resonances* r, int idx,
                                    double* re, double* im, int* ell,
                                    long long* mult, double* residual) {
  if (auto st = need(r != nullptr, "null list"); st != HYPRES_OK) return st;
  if (idx < 0 || idx >= static_cast<int>(r->list.size()))
    return fail(HYPRES_ERR_INVALID_ARGUMENT, "index out of range");
  const auto& x = r->list[static_cast<size_t>(idx)];
  if (re) *re = x.sigma.real();
  if (im) *im = x.sigma.imag();
  if (ell) *ell = x.ell;
  if (mult) *mult = x.mult;
  if (residual) *residual = x.residual;
  return HYPRES_OK;
}

int hypres_resonances_complete(const hypres_resonances* r) {
  return r && r->complete ? 1 : 0;
}

int hypres_resonances_warning_count(const hypres_resonances* r) {
  return r ? static_cast<int>(r->warnings.size()) : 0;
}

const char* hypres_resonances_warning(const hypres_resonances* r, int idx) {
  if (!r || idx < 0 || idx >= static_cast<int>(r->warnings.size())) return nullptr;
  return r->warnings[static_cast<size_t>(idx)].c_str();
}

int hypres_resonances_rejected_count(const hypres_resonances* r) {
  return r ? static_cast<int>(r->rejected.size()) : 0;
}

hypres_status hypres_resonances_rejected_get(const hypres_resonances* r,
                                             int idx, double* re, double* im) {
  if (auto st = need(r != nullptr, "null list"); st != HYPRES_OK) return st;
  if (idx < 0 || idx >= static_cast<int>(r->rejected.size()))
    return fail(HYPRES_ERR_INVALID_ARGUMENT, "index out of range");
  if (re) *re = r->rejected[static_cast<size_t>(idx)].real();
  if (im) *im = r->rejected[static_cast<size_t>(idx)].imag();
  return HYPRES_OK;
}

void hypres_resonances_destroy(hypres_resonances* r) { delete r; }

hypres_status hypres_outgoing_polynomial(const hypres_model* m, int k,
                                         double radius, double* coeffs,
                                         int* len) {
  if (auto st = need(m && coeffs && len, "null argument"); st != HYPRES_OK) return st;
  return guarded([&] {
    const auto p = hypres::build_outgoing_polynomial(m->m, k, radius);
    const int n = static_cast<int>(p.coeff.size());
    if (*len < n) throw std::invalid_argument("coefficient buffer too small");
    for (int i = 0; i < n; i++) coeffs[i] = p.coeff[static_cast<size_t>(i)];
    *len = n;
    return HYPRES_OK;
  });
}

hypres_status hypres_evaluate_outgoing(const hypres_model* m, int k, double r,
                                       double sigma_re, double sigma_im,
                                       double* out_re, double* out_im) {
  if (auto st = need(m && out_re && out_im, "null argument"); st != HYPRES_OK) return st;
  return guarded([&] {
    const hypres::cplx v =
        hypres::evaluate_outgoing(m->m, k, r, {sigma_re, sigma_im});
    *out_re = v.real();
    *out_im = v.imag();
    return HYPRES_OK;
  });
}

hypres_status hypres_ball_resonances_odd(const hypres_model* m, int ell,
                                         double radius,
                                         hypres_resonances** out) {
  if (auto st = need(m && out, "null argument"); st != HYPRES_OK) return st;
  return guarded([&] {
    auto list = hypres::ball_resonances_odd(m->m, ell, radius);
    auto* r = new hypres_resonances;
    r->list = std::move(list);
    *out = r;
    return HYPRES_OK;
  });
}

hypres_status hypres_series_coefficients(double c, int terms, double* out) {
  if (auto st = need(out != nullptr, "null output"); st != HYPRES_OK) return st;
  return guarded([&] {
    const auto s = hypres::series_coefficients(c, terms);
    for (int i = 0; i < terms; i++)
      out[i] = i < static_cast<int>(s.d.size()) ? s.d[static_cast<size_t>(i)] : 0.0;
    return HYPRES_OK;
  });
}

hypres_status hypres_evaluate_outgoing_general(const hypres_model* m, double c,
                                               double x0, double sigma_re,
                                               double sigma_im, double* out_re,
                                               double* out_im) {
  if (auto st = need(m && out_re && out_im, "null argument"); st != HYPRES_OK) return st;
  return guarded([&] {
    const hypres::cplx v = hypres::evaluate_outgoing_general(
        m->m.kappa, c, x0, {sigma_re, sigma_im});
    *out_re = v.real();
    *out_im = v.imag();
    return HYPRES_OK;
  });
}

hypres_status hypres_ball_resonances_general(const hypres_model* m, int ell,
                                             double radius, double re_min,
                                             double re_max, double im_min,
                                             double im_max,
                                             hypres_resonances** out) {
  if (auto st = need(m && out, "null argument"); st != HYPRES_OK) return st;
  return guarded([&] {
    hypres::ComplexBox box{re_min, re_max, im_min, im_max};
    auto res = hypres::ball_resonances_general(m->m, ell, radius, box);
    auto* r = new hypres_resonances;
    r->list = std::move(res.resonances);
    for (const auto& z : res.lattice_rejected) r->rejected.push_back(z.z);
    r->warnings = std::move(res.warnings);
    r->complete = res.complete;
    *out = r;
    return HYPRES_OK;
  });
}

hypres_status hypres_euclid_ball_resonances(int n, int ell, double radius,
                                            hypres_resonances** out) {
  if (auto st = need(out != nullptr, "null output"); st != HYPRES_OK) return st;
  return guarded([&] {
    auto* r = new hypres_resonances;
    r->list = hypres::euclid_ball_resonances(n, ell, radius);
    *out = r;
    return HYPRES_OK;
  });
}

hypres_status hypres_check_ralston(const hypres_resonances* r, double rho,
                                   int* ok, double* min_abs_im, double* bound) {
  if (auto st = need(r != nullptr, "null list"); st != HYPRES_OK) return st;
  return guarded([&] {
    const auto rep = hypres::check_ralston(r->list, rho);
    if (ok) *ok = rep.ok ? 1 : 0;
    if (min_abs_im) *min_abs_im = rep.min_abs_im;
    if (bound) *bound = rep.bound;
    return HYPRES_OK;
  });
}

hypres_status hypres_p_decay(double kappa, double rho, double t, double* out) {
  if (auto st = need(out != nullptr, "null output"); st != HYPRES_OK) return st;
  return guarded([&] {
    *out = hypres::p_decay(kappa, rho, t);
    return HYPRES_OK;
  });
}

hypres_status hypres_alpha_generic(double kappa, double rho, double* value,
                                   int* at_infinity) {
  if (auto st = need(value != nullptr, "null output"); st != HYPRES_OK) return st;
  return guarded([&] {
    const auto w = hypres::alpha_generic(kappa, rho);
    *value = w.value;
    if (at_infinity) *at_infinity = w.at_infinity ? 1 : 0;
    return HYPRES_OK;
  });
}

hypres_status hypres_a_profile(double rho_tilde, double* value,
                               int* at_infinity) {
  if (auto st = need(value != nullptr, "null output"); st != HYPRES_OK) return st;
  return guarded([&] {
    const auto w = hypres::A_profile(rho_tilde);
    *value = w.value;
    if (at_infinity) *at_infinity = w.at_infinity ? 1 : 0;
    return HYPRES_OK;
  });
}

hypres_status hypres_improvement_threshold(double* out) {
  if (auto st = need(out != nullptr, "null output"); st != HYPRES_OK) return st;
  return guarded([&] {
    *out = hypres::improvement_threshold();
    return HYPRES_OK;
  });
}

hypres_status hypres_marklof_ratio(const hypres_model* m, double rho,
                                   double* out) {
  if (auto st = need(m && out, "null argument"); st != HYPRES_OK) return st;
  return guarded([&] {
    *out = hypres::marklof_ratio(m->m, rho);
    return HYPRES_OK;
  });
}

hypres_status hypres_verify_width_bounds(const hypres_resonances* r,
                                         const hypres_model* m, double rho,
                                         int n_odd, int* ok,
                                         double* min_abs_im, double* margin) {
  if (auto st = need(r && m, "null argument"); st != HYPRES_OK) return st;
  return guarded([&] {
    const auto rep =
        hypres::verify_width_bounds(r->list, m->m, rho, n_odd != 0);
    if (ok) *ok = rep.ok ? 1 : 0;
    if (min_abs_im) *min_abs_im = rep.min_abs_im;
    if (margin) *margin = rep.margin;
    return HYPRES_OK;
  });
}

hypres_status hypres_surface_create(const hypres_model* m,
                                    const char* spec_text, int ntheta,
                                    int nphi, hypres_surface** out) {
  if (auto st = need(m && spec_text && out, "null argument"); st != HYPRES_OK) return st;
  return guarded([&] {
    const auto spec = hypres::parse_surface_spec(spec_text);
    *out = new hypres_surface{hypres::build_surface(m->m, spec, ntheta, nphi)};
    return HYPRES_OK;
  });
}

void hypres_surface_destroy(hypres_surface* s) { delete s; }

hypres_status hypres_surface_node_count(const hypres_surface* s, int* out) {
  if (auto st = need(s && out, "null argument"); st != HYPRES_OK) return st;
  *out = static_cast<int>(s->s.nodes.size());
  return HYPRES_OK;
}

hypres_status hypres_surface_area(const hypres_surface* s, double* out) {
  if (auto st = need(s && out, "null argument"); st != HYPRES_OK) return st;
  return guarded([&] {
    *out = s->s.area();
    return HYPRES_OK;
  });
}

hypres_status hypres_free_kernel(const hypres_model* m, double lambda_re,
                                 double lambda_im, double d, double* out_re,
                                 double* out_im) {
  if (auto st = need(m && out_re && out_im, "null argument"); st != HYPRES_OK) return st;
  return guarded([&] {
    const hypres::cplx v =
        hypres::free_kernel(m->m, {lambda_re, lambda_im}, d);
    *out_re = v.real();
    *out_im = v.imag();
    return HYPRES_OK;
  });
}

hypres_status hypres_ball_mode_symbol(const hypres_model* m, double radius,
                                      int ell, double lambda_re,
                                      double lambda_im, double* out_re,
                                      double* out_im) {
  if (auto st = need(m && out_re && out_im, "null argument"); st != HYPRES_OK) return st;
  return guarded([&] {
    const hypres::cplx v = hypres::ball_mode_symbol(
        m->m, radius, ell, {lambda_re, lambda_im});
    *out_re = v.real();
    *out_im = v.imag();
    return HYPRES_OK;
  });
}

hypres_status hypres_bem_resonances(const hypres_surface* s, double re_min,
                                    double re_max, double im_min,
                                    double im_max, int probes,
                                    unsigned long long seed,
                                    hypres_resonances** out) {
  if (auto st = need(s && out, "null argument"); st != HYPRES_OK) return st;
  return guarded([&] {
    hypres::ComplexBox box{re_min, re_max, im_min, im_max};
    hypres::BemOptions opt;
    if (probes > 0) opt.probes = probes;
    if (seed != 0) opt.seed = seed;
    auto res = hypres::bem_resonances(s->s, hypres::inscribed_contour(box), opt);
    auto* r = new hypres_resonances;
    r->list = std::move(res.resonances);
    r->warnings = std::move(res.warnings);
    r->complete = res.converged;
    *out = r;
    return HYPRES_OK;
  });
}

hypres_status hypres_multiplicity_winding(const hypres_surface* s,
                                          double re_min, double re_max,
                                          double im_min, double im_max,
                                          int nodes, double* out) {
  if (auto st = need(s && out, "null argument"); st != HYPRES_OK) return st;
  return guarded([&] {
    hypres::ComplexBox box{re_min, re_max, im_min, im_max};
    *out = hypres::multiplicity_winding(s->s, hypres::inscribed_contour(box),
                                        nodes > 0 ? nodes : 64);
    return HYPRES_OK;
  });
}

hypres_status hypres_solve_exterior_dirichlet(const hypres_surface* s,
                                              double lambda_re,
                                              double lambda_im,
                                              const double* boundary_data,
                                              const double* points,
                                              int n_points, int combined,
                                              double* values) {
  if (auto st = need(s && boundary_data && values && (n_points == 0 || points),
                     "null argument");
      st != HYPRES_OK)
    return st;
  return guarded([&] {
    const size_t n = s->s.nodes.size();
    std::vector<hypres::cplx> data(n);
    for (size_t i = 0; i < n; i++)
      data[i] = {boundary_data[2 * i], boundary_data[2 * i + 1]};
    std::vector<hypres::PolarPoint> pts;
    for (int i = 0; i < n_points; i++) {
      const double* row = points + 4 * i;
      pts.push_back({row[0], {row[1], row[2], row[3]}});
    }
    const auto field = hypres::solve_exterior_dirichlet(
        s->s, {lambda_re, lambda_im}, data, pts, combined != 0);
    for (int i = 0; i < n_points; i++) {
      values[2 * i] = field.values[static_cast<size_t>(i)].real();
      values[2 * i + 1] = field.values[static_cast<size_t>(i)].imag();
    }
    return HYPRES_OK;
  });
}

}  // extern "C"
