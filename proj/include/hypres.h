/* Scattering resonances of obstacles in hyperbolic space: C interface.
 *
 * All functions return a status code; on failure hypres_last_error() holds a
 * thread-local message.  Objects returned through ** out-parameters are owned
 * by the caller and released with the matching _destroy function.
 * Complex numbers pass as (re, im) pairs of doubles.
 */
#ifndef HYPRES_H
#define HYPRES_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum hypres_status {
  HYPRES_OK = 0,
  HYPRES_ERR_INVALID_ARGUMENT = 1,
  HYPRES_ERR_DOMAIN = 2,
  HYPRES_ERR_NO_CONVERGENCE = 3,
  HYPRES_ERR_INTERNAL = 4
} hypres_status;

typedef struct hypres_model hypres_model;
typedef struct hypres_resonances hypres_resonances;
typedef struct hypres_surface hypres_surface;

const char* hypres_version(void);
const char* hypres_last_error(void);

/* ---- model ---- */

/* kappa >= 0 (0 selects the Euclidean limit), dim >= 2. */
hypres_status hypres_model_create(double kappa, int dim, hypres_model** out);
void hypres_model_destroy(hypres_model* m);

/* ---- geometry ---- */

hypres_status hypres_warp(const hypres_model* m, double r, double* out);
/* omega1/omega2: unit direction vectors of length dim. */
hypres_status hypres_geodesic_distance(const hypres_model* m, double r1,
                                       const double* omega1, double r2,
                                       const double* omega2, int dim,
                                       double* out);
hypres_status hypres_harmonic_dimension(int n, int ell, long long* out);
/* grad2 = squared round-sphere gradient of the boundary radius function. */
hypres_status hypres_surface_measure_density(const hypres_model* m, double f,
                                             double grad2, double* out);

/* ---- resonance lists ---- */

int hypres_resonances_count(const hypres_resonances* r);
hypres_status hypres_resonances_get(const hypres_resonances* r, int idx,
                                    double* re, double* im, int* ell,
                                    long long* mult, double* residual);
/* 1 when the producing search certified completeness inside its region. */
int hypres_resonances_complete(const hypres_resonances* r);
int hypres_resonances_warning_count(const hypres_resonances* r);
const char* hypres_resonances_warning(const hypres_resonances* r, int idx);
/* Candidates discarded by the integer-lattice filter of the series search. */
int hypres_resonances_rejected_count(const hypres_resonances* r);
hypres_status hypres_resonances_rejected_get(const hypres_resonances* r,
                                             int idx, double* re, double* im);
void hypres_resonances_destroy(hypres_resonances* r);

/* ---- exact polynomial method, odd dimensions ---- */

/* Coefficients (ascending, real) of the degree k-1 outgoing polynomial in
 * beta = i sigma / kappa.  *len carries capacity in, the count k out. */
hypres_status hypres_outgoing_polynomial(const hypres_model* m, int k,
                                         double radius, double* coeffs,
                                         int* len);
hypres_status hypres_evaluate_outgoing(const hypres_model* m, int k, double r,
                                       double sigma_re, double sigma_im,
                                       double* out_re, double* out_im);
hypres_status hypres_ball_resonances_odd(const hypres_model* m, int ell,
                                         double radius,
                                         hypres_resonances** out);

/* ---- radial series, any dimension >= 2 ---- */

hypres_status hypres_series_coefficients(double c, int terms, double* out);
hypres_status hypres_evaluate_outgoing_general(const hypres_model* m, double c,
                                               double x0, double sigma_re,
                                               double sigma_im, double* out_re,
                                               double* out_im);
hypres_status hypres_ball_resonances_general(const hypres_model* m, int ell,
                                             double radius, double re_min,
                                             double re_max, double im_min,
                                             double im_max,
                                             hypres_resonances** out);

/* ---- Euclidean reference ---- */

hypres_status hypres_euclid_ball_resonances(int n, int ell, double radius,
                                            hypres_resonances** out);
hypres_status hypres_check_ralston(const hypres_resonances* r, double rho,
                                   int* ok, double* min_abs_im, double* bound);

/* ---- width bounds ---- */

hypres_status hypres_p_decay(double kappa, double rho, double t, double* out);
hypres_status hypres_alpha_generic(double kappa, double rho, double* value,
                                   int* at_infinity);
hypres_status hypres_a_profile(double rho_tilde, double* value,
                               int* at_infinity);
hypres_status hypres_improvement_threshold(double* out);
hypres_status hypres_marklof_ratio(const hypres_model* m, double rho,
                                   double* out);
hypres_status hypres_verify_width_bounds(const hypres_resonances* r,
                                         const hypres_model* m, double rho,
                                         int n_odd, int* ok,
                                         double* min_abs_im, double* margin);

/* ---- boundary integral method (dim 3) ---- */

/* spec_text: '#' comments; first data token is the base radius, then lines
 * "l m coeff" adding real orthonormal spherical harmonics. */
hypres_status hypres_surface_create(const hypres_model* m,
                                    const char* spec_text, int ntheta,
                                    int nphi, hypres_surface** out);
void hypres_surface_destroy(hypres_surface* s);
hypres_status hypres_surface_node_count(const hypres_surface* s, int* out);
hypres_status hypres_surface_area(const hypres_surface* s, double* out);

hypres_status hypres_free_kernel(const hypres_model* m, double lambda_re,
                                 double lambda_im, double d, double* out_re,
                                 double* out_im);
hypres_status hypres_ball_mode_symbol(const hypres_model* m, double radius,
                                      int ell, double lambda_re,
                                      double lambda_im, double* out_re,
                                      double* out_im);

/* Contour-integral resonance search over the ellipse inscribed in the box. */
hypres_status hypres_bem_resonances(const hypres_surface* s, double re_min,
                                    double re_max, double im_min,
                                    double im_max, int probes,
                                    unsigned long long seed,
                                    hypres_resonances** out);
hypres_status hypres_multiplicity_winding(const hypres_surface* s,
                                          double re_min, double re_max,
                                          double im_min, double im_max,
                                          int nodes, double* out);

/* boundary_data: node count (re, im) pairs; points: n_points rows of
 * (r, x, y, z); values: n_points (re, im) pairs.  combined selects the
 * second-kind operator instead of the single-layer equation. */
hypres_status hypres_solve_exterior_dirichlet(const hypres_surface* s,
                                              double lambda_re,
                                              double lambda_im,
                                              const double* boundary_data,
                                              const double* points,
                                              int n_points, int combined,
                                              double* values);

#ifdef __cplusplus
}
#endif

#endif /* HYPRES_H */
