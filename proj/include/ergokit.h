/* ergokit — quantum-battery ergotropy toolkit, C interface.
 *
 * The shared library wraps the C++ core behind opaque handles and status
 * codes. All functions returning ergokit_status leave their outputs
 * untouched on failure; ergokit_last_error() describes the most recent
 * failure on the calling thread. Complex data crosses the boundary as
 * interleaved (re, im) doubles, row-major for matrices.
 */
#ifndef ERGOKIT_H
#define ERGOKIT_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ergokit_status {
  ERGOKIT_OK = 0,
  ERGOKIT_ERR_INVALID_ARGUMENT = 1,
  ERGOKIT_ERR_DIMENSION_MISMATCH = 2,
  ERGOKIT_ERR_DOMAIN = 3,
  ERGOKIT_ERR_NON_HERMITIAN = 4,
  ERGOKIT_ERR_OUT_OF_FAMILY = 5,
  ERGOKIT_ERR_SINGULAR_REFERENCE = 6,
  ERGOKIT_ERR_UNPHYSICAL_COVARIANCE = 7,
  ERGOKIT_ERR_TRUNCATION = 8,
  ERGOKIT_ERR_NO_BRACKET = 9,
  ERGOKIT_ERR_NUMERIC = 10,
  ERGOKIT_ERR_BAD_CONFIG = 11,
  ERGOKIT_ERR_SELFTEST_FAILED = 12
} ergokit_status;

const char* ergokit_version(void);

/* Message for the last failing call on this thread; empty string if none. */
const char* ergokit_last_error(void);

/* 1 for configuration/validation problems (CLI exit 2), 2 for numeric
 * failures (CLI exit 3), 0 for ERGOKIT_OK. */
int ergokit_status_class(ergokit_status status);

/* ---- finite-dimensional density operators ---- */

typedef struct ergokit_density ergokit_density;

ergokit_status ergokit_density_create(int dim, const double* reim,
                                      ergokit_density** out);
void ergokit_density_free(ergokit_density* rho);
int ergokit_density_dim(const ergokit_density* rho);
ergokit_status ergokit_density_get(const ergokit_density* rho, double* reim);

/* energies: ascending array of length dim (diagonal Hamiltonian). */
ergokit_status ergokit_density_ergotropy(const ergokit_density* rho,
                                         const double* energies, double* out);
ergokit_status ergokit_density_passive(const ergokit_density* rho,
                                       const double* energies,
                                       ergokit_density** out);
ergokit_status ergokit_density_entropy_vn(const ergokit_density* rho,
                                          double* out);
ergokit_status ergokit_density_purity(const ergokit_density* rho, double* out);
ergokit_status ergokit_density_partial_trace(const ergokit_density* rho,
                                             int dim_first, int dim_second,
                                             int keep_first,
                                             ergokit_density** out);

/* ---- two-level battery ---- */

typedef struct ergokit_tls ergokit_tls;

ergokit_status ergokit_tls_create(double p, double coherence, double theta,
                                  double omega, ergokit_tls** out);
void ergokit_tls_free(ergokit_tls* s);
ergokit_status ergokit_tls_params(const ergokit_tls* s, double* p,
                                  double* coherence, double* theta,
                                  double* omega);
/* reim: 8 doubles, the 2x2 state row-major. */
ergokit_status ergokit_tls_density(const ergokit_tls* s, double* reim);
ergokit_status ergokit_tls_ergotropy(const ergokit_tls* s, double* total,
                                     double* incoherent, double* coherent);

ergokit_status ergokit_tls_family_coherence(double p_bar, double p,
                                            double* out);
ergokit_status ergokit_tls_family_member(double p_bar, double p, double theta,
                                         double omega, ergokit_tls** out);

/* Replaces the input with the family member at (p_target, theta_target). */
ergokit_status ergokit_tls_channel_apply(double p_bar, double p_target,
                                         double theta_target, double omega,
                                         const ergokit_tls* in,
                                         ergokit_tls** out);
/* reim: 32 doubles, four 2x2 Kraus operators in order. */
ergokit_status ergokit_tls_channel_kraus(double p_bar, double p_target,
                                         double theta_target, double omega,
                                         double* reim);
ergokit_status ergokit_tls_measurement_qmax(double p_bar, double p_target,
                                            double theta_target, double omega,
                                            double* q_max);

ergokit_status ergokit_tls_decay(double p0, double coherence0, double gamma,
                                 double n_bar, double t, double* p_t,
                                 double* coherence_t);
ergokit_status ergokit_tls_half_life(double p_bar, double p, double omega,
                                     double gamma, double n_bar, double* out);

/* ---- single-mode Gaussian battery ---- */

typedef struct ergokit_gaussian ergokit_gaussian;

ergokit_status ergokit_gaussian_create(double mu_re, double mu_im,
                                       double xi_mag, double phi,
                                       double occupation, double omega,
                                       ergokit_gaussian** out);
void ergokit_gaussian_free(ergokit_gaussian* s);
ergokit_status ergokit_gaussian_params(const ergokit_gaussian* s,
                                       double* mu_re, double* mu_im,
                                       double* xi_mag, double* phi,
                                       double* occupation, double* omega);
ergokit_status ergokit_gaussian_ergotropy(const ergokit_gaussian* s,
                                          double* total, double* displacement,
                                          double* squeezing);
/* d_reim: 4 doubles; theta_reim: 8 doubles, row-major 2x2. */
ergokit_status ergokit_gaussian_moments(const ergokit_gaussian* s,
                                        double* d_reim, double* theta_reim);
ergokit_status ergokit_gaussian_family_displacement(double mu_bar_sq,
                                                    double xi_mag,
                                                    double occupation,
                                                    double* mu_abs);
ergokit_status ergokit_gaussian_attenuate(const ergokit_gaussian* s,
                                          double transmissivity, double n_env,
                                          ergokit_gaussian** out);
ergokit_status ergokit_gaussian_wigner(const ergokit_gaussian* s,
                                       double alpha_re, double alpha_im,
                                       double* out);
ergokit_status ergokit_gaussian_decay(const ergokit_gaussian* s, double gamma,
                                      double n_bar, double t,
                                      ergokit_gaussian** out);
ergokit_status ergokit_gaussian_half_life(double mu_bar_sq, double xi_mag,
                                          double occupation, double omega,
                                          double gamma, double n_bar,
                                          double* out);

/* ---- charging protocol ---- */

/* Optimal drive angle: the root of cos x + x sin x = 1 near 0.74 pi. */
ergokit_status ergokit_charging_alpha(double* alpha);
ergokit_status ergokit_charging_cone(double s0, double* p_bar, double* p,
                                     double* s_bar);

/* ---- scenario engine ---- */

/* config_json: {"scenario": "...", "format": "csv"|"json", "params": {...}}.
 * On success *bytes is a NUL-terminated buffer of *len bytes owned by the
 * caller; release it with ergokit_buffer_free. Identical configs produce
 * identical bytes. */
ergokit_status ergokit_scenario_run(const char* config_json, char** bytes,
                                    size_t* len);

/* Oracle-equivalence suites; report is one line per suite. mutate may be
 * NULL, or a suite name whose reference value is skewed to force a failure.
 * Returns ERGOKIT_ERR_SELFTEST_FAILED when any suite fails. */
ergokit_status ergokit_selftest(const char* mutate, unsigned long long seed,
                                char** report, size_t* len);

void ergokit_buffer_free(char* bytes);

#ifdef __cplusplus
}
#endif

#endif /* ERGOKIT_H */
