#include "ergokit.h"

#include <cstring>
#include <string>

#include "ergokit/charging.hpp"
#include "ergokit/decay.hpp"
#include "ergokit/gaussian.hpp"
#include "ergokit/scenarios.hpp"
#include "ergokit/tls_battery.hpp"
#include "ergokit/version.hpp"

namespace {

thread_local std::string g_last_error;

ergokit_status map_code(ergokit::ErrorCode code) {
  using ergokit::ErrorCode;
  switch (code) {
    case ErrorCode::invalid_argument: return ERGOKIT_ERR_INVALID_ARGUMENT;
    case ErrorCode::dimension_mismatch: return ERGOKIT_ERR_DIMENSION_MISMATCH;
    case ErrorCode::domain: return ERGOKIT_ERR_DOMAIN;
    case ErrorCode::non_hermitian: return ERGOKIT_ERR_NON_HERMITIAN;
    case ErrorCode::out_of_family: return ERGOKIT_ERR_OUT_OF_FAMILY;
    case ErrorCode::singular_reference: return ERGOKIT_ERR_SINGULAR_REFERENCE;
    case ErrorCode::unphysical_covariance:
      return ERGOKIT_ERR_UNPHYSICAL_COVARIANCE;
    case ErrorCode::truncation_too_small: return ERGOKIT_ERR_TRUNCATION;
    case ErrorCode::no_bracket: return ERGOKIT_ERR_NO_BRACKET;
    case ErrorCode::numeric: return ERGOKIT_ERR_NUMERIC;
    case ErrorCode::bad_config: return ERGOKIT_ERR_BAD_CONFIG;
  }
  return ERGOKIT_ERR_NUMERIC;
}

template <typename F>
ergokit_status guarded(F&& body) {
  try {
    body();
    g_last_error.clear();
    return ERGOKIT_OK;
  } catch (const ergokit::Error& e) {
    g_last_error = e.what();
    return map_code(e.code());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return ERGOKIT_ERR_NUMERIC;
  }
}

ergokit_status require(bool ok, const char* message) {
  if (ok) return ERGOKIT_OK;
  g_last_error = message;
  return ERGOKIT_ERR_INVALID_ARGUMENT;
}

void write_matrix(const ergokit::Matrix& m, double* reim) {
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) {
      *reim++ = m(i, j).real();
      *reim++ = m(i, j).imag();
    }
}

char* copy_out(const std::string& s, size_t* len) {
  char* buf = new char[s.size() + 1];
  std::memcpy(buf, s.data(), s.size());
  buf[s.size()] = '\0';
  if (len) *len = s.size();
  return buf;
}

}  // namespace

struct ergokit_density {
  ergokit::DensityOperator value;
};

struct ergokit_tls {
  ergokit::TlsState value;
};

struct ergokit_gaussian {
  ergokit::GaussianState value;
};

extern "C" {

const char* ergokit_version(void) { return ergokit::kVersion; }

const char* ergokit_last_error(void) { return g_last_error.c_str(); }

int ergokit_status_class(ergokit_status status) {
  switch (status) {
    case ERGOKIT_OK:
      return 0;
    case ERGOKIT_ERR_TRUNCATION:
    case ERGOKIT_ERR_NO_BRACKET:
    case ERGOKIT_ERR_NUMERIC:
    case ERGOKIT_ERR_SELFTEST_FAILED:
      return 2;
    default:
      return 1;
  }
}

ergokit_status ergokit_density_create(int dim, const double* reim,
                                      ergokit_density** out) {
  if (ergokit_status s = require(reim && out && dim > 0, "null argument"))
    return s;
  return guarded([&] {
    ergokit::Matrix m(dim, dim);
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j) {
        const double re = reim[2 * (size_t(i) * dim + j)];
        const double im = reim[2 * (size_t(i) * dim + j) + 1];
        m(i, j) = ergokit::cplx(re, im);
      }
    *out = new ergokit_density{ergokit::DensityOperator(std::move(m))};
  });
}

void ergokit_density_free(ergokit_density* rho) { delete rho; }

int ergokit_density_dim(const ergokit_density* rho) {
  return rho ? rho->value.dim() : 0;
}

ergokit_status ergokit_density_get(const ergokit_density* rho, double* reim) {
  if (ergokit_status s = require(rho && reim, "null argument")) return s;
  write_matrix(rho->value.matrix(), reim);
  return ERGOKIT_OK;
}

namespace {

ergokit::HamiltonianSpec spec_from(const double* energies, int dim) {
  return ergokit::HamiltonianSpec(std::vector<double>(energies, energies + dim));
}

}  // namespace

ergokit_status ergokit_density_ergotropy(const ergokit_density* rho,
                                         const double* energies, double* out) {
  if (ergokit_status s = require(rho && energies && out, "null argument"))
    return s;
  return guarded([&] {
    *out = ergokit::ergotropy(rho->value, spec_from(energies, rho->value.dim()));
  });
}

ergokit_status ergokit_density_passive(const ergokit_density* rho,
                                       const double* energies,
                                       ergokit_density** out) {
  if (ergokit_status s = require(rho && energies && out, "null argument"))
    return s;
  return guarded([&] {
    *out = new ergokit_density{ergokit::passive_state(
        rho->value, spec_from(energies, rho->value.dim()))};
  });
}

ergokit_status ergokit_density_entropy_vn(const ergokit_density* rho,
                                          double* out) {
  if (ergokit_status s = require(rho && out, "null argument")) return s;
  return guarded([&] { *out = ergokit::von_neumann_entropy(rho->value); });
}

ergokit_status ergokit_density_purity(const ergokit_density* rho, double* out) {
  if (ergokit_status s = require(rho && out, "null argument")) return s;
  return guarded([&] { *out = ergokit::purity(rho->value); });
}

ergokit_status ergokit_density_partial_trace(const ergokit_density* rho,
                                             int dim_first, int dim_second,
                                             int keep_first,
                                             ergokit_density** out) {
  if (ergokit_status s = require(rho && out, "null argument")) return s;
  return guarded([&] {
    *out = new ergokit_density{ergokit::partial_trace(
        rho->value, {dim_first, dim_second},
        keep_first ? ergokit::Keep::first : ergokit::Keep::second)};
  });
}

ergokit_status ergokit_tls_create(double p, double coherence, double theta,
                                  double omega, ergokit_tls** out) {
  if (ergokit_status s = require(out != nullptr, "null argument")) return s;
  return guarded([&] {
    *out = new ergokit_tls{ergokit::TlsState(p, coherence, theta, omega)};
  });
}

void ergokit_tls_free(ergokit_tls* s) { delete s; }

ergokit_status ergokit_tls_params(const ergokit_tls* s, double* p,
                                  double* coherence, double* theta,
                                  double* omega) {
  if (ergokit_status st = require(s != nullptr, "null argument")) return st;
  if (p) *p = s->value.p;
  if (coherence) *coherence = s->value.coherence;
  if (theta) *theta = s->value.theta;
  if (omega) *omega = s->value.omega;
  return ERGOKIT_OK;
}

ergokit_status ergokit_tls_density(const ergokit_tls* s, double* reim) {
  if (ergokit_status st = require(s && reim, "null argument")) return st;
  return guarded([&] { write_matrix(s->value.to_density().matrix(), reim); });
}

ergokit_status ergokit_tls_ergotropy(const ergokit_tls* s, double* total,
                                     double* incoherent, double* coherent) {
  if (ergokit_status st = require(s != nullptr, "null argument")) return st;
  return guarded([&] {
    const ergokit::ErgotropyBreakdown b = ergokit::tls_breakdown(s->value);
    if (total) *total = b.total;
    if (incoherent) *incoherent = b.component("incoherent");
    if (coherent) *coherent = b.component("coherent");
  });
}

ergokit_status ergokit_tls_family_coherence(double p_bar, double p,
                                            double* out) {
  if (ergokit_status st = require(out != nullptr, "null argument")) return st;
  return guarded([&] {
    *out = ergokit::iso_coherence(ergokit::IsoFamilyTls(p_bar, 1.0), p);
  });
}

ergokit_status ergokit_tls_family_member(double p_bar, double p, double theta,
                                         double omega, ergokit_tls** out) {
  if (ergokit_status st = require(out != nullptr, "null argument")) return st;
  return guarded([&] {
    *out = new ergokit_tls{ergokit::family_member(
        ergokit::IsoFamilyTls(p_bar, omega), p, theta)};
  });
}

ergokit_status ergokit_tls_channel_apply(double p_bar, double p_target,
                                         double theta_target, double omega,
                                         const ergokit_tls* in,
                                         ergokit_tls** out) {
  if (ergokit_status st = require(in && out, "null argument")) return st;
  return guarded([&] {
    const ergokit::IsoFamilyTls family(p_bar, omega);
    const ergokit::KrausSet k =
        ergokit::gadc_kraus(family, p_target, theta_target);
    const ergokit::DensityOperator rho =
        ergokit::apply_channel(k, in->value.to_density());
    *out = new ergokit_tls{ergokit::TlsState::from_density(rho, omega)};
  });
}

ergokit_status ergokit_tls_channel_kraus(double p_bar, double p_target,
                                         double theta_target, double omega,
                                         double* reim) {
  if (ergokit_status st = require(reim != nullptr, "null argument")) return st;
  return guarded([&] {
    const ergokit::KrausSet k = ergokit::gadc_kraus(
        ergokit::IsoFamilyTls(p_bar, omega), p_target, theta_target);
    for (size_t i = 0; i < k.operators.size(); ++i)
      write_matrix(k.operators[i], reim + 8 * i);
  });
}

ergokit_status ergokit_tls_measurement_qmax(double p_bar, double p_target,
                                            double theta_target, double omega,
                                            double* q_max) {
  if (ergokit_status st = require(q_max != nullptr, "null argument")) return st;
  return guarded([&] {
    *q_max = ergokit::general_measurement_qmax(
                 ergokit::IsoFamilyTls(p_bar, omega), p_target, theta_target)
                 .q_max;
  });
}

ergokit_status ergokit_tls_decay(double p0, double coherence0, double gamma,
                                 double n_bar, double t, double* p_t,
                                 double* coherence_t) {
  return guarded([&] {
    const ergokit::TlsState s0(p0, coherence0, 0.0, 1.0);
    const ergokit::TlsState s =
        ergokit::tls_decay(s0, ergokit::BathSpec(gamma, n_bar), t);
    if (p_t) *p_t = s.p;
    if (coherence_t) *coherence_t = s.coherence;
  });
}

ergokit_status ergokit_tls_half_life(double p_bar, double p, double omega,
                                     double gamma, double n_bar, double* out) {
  if (ergokit_status st = require(out != nullptr, "null argument")) return st;
  return guarded([&] {
    *out = ergokit::tls_family_half_life(ergokit::IsoFamilyTls(p_bar, omega),
                                         p, ergokit::BathSpec(gamma, n_bar));
  });
}

ergokit_status ergokit_gaussian_create(double mu_re, double mu_im,
                                       double xi_mag, double phi,
                                       double occupation, double omega,
                                       ergokit_gaussian** out) {
  if (ergokit_status st = require(out != nullptr, "null argument")) return st;
  return guarded([&] {
    *out = new ergokit_gaussian{ergokit::GaussianState(
        ergokit::cplx(mu_re, mu_im), xi_mag, phi, occupation, omega)};
  });
}

void ergokit_gaussian_free(ergokit_gaussian* s) { delete s; }

ergokit_status ergokit_gaussian_params(const ergokit_gaussian* s,
                                       double* mu_re, double* mu_im,
                                       double* xi_mag, double* phi,
                                       double* occupation, double* omega) {
  if (ergokit_status st = require(s != nullptr, "null argument")) return st;
  if (mu_re) *mu_re = s->value.mu.real();
  if (mu_im) *mu_im = s->value.mu.imag();
  if (xi_mag) *xi_mag = s->value.xi_mag;
  if (phi) *phi = s->value.phi;
  if (occupation) *occupation = s->value.occupation;
  if (omega) *omega = s->value.omega;
  return ERGOKIT_OK;
}

ergokit_status ergokit_gaussian_ergotropy(const ergokit_gaussian* s,
                                          double* total, double* displacement,
                                          double* squeezing) {
  if (ergokit_status st = require(s != nullptr, "null argument")) return st;
  return guarded([&] {
    const ergokit::ErgotropyBreakdown b = ergokit::gaussian_breakdown(s->value);
    if (total) *total = b.total;
    if (displacement) *displacement = b.component("displacement");
    if (squeezing) *squeezing = b.component("squeezing");
  });
}

ergokit_status ergokit_gaussian_moments(const ergokit_gaussian* s,
                                        double* d_reim, double* theta_reim) {
  if (ergokit_status st = require(s && d_reim && theta_reim, "null argument"))
    return st;
  return guarded([&] {
    const ergokit::MomentForm m = ergokit::to_moments(s->value);
    write_matrix(m.d, d_reim);
    write_matrix(m.theta, theta_reim);
  });
}

ergokit_status ergokit_gaussian_family_displacement(double mu_bar_sq,
                                                    double xi_mag,
                                                    double occupation,
                                                    double* mu_abs) {
  if (ergokit_status st = require(mu_abs != nullptr, "null argument"))
    return st;
  return guarded([&] {
    *mu_abs = ergokit::iso_displacement(
        ergokit::IsoFamilyGaussian(mu_bar_sq, 1.0), xi_mag, occupation);
  });
}

ergokit_status ergokit_gaussian_attenuate(const ergokit_gaussian* s,
                                          double transmissivity, double n_env,
                                          ergokit_gaussian** out) {
  if (ergokit_status st = require(s && out, "null argument")) return st;
  return guarded([&] {
    *out = new ergokit_gaussian{
        ergokit::attenuator_channel(s->value, transmissivity, n_env)};
  });
}

ergokit_status ergokit_gaussian_wigner(const ergokit_gaussian* s,
                                       double alpha_re, double alpha_im,
                                       double* out) {
  if (ergokit_status st = require(s && out, "null argument")) return st;
  return guarded([&] {
    *out = ergokit::wigner(s->value, ergokit::cplx(alpha_re, alpha_im));
  });
}

ergokit_status ergokit_gaussian_decay(const ergokit_gaussian* s, double gamma,
                                      double n_bar, double t,
                                      ergokit_gaussian** out) {
  if (ergokit_status st = require(s && out, "null argument")) return st;
  return guarded([&] {
    *out = new ergokit_gaussian{
        ergokit::gaussian_decay(s->value, ergokit::BathSpec(gamma, n_bar), t)};
  });
}

ergokit_status ergokit_gaussian_half_life(double mu_bar_sq, double xi_mag,
                                          double occupation, double omega,
                                          double gamma, double n_bar,
                                          double* out) {
  if (ergokit_status st = require(out != nullptr, "null argument")) return st;
  return guarded([&] {
    *out = ergokit::gaussian_family_half_life(
        ergokit::IsoFamilyGaussian(mu_bar_sq, omega), xi_mag, occupation,
        ergokit::BathSpec(gamma, n_bar));
  });
}

ergokit_status ergokit_charging_alpha(double* alpha) {
  if (ergokit_status st = require(alpha != nullptr, "null argument")) return st;
  return guarded([&] { *alpha = ergokit::solve_alpha_T(); });
}

ergokit_status ergokit_charging_cone(double s0, double* p_bar, double* p,
                                     double* s_bar) {
  return guarded([&] {
    const ergokit::ConeIntersection c = ergokit::cone_intersection(s0);
    if (p_bar) *p_bar = c.p_bar;
    if (p) *p = c.p;
    if (s_bar) *s_bar = c.s_bar;
  });
}

ergokit_status ergokit_scenario_run(const char* config_json, char** bytes,
                                    size_t* len) {
  if (ergokit_status st = require(config_json && bytes, "null argument"))
    return st;
  return guarded([&] {
    *bytes = copy_out(ergokit::run_scenario_bytes(config_json), len);
  });
}

ergokit_status ergokit_selftest(const char* mutate, unsigned long long seed,
                                char** report, size_t* len) {
  if (ergokit_status st = require(report != nullptr, "null argument"))
    return st;
  *report = nullptr;
  bool passed = false;
  const ergokit_status run = guarded([&] {
    const ergokit::SelftestResult res =
        ergokit::run_selftest(mutate ? mutate : "", seed);
    passed = res.all_passed();
    *report = copy_out(res.report(), len);
  });
  if (run != ERGOKIT_OK) return run;
  if (!passed) {
    g_last_error = "selftest failed";
    return ERGOKIT_ERR_SELFTEST_FAILED;
  }
  return ERGOKIT_OK;
}

void ergokit_buffer_free(char* bytes) { delete[] bytes; }

}  // extern "C"
