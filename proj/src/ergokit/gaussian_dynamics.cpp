#include "ergokit/gaussian_dynamics.hpp"

#include <cmath>
#include <numbers>

#include "ergokit/spectral.hpp"

namespace ergokit {

TwoModeConfig::TwoModeConfig(double omega, double eta, IsoFamilyGaussian family,
                             double xi_mag, double phi, double N_B0,
                             double N_A0, double theta_B)
    : omega(omega),
      eta(eta),
      family(family),
      xi_mag(xi_mag),
      phi(phi),
      N_B0(N_B0),
      N_A0(N_A0),
      theta_B(theta_B) {
  if (eta <= 0.0) throw DomainError("coupling strength must be positive");
  // The closed-form trajectory assumes both modes start on the family.
  if (family_budget(family, xi_mag, N_B0) < -1e-12 ||
      family_budget(family, xi_mag, N_A0) < -1e-12)
    throw OutOfFamilyRange("an initial mode falls off the family (f < 0)");
}

double TwoModeConfig::theta_A() const {
  return theta_B + 0.5 * std::numbers::pi;
}

Matrix drift_matrix(double omega, double eta) {
  const cplx iw(0.0, omega);
  Matrix w(4, 4);
  w(0, 0) = -iw;
  w(1, 1) = iw;
  w(2, 2) = -iw;
  w(3, 3) = iw;
  w(0, 2) = eta;
  w(1, 3) = eta;
  w(2, 0) = -eta;
  w(3, 1) = -eta;
  return w;
}

JointMoments initial_moments(const TwoModeConfig& cfg) {
  const GaussianState b = gaussian_family_member(cfg.family, cfg.xi_mag,
                                                 cfg.phi, cfg.N_B0, cfg.theta_B);
  const GaussianState a = gaussian_family_member(cfg.family, cfg.xi_mag,
                                                 cfg.phi, cfg.N_A0,
                                                 cfg.theta_A());
  const MomentForm mb = to_moments(b);
  const MomentForm ma = to_moments(a);
  JointMoments jm;
  jm.D = Matrix(4, 1, {mb.d(0, 0), mb.d(1, 0), ma.d(0, 0), ma.d(1, 0)});
  jm.Xi = Matrix(4, 4);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      jm.Xi(i, j) = mb.theta(i, j);
      jm.Xi(2 + i, 2 + j) = ma.theta(i, j);
    }
  return jm;
}

Matrix beam_splitter_propagator(double omega, double eta, double t) {
  const double c = std::cos(eta * t);
  const double s = std::sin(eta * t);
  const cplx ph = std::polar(1.0, -omega * t);
  Matrix l(4, 4);
  l(0, 0) = ph * c;
  l(0, 2) = ph * s;
  l(2, 0) = ph * (-s);
  l(2, 2) = ph * c;
  l(1, 1) = std::conj(ph) * c;
  l(1, 3) = std::conj(ph) * s;
  l(3, 1) = std::conj(ph) * (-s);
  l(3, 3) = std::conj(ph) * c;
  return l;
}

namespace {

JointMoments apply_propagator(const TwoModeConfig& cfg, const Matrix& lambda) {
  const JointMoments init = initial_moments(cfg);
  JointMoments out;
  out.D = lambda * init.D;
  out.Xi = lambda * init.Xi * lambda.adjoint();
  return out;
}

}  // namespace

JointMoments propagate(const TwoModeConfig& cfg, double t) {
  return apply_propagator(cfg,
                          beam_splitter_propagator(cfg.omega, cfg.eta, t));
}

JointMoments propagate_expm(const TwoModeConfig& cfg, double t) {
  return apply_propagator(
      cfg, matrix_exponential(drift_matrix(cfg.omega, cfg.eta) * cplx(t)));
}

double multimode_renyi2(const Matrix& xi_cov) {
  const int modes = xi_cov.rows() / 2;
  const double det = std::real(determinant(xi_cov));
  return 0.5 * std::log(std::pow(4.0, modes) * det);
}

std::vector<TwoModeSample> mode_trajectory(const TwoModeConfig& cfg,
                                           const std::vector<double>& times) {
  std::vector<TwoModeSample> out;
  out.reserve(times.size());
  for (double t : times) {
    const JointMoments jm = propagate(cfg, t);
    MomentForm mb, ma;
    mb.d = Matrix(2, 1, {jm.D(0, 0), jm.D(1, 0)});
    ma.d = Matrix(2, 1, {jm.D(2, 0), jm.D(3, 0)});
    mb.theta = Matrix(2, 2, {jm.Xi(0, 0), jm.Xi(0, 1), jm.Xi(1, 0), jm.Xi(1, 1)});
    ma.theta = Matrix(2, 2, {jm.Xi(2, 2), jm.Xi(2, 3), jm.Xi(3, 2), jm.Xi(3, 3)});
    const GaussianState b = from_moments(mb, cfg.omega);
    const GaussianState a = from_moments(ma, cfg.omega);
    const ErgotropyBreakdown eb = gaussian_breakdown(b);
    const ErgotropyBreakdown ea = gaussian_breakdown(a);
    TwoModeSample s{t,
                    b,
                    a,
                    eb.total,
                    eb.component("displacement"),
                    eb.component("squeezing"),
                    ea.total,
                    ea.component("displacement"),
                    ea.component("squeezing"),
                    multimode_renyi2(mb.theta),
                    multimode_renyi2(ma.theta),
                    multimode_renyi2(jm.Xi),
                    0.0};
    s.mutual_information_2 = s.S2_B + s.S2_A - s.S2_BA;
    out.push_back(s);
  }
  return out;
}

double closed_form_occupation(const TwoModeConfig& cfg, bool battery,
                              double t) {
  const double own = battery ? cfg.N_B0 : cfg.N_A0;
  const double other = battery ? cfg.N_A0 : cfg.N_B0;
  return 0.5 * (own - other) * std::cos(2.0 * cfg.eta * t) +
         0.5 * (cfg.N_A0 + cfg.N_B0);
}

}  // namespace ergokit
