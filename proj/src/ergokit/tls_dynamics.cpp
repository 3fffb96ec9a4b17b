#include "ergokit/tls_dynamics.hpp"

#include <cmath>

namespace ergokit {

TwoTlsConfig::TwoTlsConfig(double omega, double eta, IsoFamilyTls family,
                           double theta_B, double phi_A)
    : omega(omega), eta(eta), family(family), theta_B(theta_B), phi_A(phi_A) {
  if (eta <= 0.0) throw DomainError("coupling strength must be positive");
}

Matrix two_tls_free_hamiltonian(double omega) {
  return Matrix::diagonal(std::vector<double>{0.0, omega, omega, 2.0 * omega});
}

HamiltonianSpec two_tls_free_spec(double omega) {
  return HamiltonianSpec({0.0, omega, omega, 2.0 * omega});
}

Matrix two_tls_interaction(double eta) {
  Matrix v(4, 4);
  v(2, 1) = cplx(0.0, eta);   // |eg><ge|
  v(1, 2) = cplx(0.0, -eta);  // -|ge><eg|
  return v;
}

Matrix propagator(const TwoTlsConfig& cfg, double t) {
  // exp(-i H0 t) times the rotation generated by V in the degenerate
  // single-excitation block; the sin signs are fixed by the closed-form
  // battery population, not taken on faith from any printed ordering.
  const double c = std::cos(cfg.eta * t);
  const double s = std::sin(cfg.eta * t);
  const cplx ph = std::polar(1.0, -cfg.omega * t);
  Matrix u(4, 4);
  u(0, 0) = 1.0;
  u(1, 1) = ph * c;
  u(1, 2) = ph * (-s);
  u(2, 1) = ph * s;
  u(2, 2) = ph * c;
  u(3, 3) = ph * ph;
  return u;
}

DensityOperator two_tls_initial_state(const TwoTlsConfig& cfg) {
  const TlsState battery = family_member(
      cfg.family, cfg.family.floor_population(), cfg.theta_B);
  const TlsState aux = family_member(cfg.family, cfg.family.p_bar, cfg.phi_A);
  return DensityOperator(
      kron(battery.to_density().matrix(), aux.to_density().matrix()),
      Validate::basic);
}

TwoTlsSnapshot evolve(const TwoTlsConfig& cfg, double t) {
  const Matrix u = propagator(cfg, t);
  const DensityOperator joint(
      u * two_tls_initial_state(cfg).matrix() * u.adjoint(), Validate::basic);
  DensityOperator b = partial_trace(joint, {2, 2}, Keep::first);
  DensityOperator a = partial_trace(joint, {2, 2}, Keep::second);
  return {joint, std::move(b), std::move(a)};
}

double closed_form_battery_population(const TwoTlsConfig& cfg, double t) {
  const double pb = cfg.family.p_bar;
  return 0.5 * ((pb - 1.0) * std::cos(2.0 * cfg.eta * t) + pb +
                cfg.family.floor_population());
}

TlsState closed_form_battery_state(const TwoTlsConfig& cfg, double t) {
  const double p_b = closed_form_battery_population(cfg, t);
  const double c0 = iso_coherence(cfg.family, cfg.family.floor_population());
  const cplx off = 0.5 * c0 * std::cos(cfg.eta * t) *
                   std::polar(1.0, 0.5 * (cfg.theta_B + 2.0 * cfg.omega * t));
  Matrix m(2, 2, {1.0 - p_b, off, std::conj(off), p_b});
  return TlsState::from_density(DensityOperator(std::move(m), Validate::basic),
                                cfg.omega);
}

std::vector<TwoTlsMetrics> trajectory_metrics(
    const TwoTlsConfig& cfg, const std::vector<double>& times) {
  const HamiltonianSpec joint_h = two_tls_free_spec(cfg.omega);
  std::vector<TwoTlsMetrics> out;
  out.reserve(times.size());
  for (double t : times) {
    const TwoTlsSnapshot snap = evolve(cfg, t);
    const TlsState b = TlsState::from_density(snap.reduced_B, cfg.omega);
    const TlsState a = TlsState::from_density(snap.reduced_A, cfg.omega);
    const ErgotropyBreakdown rb = tls_breakdown(b);
    const ErgotropyBreakdown ra = tls_breakdown(a);
    TwoTlsMetrics m{};
    m.t = t;
    m.p_B = b.p;
    m.R_B = rb.total;
    m.R_B_inc = rb.component("incoherent");
    m.R_B_coh = rb.component("coherent");
    m.R_A = ra.total;
    m.R_A_inc = ra.component("incoherent");
    m.R_A_coh = ra.component("coherent");
    m.R_total = ergotropy(snap.joint, joint_h);
    m.S_B = von_neumann_entropy(snap.reduced_B);
    m.S_A = von_neumann_entropy(snap.reduced_A);
    m.S_BA = von_neumann_entropy(snap.joint);
    m.mutual_information = m.S_B + m.S_A - m.S_BA;
    out.push_back(m);
  }
  return out;
}

std::vector<double> uniform_grid(double t0, double t1, int samples) {
  if (samples < 2) throw DomainError("grid needs at least two samples");
  std::vector<double> t(samples);
  const double dt = (t1 - t0) / (samples - 1);
  for (int k = 0; k < samples; ++k) t[k] = t0 + dt * k;
  t.back() = t1;
  return t;
}

}  // namespace ergokit
