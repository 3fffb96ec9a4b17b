#pragma once

#include <vector>

#include "ergokit/tls_battery.hpp"

namespace ergokit {

// Two resonant TLSs coupled by the excitation-conserving interaction
// i eta (sigma+_B sigma-_A - sigma-_B sigma+_A). Basis order is
// |gg>, |ge>, |eg>, |ee> with index = 2 q_B + q_A (g = 0, e = 1); the
// battery is the first tensor factor.
struct TwoTlsConfig {
  double omega;
  double eta;
  IsoFamilyTls family;
  double theta_B = 0.0;  // battery starts at the pure family endpoint
  double phi_A = 0.0;    // auxiliary starts at the incoherent reference

  TwoTlsConfig(double omega, double eta, IsoFamilyTls family,
               double theta_B = 0.0, double phi_A = 0.0);
};

// H_A + H_B in the joint basis (interaction excluded).
Matrix two_tls_free_hamiltonian(double omega);
HamiltonianSpec two_tls_free_spec(double omega);

// Interaction V_AB in the joint basis.
Matrix two_tls_interaction(double eta);

// Closed-form joint propagator exp(-i (H_free + V) t).
Matrix propagator(const TwoTlsConfig& cfg, double t);

struct TwoTlsSnapshot {
  DensityOperator joint;
  DensityOperator reduced_B;
  DensityOperator reduced_A;
};

DensityOperator two_tls_initial_state(const TwoTlsConfig& cfg);
TwoTlsSnapshot evolve(const TwoTlsConfig& cfg, double t);

// Battery population closed form:
// p_B(t) = [(p_bar - 1) cos(2 eta t) + p_bar + P] / 2.
double closed_form_battery_population(const TwoTlsConfig& cfg, double t);

// Full closed-form reduced battery state: population p_B(t), coherence
// C(0) cos(eta t), phase theta_B + 2 omega t. The sign of cos(eta t) folds
// into the phase, keeping the stored coherence nonnegative.
TlsState closed_form_battery_state(const TwoTlsConfig& cfg, double t);

struct TwoTlsMetrics {
  double t;
  double p_B;
  double R_B, R_B_inc, R_B_coh;
  double R_A, R_A_inc, R_A_coh;
  double R_total;          // w.r.t. H_A + H_B
  double S_B, S_A, S_BA;   // von Neumann
  double mutual_information;
};

std::vector<TwoTlsMetrics> trajectory_metrics(const TwoTlsConfig& cfg,
                                              const std::vector<double>& times);

std::vector<double> uniform_grid(double t0, double t1, int samples);

}  // namespace ergokit
