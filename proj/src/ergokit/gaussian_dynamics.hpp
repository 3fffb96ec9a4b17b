#pragma once

#include <vector>

#include "ergokit/gaussian.hpp"

namespace ergokit {

// Two resonant modes under the beam-splitter interaction
// i eta (b† a - b a†); joint moments ordered (mu_B, mu_B*, mu_A, mu_A*).
// Both modes start on the same isoergotropic family with shared squeezing
// and auxiliary displacement phase theta_A = theta_B + pi/2.
struct TwoModeConfig {
  double omega;
  double eta;
  IsoFamilyGaussian family;
  double xi_mag;
  double phi;
  double N_B0;
  double N_A0;
  double theta_B;

  TwoModeConfig(double omega, double eta, IsoFamilyGaussian family,
                double xi_mag, double phi, double N_B0, double N_A0,
                double theta_B);

  double theta_A() const;
};

struct JointMoments {
  Matrix D;   // 4x1
  Matrix Xi;  // 4x4 Hermitian
};

Matrix drift_matrix(double omega, double eta);

JointMoments initial_moments(const TwoModeConfig& cfg);

// Closed-form propagator: free phases times the beam-splitter rotation.
Matrix beam_splitter_propagator(double omega, double eta, double t);

// Lambda(t) D(0), Lambda(t) Xi(0) Lambda(t)†, with the closed-form Lambda;
// production path. propagate_expm drives the same moments through the
// generic matrix exponential of the drift matrix instead.
JointMoments propagate(const TwoModeConfig& cfg, double t);
JointMoments propagate_expm(const TwoModeConfig& cfg, double t);

// Rényi-2 entropy of an n-mode covariance: ln(4^n det Xi) / 2; reduces to
// ln(1 + 2N) at a single thermal mode.
double multimode_renyi2(const Matrix& xi_cov);

struct TwoModeSample {
  double t;
  GaussianState battery;
  GaussianState auxiliary;
  double R_B, R_B_d, R_B_s;
  double R_A, R_A_d, R_A_s;
  double S2_B, S2_A, S2_BA;
  double mutual_information_2;  // Rényi-2 based
};

std::vector<TwoModeSample> mode_trajectory(const TwoModeConfig& cfg,
                                           const std::vector<double>& times);

// Closed-form occupation exchange:
// N_K(t) = (N_K(0) - N_K'(0)) cos(2 eta t)/2 + (N_A(0) + N_B(0))/2.
double closed_form_occupation(const TwoModeConfig& cfg, bool battery, double t);

}  // namespace ergokit
