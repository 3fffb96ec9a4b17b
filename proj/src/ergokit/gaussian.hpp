#pragma once

#include <string>

#include "ergokit/matrix.hpp"
#include "ergokit/tls_battery.hpp"

namespace ergokit {

// Single-mode Gaussian state D(mu) S(xi) pi(N) S†(xi) D†(mu) in the complex
// (a, a†) moment convention: d = (mu, mu*), Theta = (N + 1/2) F(xi, phi)
// with vacuum Theta = I/2.
struct GaussianState {
  cplx mu;            // displacement
  double xi_mag;      // squeezing magnitude >= 0
  double phi;         // squeezing phase
  double occupation;  // thermal occupation N >= 0
  double omega;

  GaussianState(cplx mu, double xi_mag, double phi, double occupation,
                double omega);
};

struct MomentForm {
  Matrix d;      // 2x1: (mu, mu*)
  Matrix theta;  // 2x2 Hermitian covariance
};

Matrix f_matrix(double xi_mag, double phi);

// Moment map of S(xi): a -> cosh|xi| a + e^{i phi} sinh|xi| a†.
Matrix squeeze_moment_matrix(double xi_mag, double phi);

MomentForm to_moments(const GaussianState& s);

// Parameter extraction: N + 1/2 = sqrt(det Theta), cosh 2|xi| =
// Tr Theta / (2 sqrt(det Theta)), phi from the upper off-diagonal argument
// (gauge-fixed to 0 at xi = 0). Throws UnphysicalCovariance below the
// det Theta >= 1/4 uncertainty bound.
GaussianState from_moments(const MomentForm& m, double omega);

// R = R_d + R_s with R_d = omega |mu|^2 and
// R_s = omega (N + 1/2)(cosh 2|xi| - 1).
ErgotropyBreakdown gaussian_breakdown(const GaussianState& s);

struct IsoFamilyGaussian {
  double mu_bar_sq;  // |mu_bar|^2 >= 0
  double omega;

  IsoFamilyGaussian(double mu_bar_sq, double omega);
  double charge() const { return omega * mu_bar_sq; }
};

// Family budget f = |mu_bar|^2 - (N + 1/2)(cosh 2|xi| - 1).
double family_budget(const IsoFamilyGaussian& family, double xi_mag,
                     double occupation);

// |mu| = sqrt(f); throws OutOfFamilyRange when f < 0.
double iso_displacement(const IsoFamilyGaussian& family, double xi_mag,
                        double occupation);

// Squeezing at which f = 0 (the displacement-free edge of the family).
double family_boundary_xi(const IsoFamilyGaussian& family, double occupation);

GaussianState gaussian_family_member(const IsoFamilyGaussian& family,
                                     double xi_mag, double phi,
                                     double occupation, double theta);

double gaussian_internal_energy(const GaussianState& s);
double gaussian_renyi2(const GaussianState& s);  // ln(1 + 2N)
double gaussian_charge_energy_ratio(const IsoFamilyGaussian& family,
                                    double occupation);

// Phase-space density W(alpha) = exp[-(v-d)† Theta^{-1} (v-d)/2] /
// (pi sqrt(det Theta)) with v = (alpha, alpha*).
double wigner(const GaussianState& s, cplx alpha);

// Thermal attenuator: d -> sqrt(eta) d, Theta -> eta Theta +
// (1 - eta)(N_env + 1/2) I. Output is re-validated against the uncertainty
// bound; violations raise rather than clamp.
GaussianState attenuator_channel(const GaussianState& s, double transmissivity,
                                 double n_env);

// Full thermalization to the target occupation, then squeeze, then displace.
// The target must carry the same total ergotropy as the input (1e-10).
GaussianState iso_channel_three_step(const GaussianState& in,
                                     const GaussianState& target);

// Append an auxiliary prepared in `aux`, apply the two-mode swap on joint
// moments, trace out the auxiliary.
GaussianState mode_swap_channel(const GaussianState& in,
                                const GaussianState& aux);

struct GaussianSelectiveMeasurement {
  double success_probability;  // 1 / (N + 1)
  double target_mu_abs;        // displaced-vacuum target |mu_bar|
  std::string description;
};

// Rank-one Kraus |mu_bar><phi_opt| with phi_opt the principal eigenvector
// D(mu) S(xi)|0> of the input; the success branch is the displaced vacuum.
GaussianSelectiveMeasurement selective_measurement(
    const GaussianState& s, const IsoFamilyGaussian& family);

}  // namespace ergokit
