#pragma once

#include <functional>
#include <vector>

#include "ergokit/gaussian.hpp"
#include "ergokit/tls_battery.hpp"

namespace ergokit {

// Thermal reservoir: decay rate gamma > 0 and occupation n_bar (fermionic
// n_bar in [0, 1] for the TLS, bosonic n_bar >= 0 for the mode).
struct BathSpec {
  double gamma;
  double n_bar;

  BathSpec(double gamma, double n_bar);
};

// Closed-form thermal relaxation: p_t = (p0 - n_bar) e^{-gamma t} + n_bar,
// C_t = C0 e^{-gamma t / 2}; theta is carried unchanged (the Hamiltonian
// commutator only rotates the phase and no reported quantity depends on it).
// Dissipator convention: damping toward ground at gamma (1 - n_bar), pumping
// toward excited at gamma n_bar, so pdot = -gamma p + gamma n_bar and the
// fixed point is p = n_bar.
TlsState tls_decay(const TlsState& s0, const BathSpec& bath, double t);

// Time at which the population reaches 1/2:
// gamma^{-1} ln[(p0 - n_bar)/(1/2 - n_bar)]; needs p0 > 1/2 > n_bar.
double tls_tau_half_inc(double p0, const BathSpec& bath);

// Gaussian thermal relaxation closed forms. |mu_t|^2 = |mu_0|^2 e^{-gamma t};
// N_t and xi_t follow from the attenuated covariance with
// Delta_t = (N0 - n_bar) e^{-gamma t} + (n_bar + 1/2).
GaussianState gaussian_decay(const GaussianState& s0, const BathSpec& bath,
                             double t);

// Root of R(t) = R(0)/2 by geometric bracket expansion from the hint and
// bisection; throws NoBracket if the charge never falls below half before
// t_max.
double half_life(const std::function<double(double)>& charge,
                 double bracket_hint, double t_max);

// Half-life of a family member under the bath (hint 1/gamma, horizon
// 100/gamma).
double tls_family_half_life(const IsoFamilyTls& family, double p,
                            const BathSpec& bath);
double gaussian_family_half_life(const IsoFamilyGaussian& family,
                                 double xi_mag, double occupation,
                                 const BathSpec& bath);

struct DecayRecord {
  double t;
  // State parameters at t: (p, C) for the TLS, (|mu|, |xi|, N) for the mode;
  // unused slots stay zero.
  double p = 0.0, coherence = 0.0;
  double mu_abs = 0.0, xi_mag = 0.0, occupation = 0.0;
  ErgotropyBreakdown charge;
};

struct DecayMemberSeries {
  double label;  // grid coordinate: p for the TLS sweep, |xi| for the mode
  std::vector<DecayRecord> series;
  double half_life;
};

struct DecaySweep {
  std::vector<double> times;
  std::vector<DecayMemberSeries> members;
};

DecaySweep tls_decay_sweep(const IsoFamilyTls& family, const BathSpec& bath,
                           const std::vector<double>& p_grid,
                           const std::vector<double>& times, int jobs = 1);

DecaySweep gaussian_decay_sweep(const IsoFamilyGaussian& family,
                                double occupation, const BathSpec& bath,
                                const std::vector<double>& xi_grid,
                                const std::vector<double>& times,
                                int jobs = 1);

}  // namespace ergokit
