#pragma once

#include <map>
#include <string>
#include <vector>

#include "ergokit/density.hpp"
#include "ergokit/matrix.hpp"

namespace ergokit {

// Total charge plus named components; the invariant total = sum(components)
// holds to 1e-12 for every producer in this library.
struct ErgotropyBreakdown {
  double total = 0.0;
  std::map<std::string, double> components;

  double component(const std::string& name) const;
  double component_sum() const;
};

// Two-level battery state (p, C, theta, omega): excited population, l1
// coherence, coherence phase and level splitting. The off-diagonal element
// is (C/2) e^{i theta/2}.
struct TlsState {
  double p;
  double coherence;
  double theta;
  double omega;

  TlsState(double p, double coherence, double theta, double omega);

  DensityOperator to_density() const;
  static TlsState from_density(const DensityOperator& rho, double omega);

  // Bloch-ball bound C^2 <= 4p(1-p), with slack for round-off.
  static constexpr double bloch_tol = 1e-12;
};

HamiltonianSpec tls_hamiltonian(double omega);

// Isoergotropic family anchored at the incoherent reference with excited
// population p_bar in (1/2, 1]; members span p in [P, p_bar], P = 2 p_bar - 1.
struct IsoFamilyTls {
  double p_bar;
  double omega;

  IsoFamilyTls(double p_bar, double omega);

  double floor_population() const { return 2.0 * p_bar - 1.0; }
  double charge() const { return omega * (2.0 * p_bar - 1.0); }
  TlsState reference() const { return {p_bar, 0.0, 0.0, omega}; }
};

double inc_ergotropy(double p, double omega);
double coh_ergotropy(double p, double coherence, double omega);
ErgotropyBreakdown tls_breakdown(const TlsState& s);

// Coherence that keeps the member at population p on the family charge.
double iso_coherence(const IsoFamilyTls& family, double p);
TlsState family_member(const IsoFamilyTls& family, double p, double theta);

double internal_energy(const TlsState& s);
double heat(double p, double p_prime, double omega);  // >0 means absorbed
double entropy_on_family(const IsoFamilyTls& family, double p);
double charge_energy_ratio(const IsoFamilyTls& family, double p);

struct KrausSet {
  std::vector<Matrix> operators;
  double completeness_residual() const;  // max-abs of sum K†K - I
};

// Four rank-one operators built from the target member's eigenvectors; the
// channel replaces any input with the target, so it maps the family into
// itself by construction.
KrausSet gadc_kraus(const IsoFamilyTls& family, double p_prime,
                    double theta_prime);

DensityOperator apply_channel(const KrausSet& k, const DensityOperator& rho);

// Same map realized by swapping with an auxiliary prepared in the target.
TlsState swap_realization(const TlsState& input, const TlsState& aux_target);

struct SelectiveMeasurement {
  Matrix op;                   // single Kraus element
  double success_probability;  // for input fixed at the incoherent reference
};

// M = |psi><e| with |psi> the principal eigenvector of the target member.
// The renormalized success branch is pure; it lands on the family exactly
// at the pure endpoint p = floor_population().
SelectiveMeasurement rank_one_measurement(const IsoFamilyTls& family, double p,
                                          double theta);

struct QmaxMeasurement {
  Matrix op;      // sqrt(q_max) sqrt(target) reference^{-1/2}
  double q_max;   // per-trial success probability
};

// Higher-rank single measurement reaching any (possibly mixed) member from
// the incoherent reference; q_max = 2/(T + sqrt(T^2-4D)) = 1/lambda_max(A).
// The operator is built at q = q_max; a smaller per-trial probability q is
// obtained by scaling it with sqrt(q / q_max).
QmaxMeasurement general_measurement_qmax(const IsoFamilyTls& family,
                                         double p_prime, double theta_prime);

}  // namespace ergokit
