#pragma once

#include "ergokit/density.hpp"
#include "ergokit/matrix.hpp"

namespace ergokit {

// Two-cell X-state battery, one scalar parameter q in [0, 1]. Basis order
// |gg>, |ge>, |eg>, |ee| with cell 1 the first tensor factor, matching the
// two-TLS dynamics convention; H = omega (|e><e|_1 + |e><e|_2).
DensityOperator x_state(double q);
HamiltonianSpec x_hamiltonian(double omega);

struct XErgotropy {
  double total;       // omega |1 - 2q|
  double incoherent;  // omega |(q - 2)(q - 1/2)|
  double coherent;    // total - incoherent, clamped at 0
};

XErgotropy x_ergotropy(double q, double omega);

// max{0, 2q^2 - q - 2(1-q) sqrt(q(1-q))}
double x_concurrence(double q);

// Largest root of the concurrence argument in (0, 1): entanglement is zero
// at and below this point.
double x_sudden_death_point();

struct LocalErgotropyReport {
  double R_total;
  double R_1, R_2;   // labeled by basis position, cell 1 first
  double deficit;    // R_total - R_1 - R_2
  double p_1, p_2;   // reduced excited populations from the partial trace
};

LocalErgotropyReport x_local_report(double q, double omega);

// Postprocessing unitaries of the q -> 1-q map: v1 swaps |eg> and |ee>,
// v2 sends |gg>, |ee> to the Bell pair (|gg> +- |ee>)/sqrt(2).
Matrix x_postprocess_v1();
Matrix x_postprocess_v2();

// Thermal-auxiliary SWAP followed by V = v2 v1; output equals rho_X(1-q).
DensityOperator x_iso_map(double q, double omega);

struct XIsoThermo {
  double Q;        // heat exchanged with the auxiliary, omega (2q - 1)
  double W;        // coherent work of the postprocessing unitary, -Q
  double Q_1, Q_2; // per-cell heats, Q_1 = omega (q - 1/2) = -Q_2
  double dS;       // entropy change, zero by spectrum symmetry
};

XIsoThermo x_iso_map_thermo(double q, double omega);

}  // namespace ergokit
