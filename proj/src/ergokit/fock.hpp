#pragma once

#include "ergokit/density.hpp"
#include "ergokit/matrix.hpp"

namespace ergokit {

struct FockOracleConfig {
  int truncation = 64;             // Fock cutoff, levels 0..truncation-1
  double trace_deficit_tol = 1e-8;
};

Matrix fock_annihilation(int truncation);

// exp(mu a† - mu* a) on the truncated space (anti-Hermitian generator, so
// the result is unitary at the truncated level).
Matrix fock_displacement(cplx mu, const FockOracleConfig& cfg);

// exp((xi a†² - xi* a²)/2) on the truncated space.
Matrix fock_squeeze(cplx xi, const FockOracleConfig& cfg);

// Thermal state with populations N^n/(N+1)^(n+1); renormalized after the
// tail deficit is checked against cfg.trace_deficit_tol.
DensityOperator fock_thermal(double occupation, const FockOracleConfig& cfg);

// D(mu) S(xi) pi(N) S†(xi) D†(mu), truncated. The cutoff is doubled until
// the deficit passes (cap 512); failing that throws TruncationTooSmall.
// Because the truncated displacement/squeeze are unitary, pure trace loss
// only sees the thermal tail, so the measured deficit also includes the
// population stranded at the top Fock level.
DensityOperator fock_gaussian(cplx mu, cplx xi, double occupation,
                              const FockOracleConfig& cfg);

// H = omega (n + 1/2) on the truncated space.
HamiltonianSpec harmonic_hamiltonian(int truncation, double omega);

}  // namespace ergokit
