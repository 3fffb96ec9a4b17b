#include "ergokit/xstate.hpp"

#include <cmath>

#include "ergokit/tls_battery.hpp"

namespace ergokit {

namespace {

void check_q(double q) {
  if (q < 0.0 || q > 1.0) throw DomainError("X-state parameter outside [0, 1]");
}

double concurrence_argument(double q) {
  return 2.0 * q * q - q - 2.0 * (1.0 - q) * std::sqrt(q * (1.0 - q));
}

}  // namespace

DensityOperator x_state(double q) {
  check_q(q);
  Matrix m(4, 4);
  m(0, 0) = 0.5 * q;
  m(1, 1) = q * (1.0 - q);
  m(2, 2) = (1.0 - q) * (1.0 - q);
  m(3, 3) = 0.5 * q;
  m(0, 3) = q * q - 0.5 * q;
  m(3, 0) = m(0, 3);
  return DensityOperator(std::move(m), Validate::full);
}

HamiltonianSpec x_hamiltonian(double omega) {
  return HamiltonianSpec({0.0, omega, omega, 2.0 * omega});
}

XErgotropy x_ergotropy(double q, double omega) {
  check_q(q);
  XErgotropy e{};
  e.total = omega * std::abs(1.0 - 2.0 * q);
  e.incoherent = omega * std::abs((q - 2.0) * (q - 0.5));
  e.coherent = std::max(0.0, e.total - e.incoherent);
  return e;
}

double x_concurrence(double q) {
  check_q(q);
  return std::max(0.0, concurrence_argument(q));
}

double x_sudden_death_point() {
  // The argument is negative through mid-range q and positive near q = 1;
  // bisect its last sign change.
  double lo = 0.5, hi = 1.0;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    (concurrence_argument(mid) < 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

LocalErgotropyReport x_local_report(double q, double omega) {
  const DensityOperator rho = x_state(q);
  const HamiltonianSpec h1 = tls_hamiltonian(omega);
  const DensityOperator r1 = partial_trace(rho, {2, 2}, Keep::first);
  const DensityOperator r2 = partial_trace(rho, {2, 2}, Keep::second);
  LocalErgotropyReport rep{};
  rep.R_total = ergotropy(rho, x_hamiltonian(omega));
  rep.R_1 = ergotropy(r1, h1);
  rep.R_2 = ergotropy(r2, h1);
  rep.deficit = rep.R_total - rep.R_1 - rep.R_2;
  rep.p_1 = std::real(r1.matrix()(1, 1));
  rep.p_2 = std::real(r2.matrix()(1, 1));
  return rep;
}

Matrix x_postprocess_v1() {
  Matrix v(4, 4);
  v(0, 0) = 1.0;
  v(1, 1) = 1.0;
  v(3, 2) = 1.0;
  v(2, 3) = 1.0;
  return v;
}

Matrix x_postprocess_v2() {
  const double r = 1.0 / std::sqrt(2.0);
  Matrix v(4, 4);
  v(0, 0) = r;
  v(3, 0) = r;
  v(1, 1) = 1.0;
  v(2, 2) = 1.0;
  v(0, 3) = r;
  v(3, 3) = -r;
  return v;
}

DensityOperator x_iso_map(double q, double omega) {
  check_q(q);
  (void)omega;  // the map itself is energy-scale free
  // Swapping with the auxiliary and tracing it out replaces the composite
  // with tau_1 x tau_2; the 16-dimensional SWAP reduces to that identity.
  Matrix tau(2, 2);
  tau(0, 0) = 1.0 - q;
  tau(1, 1) = q;
  const Matrix replaced = kron(tau, tau);
  const Matrix v = x_postprocess_v2() * x_postprocess_v1();
  return DensityOperator(v * replaced * v.adjoint(), Validate::basic);
}

XIsoThermo x_iso_map_thermo(double q, double omega) {
  check_q(q);
  XIsoThermo t{};
  t.Q = omega * (2.0 * q - 1.0);
  t.W = -t.Q;
  t.Q_1 = omega * (q - 0.5);
  t.Q_2 = -t.Q_1;
  t.dS = 0.0;
  return t;
}

}  // namespace ergokit
