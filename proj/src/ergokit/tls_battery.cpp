#include "ergokit/tls_battery.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace ergokit {

namespace {

constexpr double kFamilyTol = 1e-12;

double binary_entropy(double x) {
  double s = 0.0;
  if (x > 0.0) s -= x * std::log(x);
  if (x < 1.0) s -= (1.0 - x) * std::log(1.0 - x);
  return s;
}

void check_family_population(const IsoFamilyTls& family, double p) {
  if (p < family.floor_population() - kFamilyTol || p > family.p_bar + kFamilyTol)
    throw OutOfFamilyRange("population " + std::to_string(p) +
                           " outside [" + std::to_string(family.floor_population()) +
                           ", " + std::to_string(family.p_bar) + "]");
}

}  // namespace

double ErgotropyBreakdown::component(const std::string& name) const {
  const auto it = components.find(name);
  return it == components.end() ? 0.0 : it->second;
}

double ErgotropyBreakdown::component_sum() const {
  double s = 0.0;
  for (const auto& [name, value] : components) s += value;
  return s;
}

TlsState::TlsState(double p, double coherence, double theta, double omega)
    : p(p), coherence(coherence), theta(theta), omega(omega) {
  if (p < 0.0 || p > 1.0) throw DomainError("population outside [0, 1]");
  if (coherence < 0.0) throw DomainError("coherence must be >= 0");
  if (coherence * coherence > 4.0 * p * (1.0 - p) + bloch_tol)
    throw DomainError("coherence violates the Bloch-ball bound");
}

DensityOperator TlsState::to_density() const {
  const cplx off = 0.5 * coherence * std::polar(1.0, 0.5 * theta);
  Matrix m(2, 2, {1.0 - p, off, std::conj(off), p});
  return DensityOperator(std::move(m), Validate::basic);
}

TlsState TlsState::from_density(const DensityOperator& rho, double omega) {
  if (rho.dim() != 2) throw DimensionMismatch("TLS state must be 2x2");
  const Matrix& m = rho.matrix();
  const double p = std::real(m(1, 1));
  const double c = 2.0 * std::abs(m(0, 1));
  const double theta = c > 0.0 ? 2.0 * std::arg(m(0, 1)) : 0.0;
  return {std::min(1.0, std::max(0.0, p)), c, theta, omega};
}

HamiltonianSpec tls_hamiltonian(double omega) {
  return HamiltonianSpec({0.0, omega});
}

IsoFamilyTls::IsoFamilyTls(double p_bar, double omega)
    : p_bar(p_bar), omega(omega) {
  if (p_bar <= 0.5 || p_bar > 1.0)
    throw DomainError("family reference population must lie in (1/2, 1]");
}

double inc_ergotropy(double p, double omega) {
  if (p < 0.0 || p > 1.0) throw DomainError("population outside [0, 1]");
  // Theta(0) = 1 convention: exactly p = 1/2 carries no incoherent charge.
  return p > 0.5 ? omega * (2.0 * p - 1.0) : 0.0;
}

double coh_ergotropy(double p, double coherence, double omega) {
  if (p < 0.0 || p > 1.0) throw DomainError("population outside [0, 1]");
  const double c2 = coherence * coherence;
  if (c2 > 4.0 * p * (1.0 - p) + TlsState::bloch_tol)
    throw DomainError("coherence violates the Bloch-ball bound");
  if (coherence == 0.0) return 0.0;
  const double psi2 = (2.0 * p - 1.0) * (2.0 * p - 1.0) + c2;
  const double psi = std::sqrt(psi2);
  return 0.5 * omega * (psi - std::sqrt(std::max(0.0, psi2 - c2)));
}

ErgotropyBreakdown tls_breakdown(const TlsState& s) {
  ErgotropyBreakdown b;
  b.components["incoherent"] = inc_ergotropy(s.p, s.omega);
  b.components["coherent"] = coh_ergotropy(s.p, s.coherence, s.omega);
  b.total = b.component_sum();
  return b;
}

double iso_coherence(const IsoFamilyTls& family, double p) {
  check_family_population(family, p);
  const double c2 = 8.0 * (family.p_bar - p) * family.floor_population();
  return std::sqrt(std::max(0.0, c2));
}

TlsState family_member(const IsoFamilyTls& family, double p, double theta) {
  return {std::min(1.0, std::max(0.0, p)), iso_coherence(family, p), theta,
          family.omega};
}

double internal_energy(const TlsState& s) { return s.omega * s.p; }

double heat(double p, double p_prime, double omega) {
  return omega * (p_prime - p);
}

double entropy_on_family(const IsoFamilyTls& family, double p) {
  check_family_population(family, p);
  return binary_entropy(2.0 * family.p_bar - p);
}

double charge_energy_ratio(const IsoFamilyTls& family, double p) {
  check_family_population(family, p);
  return (2.0 * family.p_bar - 1.0) / p;
}

double KrausSet::completeness_residual() const {
  if (operators.empty()) return 1.0;
  const int n = operators.front().rows();
  Matrix sum(n, n);
  for (const Matrix& k : operators) sum += k.adjoint() * k;
  return (sum - Matrix::identity(n)).max_abs();
}

KrausSet gadc_kraus(const IsoFamilyTls& family, double p_prime,
                    double theta_prime) {
  const TlsState target = family_member(family, p_prime, theta_prime);
  // Target eigenvalues are (p_e, 1 - p_e) with p_e = 2 p_bar - p'; any
  // orthonormal eigenbasis works in a degenerate pair since the channel
  // output depends only on the spectral projectors as a set.
  const Spectrum spec =
      spectral_decompose(target.to_density().matrix(), EigenOrder::descending);
  const double p_e = spec.eigenvalues[0];
  Matrix excited(2, 1, {spec.eigenvectors(0, 0), spec.eigenvectors(1, 0)});
  Matrix ground(2, 1, {spec.eigenvectors(0, 1), spec.eigenvectors(1, 1)});
  const auto outer = [](const Matrix& u, const Matrix& v) {
    return u * v.adjoint();
  };
  KrausSet set;
  const double se = std::sqrt(p_e), sg = std::sqrt(1.0 - p_e);
  set.operators.push_back(outer(excited, excited) * cplx(se));
  set.operators.push_back(outer(excited, ground) * cplx(se));
  set.operators.push_back(outer(ground, ground) * cplx(sg));
  set.operators.push_back(outer(ground, excited) * cplx(sg));
  return set;
}

DensityOperator apply_channel(const KrausSet& k, const DensityOperator& rho) {
  if (k.operators.empty()) throw DomainError("empty Kraus set");
  Matrix out(rho.dim(), rho.dim());
  for (const Matrix& op : k.operators) out += op * rho.matrix() * op.adjoint();
  return DensityOperator(std::move(out), Validate::basic);
}

TlsState swap_realization(const TlsState& input, const TlsState& aux_target) {
  Matrix swap(4, 4);
  swap(0, 0) = 1.0;
  swap(1, 2) = 1.0;
  swap(2, 1) = 1.0;
  swap(3, 3) = 1.0;
  const Matrix joint =
      kron(input.to_density().matrix(), aux_target.to_density().matrix());
  const DensityOperator evolved(swap * joint * swap.adjoint(), Validate::basic);
  const DensityOperator reduced = partial_trace(evolved, {2, 2}, Keep::first);
  return TlsState::from_density(reduced, input.omega);
}

SelectiveMeasurement rank_one_measurement(const IsoFamilyTls& family, double p,
                                          double theta) {
  const TlsState target = family_member(family, p, theta);
  const Spectrum spec =
      spectral_decompose(target.to_density().matrix(), EigenOrder::descending);
  // |psi_out><e|: the input is the incoherent reference, whose principal
  // eigenvector is |e>, so the success probability is p_bar.
  Matrix m(2, 2);
  m(0, 1) = spec.eigenvectors(0, 0);
  m(1, 1) = spec.eigenvectors(1, 0);
  return {std::move(m), family.p_bar};
}

QmaxMeasurement general_measurement_qmax(const IsoFamilyTls& family,
                                         double p_prime, double theta_prime) {
  if (family.p_bar >= 1.0 - 1e-15)
    throw SingularReference(
        "inverse square root of the reference requires p_bar < 1");
  const TlsState target = family_member(family, p_prime, theta_prime);
  const double pb = family.p_bar;
  const double c = target.coherence;
  const double T = (1.0 - p_prime) / (1.0 - pb) + p_prime / pb;
  const double D =
      ((1.0 - p_prime) * p_prime - 0.25 * c * c) / ((1.0 - pb) * pb);
  const double q_max = 2.0 / (T + std::sqrt(std::max(0.0, T * T - 4.0 * D)));

  const Spectrum spec =
      spectral_decompose(target.to_density().matrix(), EigenOrder::descending);
  Matrix sqrt_target(2, 2);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        sqrt_target(i, j) += std::sqrt(std::max(0.0, spec.eigenvalues[k])) *
                             spec.eigenvectors(i, k) *
                             std::conj(spec.eigenvectors(j, k));
  const Matrix ref_inv_sqrt = Matrix::diagonal(
      std::vector<double>{1.0 / std::sqrt(1.0 - pb), 1.0 / std::sqrt(pb)});
  return {sqrt_target * ref_inv_sqrt * cplx(std::sqrt(q_max)), q_max};
}

}  // namespace ergokit
