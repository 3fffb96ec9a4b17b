#include "ergokit/fock.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ergokit/spectral.hpp"

namespace ergokit {

namespace {

constexpr int kCutoffCap = 512;

void check_cfg(const FockOracleConfig& cfg) {
  if (cfg.truncation < 2) throw DomainError("Fock truncation must be >= 2");
  if (cfg.trace_deficit_tol <= 0.0)
    throw DomainError("trace deficit tolerance must be positive");
}

Matrix displacement_generator(cplx mu, int n) {
  const Matrix a = fock_annihilation(n);
  return a.adjoint() * mu - a * std::conj(mu);
}

Matrix squeeze_generator(cplx xi, int n) {
  const Matrix a = fock_annihilation(n);
  const Matrix a2 = a * a;
  return (a2.adjoint() * xi - a2 * std::conj(xi)) * cplx(0.5);
}

struct Assembled {
  Matrix rho;      // unnormalized
  double deficit;
};

// Faithfulness gauge for the truncation: the thermal tail left outside the
// space, the population stranded at the top level, and the mismatch between
// the assembled mean occupation and the operator-algebra expectation
// |mu|^2 + (2N+1) sinh^2|xi| + N. The last term catches gross truncation,
// where the rotated state wraps inside the space and the boundary level can
// be accidentally empty.
Assembled assemble(cplx mu, cplx xi, double occupation, int n) {
  Matrix rho(n, n);
  const double ratio = occupation / (occupation + 1.0);
  double pn = 1.0 / (occupation + 1.0);
  double tail = 1.0;
  for (int k = 0; k < n; ++k) {
    rho(k, k) = pn;
    tail -= pn;
    pn *= ratio;
  }
  if (std::abs(xi) > 0.0) {
    const Matrix s = matrix_exponential(squeeze_generator(xi, n));
    rho = s * rho * s.adjoint();
  }
  if (std::abs(mu) > 0.0) {
    const Matrix d = matrix_exponential(displacement_generator(mu, n));
    rho = d * rho * d.adjoint();
  }
  const double boundary = std::real(rho(n - 1, n - 1));
  const double sh = std::sinh(std::abs(xi));
  const double want = std::norm(mu) + (2.0 * occupation + 1.0) * sh * sh +
                      occupation;
  double got = 0.0;
  for (int k = 1; k < n; ++k) got += k * std::real(rho(k, k));
  const double occ_gap = std::abs(got - want) / (1.0 + want);
  return {std::move(rho), std::max({tail, boundary, occ_gap})};
}

DensityOperator renormalized(Matrix rho) {
  rho *= cplx(1.0 / std::real(rho.trace()));
  return DensityOperator(std::move(rho), Validate::basic);
}

}  // namespace

Matrix fock_annihilation(int truncation) {
  Matrix a(truncation, truncation);
  for (int k = 1; k < truncation; ++k) a(k - 1, k) = std::sqrt(double(k));
  return a;
}

Matrix fock_displacement(cplx mu, const FockOracleConfig& cfg) {
  check_cfg(cfg);
  return matrix_exponential(displacement_generator(mu, cfg.truncation));
}

Matrix fock_squeeze(cplx xi, const FockOracleConfig& cfg) {
  check_cfg(cfg);
  return matrix_exponential(squeeze_generator(xi, cfg.truncation));
}

DensityOperator fock_thermal(double occupation, const FockOracleConfig& cfg) {
  check_cfg(cfg);
  if (occupation < 0.0) throw DomainError("thermal occupation must be >= 0");
  const Assembled got = assemble(0.0, 0.0, occupation, cfg.truncation);
  if (got.deficit > cfg.trace_deficit_tol)
    throw TruncationTooSmall(
        "thermal tail " + std::to_string(got.deficit) + " above tolerance",
        got.deficit);
  return renormalized(got.rho);
}

DensityOperator fock_gaussian(cplx mu, cplx xi, double occupation,
                              const FockOracleConfig& cfg) {
  check_cfg(cfg);
  if (occupation < 0.0) throw DomainError("thermal occupation must be >= 0");
  double deficit = 1.0;
  int n = cfg.truncation;
  while (true) {
    Assembled got = assemble(mu, xi, occupation, n);
    deficit = got.deficit;
    if (deficit <= cfg.trace_deficit_tol) return renormalized(got.rho);
    if (n >= kCutoffCap) break;
    n = std::min(2 * n, kCutoffCap);
  }
  throw TruncationTooSmall(
      "deficit " + std::to_string(deficit) + " above tolerance at cutoff cap",
      deficit);
}

HamiltonianSpec harmonic_hamiltonian(int truncation, double omega) {
  std::vector<double> e(truncation);
  for (int k = 0; k < truncation; ++k) e[k] = omega * (k + 0.5);
  return HamiltonianSpec(std::move(e));
}

}  // namespace ergokit
