#include "ergokit/density.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace ergokit {

namespace {

// 0 ln 0 := 0, and eigenvalues in (-psd_tol, 0) from round-off are clamped
// before the log so entropy stays defined without masking real violations.
double entropy_term(double lambda) {
  if (lambda <= 0.0) return 0.0;
  return -lambda * std::log(lambda);
}

Matrix to_energy_basis(const Matrix& rho, const HamiltonianSpec& h) {
  if (h.diagonal()) return rho;
  return h.basis.adjoint() * rho * h.basis;
}

std::vector<double> descending_populations(const DensityOperator& rho) {
  std::vector<double> ev = hermitian_eigenvalues(rho.matrix());
  std::reverse(ev.begin(), ev.end());
  return ev;
}

}  // namespace

DensityOperator::DensityOperator(Matrix m, Validate mode) : m_(std::move(m)) {
  if (m_.rows() != m_.cols() || m_.rows() == 0)
    throw DimensionMismatch("density operator must be square and non-empty");
  if (m_.hermiticity_defect() > hermitian_tol)
    throw DomainError("density operator is not Hermitian within tolerance");
  const double tr_err = std::abs(m_.trace() - cplx(1.0));
  if (tr_err > trace_tol)
    throw DomainError("density operator trace deviates from one by " +
                      std::to_string(tr_err));
  if (mode == Validate::full) {
    const std::vector<double> ev = hermitian_eigenvalues(m_);
    if (ev.front() < -psd_tol)
      throw DomainError("density operator has negative eigenvalue " +
                        std::to_string(ev.front()));
  }
}

HamiltonianSpec::HamiltonianSpec(std::vector<double> e) : energies(std::move(e)) {
  if (energies.empty()) throw DomainError("empty Hamiltonian spectrum");
  if (!std::is_sorted(energies.begin(), energies.end()))
    throw DomainError("Hamiltonian energies must be nondecreasing");
}

HamiltonianSpec::HamiltonianSpec(std::vector<double> e, Matrix b)
    : HamiltonianSpec(std::move(e)) {
  if (b.rows() != dim() || b.cols() != dim())
    throw DimensionMismatch("Hamiltonian basis shape mismatch");
  const Matrix gram = b.adjoint() * b;
  if ((gram - Matrix::identity(dim())).max_abs() > 1e-12)
    throw DomainError("Hamiltonian basis is not unitary within tolerance");
  basis = std::move(b);
}

Matrix HamiltonianSpec::to_matrix() const {
  Matrix d = Matrix::diagonal(energies);
  if (diagonal()) return d;
  return basis * d * basis.adjoint();
}

double ergotropy(const DensityOperator& rho, const HamiltonianSpec& h) {
  if (rho.dim() != h.dim())
    throw DimensionMismatch("state and Hamiltonian dimensions differ");
  const Matrix rho_h = to_energy_basis(rho.matrix(), h);
  double mean_energy = 0.0;
  for (int k = 0; k < h.dim(); ++k)
    mean_energy += std::real(rho_h(k, k)) * h.energies[k];
  const std::vector<double> pops = descending_populations(rho);
  double passive_energy = 0.0;
  for (int k = 0; k < h.dim(); ++k) passive_energy += pops[k] * h.energies[k];
  return std::max(0.0, mean_energy - passive_energy);
}

DensityOperator passive_state(const DensityOperator& rho,
                              const HamiltonianSpec& h) {
  if (rho.dim() != h.dim())
    throw DimensionMismatch("state and Hamiltonian dimensions differ");
  const std::vector<double> pops = descending_populations(rho);
  Matrix d = Matrix::diagonal(pops);
  Matrix m = h.diagonal() ? d : h.basis * d * h.basis.adjoint();
  return DensityOperator(std::move(m), Validate::basic);
}

double von_neumann_entropy(const DensityOperator& rho) {
  double s = 0.0;
  for (double ev : hermitian_eigenvalues(rho.matrix())) s += entropy_term(ev);
  return s;
}

double purity(const DensityOperator& rho) {
  return std::real((rho.matrix() * rho.matrix()).trace());
}

double renyi2_entropy(const DensityOperator& rho) {
  return -std::log(purity(rho));
}

double l1_coherence(const DensityOperator& rho, const HamiltonianSpec& h) {
  if (rho.dim() != h.dim())
    throw DimensionMismatch("state and Hamiltonian dimensions differ");
  const Matrix rho_h = to_energy_basis(rho.matrix(), h);
  double c = 0.0;
  for (int i = 0; i < rho.dim(); ++i)
    for (int j = 0; j < rho.dim(); ++j)
      if (i != j) c += std::abs(rho_h(i, j));
  return c;
}

DensityOperator partial_trace(const DensityOperator& rho,
                              std::pair<int, int> dims, Keep keep) {
  const int da = dims.first, db = dims.second;
  if (da < 1 || db < 1 || rho.dim() != da * db)
    throw DimensionMismatch("partial trace dimensions do not factor the state");
  const Matrix& m = rho.matrix();
  if (keep == Keep::first) {
    Matrix out(da, da);
    for (int i = 0; i < da; ++i)
      for (int j = 0; j < da; ++j) {
        cplx s = 0.0;
        for (int k = 0; k < db; ++k) s += m(i * db + k, j * db + k);
        out(i, j) = s;
      }
    return DensityOperator(std::move(out), Validate::basic);
  }
  Matrix out(db, db);
  for (int i = 0; i < db; ++i)
    for (int j = 0; j < db; ++j) {
      cplx s = 0.0;
      for (int k = 0; k < da; ++k) s += m(k * db + i, k * db + j);
      out(i, j) = s;
    }
  return DensityOperator(std::move(out), Validate::basic);
}

double mutual_information(const DensityOperator& rho_joint,
                          std::pair<int, int> dims, EntropyKind kind) {
  const DensityOperator a = partial_trace(rho_joint, dims, Keep::first);
  const DensityOperator b = partial_trace(rho_joint, dims, Keep::second);
  const auto entropy = [kind](const DensityOperator& r) {
    return kind == EntropyKind::von_neumann ? von_neumann_entropy(r)
                                            : renyi2_entropy(r);
  };
  return entropy(a) + entropy(b) - entropy(rho_joint);
}

double trace_distance(const DensityOperator& a, const DensityOperator& b) {
  if (a.dim() != b.dim())
    throw DimensionMismatch("trace distance dimensions differ");
  const Matrix diff = a.matrix() - b.matrix();
  double s = 0.0;
  for (double ev : hermitian_eigenvalues(diff)) s += std::abs(ev);
  return 0.5 * s;
}

}  // namespace ergokit
