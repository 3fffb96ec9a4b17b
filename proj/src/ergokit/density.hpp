#pragma once

#include <vector>

#include "ergokit/matrix.hpp"
#include "ergokit/spectral.hpp"

namespace ergokit {

// Validation depth for DensityOperator construction. Outputs of operations
// that are positive by construction (unitary conjugation, partial trace,
// channel application) skip the eigenvalue check; external input never does.
enum class Validate { full, basic };

// Finite-dimensional state: Hermitian, unit-trace, positive semidefinite.
class DensityOperator {
public:
  explicit DensityOperator(Matrix m, Validate mode = Validate::full);

  int dim() const { return m_.rows(); }
  const Matrix& matrix() const { return m_; }

  static constexpr double hermitian_tol = 1e-12;
  static constexpr double trace_tol = 1e-12;
  static constexpr double psd_tol = 1e-10;

private:
  Matrix m_;
};

// Hamiltonian with ascending energies; basis columns are the energy
// eigenvectors (empty basis means diagonal in the computational basis).
struct HamiltonianSpec {
  std::vector<double> energies;
  Matrix basis;

  explicit HamiltonianSpec(std::vector<double> e);
  HamiltonianSpec(std::vector<double> e, Matrix b);

  int dim() const { return int(energies.size()); }
  bool diagonal() const { return basis.empty(); }
  Matrix to_matrix() const;
};

enum class Keep { first, second };
enum class EntropyKind { von_neumann, renyi2 };

double ergotropy(const DensityOperator& rho, const HamiltonianSpec& h);
DensityOperator passive_state(const DensityOperator& rho, const HamiltonianSpec& h);

double von_neumann_entropy(const DensityOperator& rho);
double purity(const DensityOperator& rho);
double renyi2_entropy(const DensityOperator& rho);
double l1_coherence(const DensityOperator& rho, const HamiltonianSpec& h);

DensityOperator partial_trace(const DensityOperator& rho,
                              std::pair<int, int> dims, Keep keep);

double mutual_information(const DensityOperator& rho_joint,
                          std::pair<int, int> dims,
                          EntropyKind kind = EntropyKind::von_neumann);

double trace_distance(const DensityOperator& a, const DensityOperator& b);

}  // namespace ergokit
