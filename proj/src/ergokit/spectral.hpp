#pragma once

#include <vector>

#include "ergokit/matrix.hpp"

namespace ergokit {

enum class EigenOrder { ascending, descending };

struct Spectrum {
  std::vector<double> eigenvalues;
  Matrix eigenvectors;  // unitary, column k pairs with eigenvalues[k]
};

// Eigendecomposition of a Hermitian matrix: closed form at dim 2, cyclic
// Jacobi above. Throws NonHermitianInput when the symmetry defect exceeds
// herm_tol. Ordering ties keep the pre-sort (Jacobi) index order.
Spectrum spectral_decompose(const Matrix& op, EigenOrder order,
                            double herm_tol = 1e-12);

// Eigenvalues only (ascending); skips accumulating the eigenvector unitary.
std::vector<double> hermitian_eigenvalues(const Matrix& op,
                                          double herm_tol = 1e-12);

// Scaling-and-squaring series exponential for general complex matrices.
Matrix matrix_exponential(const Matrix& a);

}  // namespace ergokit
