#include "ergokit/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace ergokit {

namespace {

// Unitary diagonalizing the Hermitian block [[app, apq], [conj(apq), aqq]];
// columns are eigenvectors for (l1, l2) with l1 <= l2.
struct Block2 {
  double l1, l2;
  cplx v11, v21, v12, v22;
};

Block2 eig2(double app, double aqq, cplx apq) {
  Block2 b{};
  const double h = 0.5 * (app + aqq);
  const double rad = std::hypot(0.5 * (app - aqq), std::abs(apq));
  b.l1 = h - rad;
  b.l2 = h + rad;
  if (std::abs(apq) == 0.0) {
    const bool swap = app > aqq;
    b.v11 = swap ? 0.0 : 1.0;
    b.v21 = swap ? 1.0 : 0.0;
    b.v12 = swap ? 1.0 : 0.0;
    b.v22 = swap ? 0.0 : 1.0;
    return b;
  }
  // Build the eigenvector for the eigenvalue farther from app; (apq, l-app)
  // is then free of cancellation. The partner column is its orthocomplement.
  const double pick = (std::abs(b.l2 - app) >= std::abs(b.l1 - app)) ? b.l2 : b.l1;
  cplx x = apq;
  cplx y = pick - app;
  const double nrm = std::sqrt(std::norm(x) + std::norm(y));
  x /= nrm;
  y /= nrm;
  if (pick == b.l2) {
    b.v12 = x;
    b.v22 = y;
    b.v11 = -std::conj(y);
    b.v21 = std::conj(x);
  } else {
    b.v11 = x;
    b.v21 = y;
    b.v12 = -std::conj(y);
    b.v22 = std::conj(x);
  }
  return b;
}

double offdiag_sq(const Matrix& a) {
  double s = 0.0;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = i + 1; j < a.cols(); ++j) s += std::norm(a(i, j));
  return 2.0 * s;
}

// Cyclic Jacobi on a Hermitian matrix; rotations come from exact 2x2
// diagonalizations so each pivot is annihilated in one step.
void jacobi(Matrix& a, Matrix* v) {
  const int n = a.rows();
  const double scale = std::max(a.frobenius_norm(), 1e-300);
  const double stop = (1e-14 * scale) * (1e-14 * scale);
  for (int sweep = 0; sweep < 100 && offdiag_sq(a) > stop; ++sweep) {
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        if (std::abs(a(p, q)) <= 1e-18 * scale) continue;
        const Block2 b =
            eig2(std::real(a(p, p)), std::real(a(q, q)), a(p, q));
        // a <- G† a G on rows/columns p and q.
        for (int j = 0; j < n; ++j) {
          const cplx rp = a(p, j), rq = a(q, j);
          a(p, j) = std::conj(b.v11) * rp + std::conj(b.v21) * rq;
          a(q, j) = std::conj(b.v12) * rp + std::conj(b.v22) * rq;
        }
        for (int i = 0; i < n; ++i) {
          const cplx cp = a(i, p), cq = a(i, q);
          a(i, p) = cp * b.v11 + cq * b.v21;
          a(i, q) = cp * b.v12 + cq * b.v22;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = std::real(a(p, p));
        a(q, q) = std::real(a(q, q));
        if (v) {
          for (int i = 0; i < n; ++i) {
            const cplx cp = (*v)(i, p), cq = (*v)(i, q);
            (*v)(i, p) = cp * b.v11 + cq * b.v21;
            (*v)(i, q) = cp * b.v12 + cq * b.v22;
          }
        }
      }
    }
  }
}

void check_hermitian(const Matrix& op, double herm_tol) {
  if (op.rows() != op.cols())
    throw NonHermitianInput("spectral input is not square");
  const double defect = op.hermiticity_defect();
  if (defect > herm_tol * std::max(1.0, op.max_abs()))
    throw NonHermitianInput("hermiticity defect " + std::to_string(defect));
}

}  // namespace

Spectrum spectral_decompose(const Matrix& op, EigenOrder order,
                            double herm_tol) {
  check_hermitian(op, herm_tol);
  const int n = op.rows();
  Spectrum s;
  s.eigenvalues.resize(n);
  s.eigenvectors = Matrix::identity(n);
  if (n == 1) {
    s.eigenvalues[0] = std::real(op(0, 0));
    return s;
  }
  Matrix a = op;
  if (n == 2) {
    const Block2 b = eig2(std::real(a(0, 0)), std::real(a(1, 1)), a(0, 1));
    s.eigenvalues = {b.l1, b.l2};
    s.eigenvectors(0, 0) = b.v11;
    s.eigenvectors(1, 0) = b.v21;
    s.eigenvectors(0, 1) = b.v12;
    s.eigenvectors(1, 1) = b.v22;
  } else {
    jacobi(a, &s.eigenvectors);
    for (int i = 0; i < n; ++i) s.eigenvalues[i] = std::real(a(i, i));
  }
  std::vector<int> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](int i, int j) {
    return order == EigenOrder::ascending
               ? s.eigenvalues[i] < s.eigenvalues[j]
               : s.eigenvalues[i] > s.eigenvalues[j];
  });
  Spectrum out;
  out.eigenvalues.resize(n);
  out.eigenvectors = Matrix(n, n);
  for (int k = 0; k < n; ++k) {
    out.eigenvalues[k] = s.eigenvalues[idx[k]];
    for (int i = 0; i < n; ++i) out.eigenvectors(i, k) = s.eigenvectors(i, idx[k]);
  }
  return out;
}

std::vector<double> hermitian_eigenvalues(const Matrix& op, double herm_tol) {
  check_hermitian(op, herm_tol);
  const int n = op.rows();
  if (n == 1) return {std::real(op(0, 0))};
  if (n == 2) {
    const Block2 b = eig2(std::real(op(0, 0)), std::real(op(1, 1)), op(0, 1));
    return {b.l1, b.l2};
  }
  Matrix a = op;
  jacobi(a, nullptr);
  std::vector<double> ev(n);
  for (int i = 0; i < n; ++i) ev[i] = std::real(a(i, i));
  std::sort(ev.begin(), ev.end());
  return ev;
}

Matrix matrix_exponential(const Matrix& a) {
  if (a.rows() != a.cols())
    throw DimensionMismatch("matrix exponential of non-square matrix");
  const int n = a.rows();
  const double nrm = a.one_norm();
  int squarings = 0;
  if (nrm > 0.5) squarings = int(std::ceil(std::log2(nrm / 0.5)));
  const double f = std::ldexp(1.0, -squarings);
  Matrix x = a * cplx(f);
  Matrix result = Matrix::identity(n);
  Matrix term = Matrix::identity(n);
  for (int k = 1; k <= 24; ++k) {
    term = term * x;
    term *= cplx(1.0 / k);
    result += term;
    if (term.max_abs() < 1e-18) break;
  }
  for (int s = 0; s < squarings; ++s) result = result * result;
  return result;
}

}  // namespace ergokit
