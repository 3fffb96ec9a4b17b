#pragma once

#include <complex>
#include <initializer_list>
#include <vector>

#include "ergokit/errors.hpp"

namespace ergokit {

using cplx = std::complex<double>;

// Dense row-major complex matrix. Sized for desk-scale work (dim <= ~512);
// everything is value-semantic and allocation is not a concern at this scale.
class Matrix {
public:
  Matrix() = default;
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols) {}
  Matrix(int rows, int cols, std::initializer_list<cplx> entries);

  static Matrix identity(int n);
  static Matrix diagonal(const std::vector<cplx>& d);
  static Matrix diagonal(const std::vector<double>& d);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool empty() const { return a_.empty(); }

  cplx& operator()(int i, int j) { return a_[size_t(i) * cols_ + j]; }
  const cplx& operator()(int i, int j) const { return a_[size_t(i) * cols_ + j]; }

  const cplx* data() const { return a_.data(); }
  cplx* data() { return a_.data(); }

  Matrix adjoint() const;
  Matrix transpose() const;
  cplx trace() const;
  double max_abs() const;
  double frobenius_norm() const;
  double one_norm() const;  // max column absolute sum
  double hermiticity_defect() const;  // max |a_ij - conj(a_ji)|

  Matrix& operator+=(const Matrix& rhs);
  Matrix& operator-=(const Matrix& rhs);
  Matrix& operator*=(cplx s);

  friend Matrix operator+(Matrix lhs, const Matrix& rhs) { return lhs += rhs; }
  friend Matrix operator-(Matrix lhs, const Matrix& rhs) { return lhs -= rhs; }
  friend Matrix operator*(Matrix lhs, cplx s) { return lhs *= s; }
  friend Matrix operator*(cplx s, Matrix rhs) { return rhs *= s; }
  friend Matrix operator*(const Matrix& lhs, const Matrix& rhs);

private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<cplx> a_;
};

std::vector<cplx> operator*(const Matrix& m, const std::vector<cplx>& v);

Matrix kron(const Matrix& a, const Matrix& b);

// Determinant by partially pivoted LU; used only on small covariance blocks.
cplx determinant(Matrix a);

}  // namespace ergokit
