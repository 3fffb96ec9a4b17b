#include "ergokit/matrix.hpp"

#include <algorithm>
#include <cmath>

namespace ergokit {

Matrix::Matrix(int rows, int cols, std::initializer_list<cplx> entries)
    : rows_(rows), cols_(cols), a_(entries) {
  if (a_.size() != size_t(rows) * cols)
    throw DimensionMismatch("matrix initializer size does not match shape");
}

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

Matrix Matrix::diagonal(const std::vector<cplx>& d) {
  Matrix m(int(d.size()), int(d.size()));
  for (size_t i = 0; i < d.size(); ++i) m(int(i), int(i)) = d[i];
  return m;
}

Matrix Matrix::diagonal(const std::vector<double>& d) {
  Matrix m(int(d.size()), int(d.size()));
  for (size_t i = 0; i < d.size(); ++i) m(int(i), int(i)) = d[i];
  return m;
}

Matrix Matrix::adjoint() const {
  Matrix m(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) m(j, i) = std::conj((*this)(i, j));
  return m;
}

Matrix Matrix::transpose() const {
  Matrix m(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j);
  return m;
}

cplx Matrix::trace() const {
  cplx t = 0.0;
  for (int i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

double Matrix::max_abs() const {
  double m = 0.0;
  for (const cplx& z : a_) m = std::max(m, std::abs(z));
  return m;
}

double Matrix::frobenius_norm() const {
  double s = 0.0;
  for (const cplx& z : a_) s += std::norm(z);
  return std::sqrt(s);
}

double Matrix::one_norm() const {
  double best = 0.0;
  for (int j = 0; j < cols_; ++j) {
    double s = 0.0;
    for (int i = 0; i < rows_; ++i) s += std::abs((*this)(i, j));
    best = std::max(best, s);
  }
  return best;
}

double Matrix::hermiticity_defect() const {
  double d = 0.0;
  for (int i = 0; i < rows_; ++i)
    for (int j = i; j < cols_; ++j)
      d = std::max(d, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
  return d;
}

Matrix& Matrix::operator+=(const Matrix& rhs) {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
    throw DimensionMismatch("matrix addition shape mismatch");
  for (size_t k = 0; k < a_.size(); ++k) a_[k] += rhs.a_[k];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& rhs) {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
    throw DimensionMismatch("matrix subtraction shape mismatch");
  for (size_t k = 0; k < a_.size(); ++k) a_[k] -= rhs.a_[k];
  return *this;
}

Matrix& Matrix::operator*=(cplx s) {
  for (cplx& z : a_) z *= s;
  return *this;
}

Matrix operator*(const Matrix& lhs, const Matrix& rhs) {
  if (lhs.cols_ != rhs.rows_)
    throw DimensionMismatch("matrix product shape mismatch");
  Matrix out(lhs.rows_, rhs.cols_);
  // Transposing rhs keeps both inner loops on contiguous memory.
  Matrix rt = rhs.transpose();
  const int n = lhs.cols_;
  for (int i = 0; i < lhs.rows_; ++i) {
    const cplx* lrow = lhs.a_.data() + size_t(i) * n;
    for (int j = 0; j < rhs.cols_; ++j) {
      const cplx* rrow = rt.a_.data() + size_t(j) * n;
      cplx acc = 0.0;
      for (int k = 0; k < n; ++k) acc += lrow[k] * rrow[k];
      out(i, j) = acc;
    }
  }
  return out;
}

std::vector<cplx> operator*(const Matrix& m, const std::vector<cplx>& v) {
  if (size_t(m.cols()) != v.size())
    throw DimensionMismatch("matrix-vector shape mismatch");
  std::vector<cplx> out(m.rows());
  for (int i = 0; i < m.rows(); ++i) {
    cplx acc = 0.0;
    for (int j = 0; j < m.cols(); ++j) acc += m(i, j) * v[j];
    out[i] = acc;
  }
  return out;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (int ia = 0; ia < a.rows(); ++ia)
    for (int ja = 0; ja < a.cols(); ++ja) {
      const cplx f = a(ia, ja);
      if (f == cplx(0.0)) continue;
      for (int ib = 0; ib < b.rows(); ++ib)
        for (int jb = 0; jb < b.cols(); ++jb)
          out(ia * b.rows() + ib, ja * b.cols() + jb) = f * b(ib, jb);
    }
  return out;
}

cplx determinant(Matrix a) {
  if (a.rows() != a.cols()) throw DimensionMismatch("determinant of non-square matrix");
  const int n = a.rows();
  cplx det = 1.0;
  for (int k = 0; k < n; ++k) {
    int piv = k;
    for (int i = k + 1; i < n; ++i)
      if (std::abs(a(i, k)) > std::abs(a(piv, k))) piv = i;
    if (std::abs(a(piv, k)) == 0.0) return 0.0;
    if (piv != k) {
      for (int j = 0; j < n; ++j) std::swap(a(piv, j), a(k, j));
      det = -det;
    }
    det *= a(k, k);
    for (int i = k + 1; i < n; ++i) {
      const cplx f = a(i, k) / a(k, k);
      for (int j = k; j < n; ++j) a(i, j) -= f * a(k, j);
    }
  }
  return det;
}

}  // namespace ergokit
