#pragma once

#include <cmath>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "ncqd/errors.hpp"
#include "ncqd/types.hpp"

namespace ncqd {

// Dense row-major complex matrix. Everything in this library lives in
// dimension <= 16, so there is no sparsity and no blocking anywhere.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;

  ComplexMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    require_positive(rows, cols);
    entries_.assign(static_cast<std::size_t>(rows) * cols, cplx{});
  }

  ComplexMatrix(int rows, int cols, std::vector<cplx> entries)
      : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    require_positive(rows, cols);
    if (entries_.size() != static_cast<std::size_t>(rows) * cols)
      throw dimension_error("matrix: " + std::to_string(entries_.size()) +
                            " entries for shape " + shape_string(rows, cols));
    for (const cplx& e : entries_)
      if (!std::isfinite(e.real()) || !std::isfinite(e.imag()))
        throw validation_error("matrix: entries must be finite");
  }

  static ComplexMatrix identity(int n) {
    ComplexMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }

  static ComplexMatrix diagonal(const std::vector<cplx>& d) {
    ComplexMatrix m(static_cast<int>(d.size()), static_cast<int>(d.size()));
    for (std::size_t i = 0; i < d.size(); ++i) m(static_cast<int>(i), static_cast<int>(i)) = d[i];
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  const std::vector<cplx>& entries() const { return entries_; }

  cplx& operator()(int i, int j) { return entries_[static_cast<std::size_t>(i) * cols_ + j]; }
  const cplx& operator()(int i, int j) const {
    return entries_[static_cast<std::size_t>(i) * cols_ + j];
  }

  ComplexMatrix dagger() const {
    ComplexMatrix out(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) out(j, i) = std::conj((*this)(i, j));
    return out;
  }

  ComplexMatrix conjugate() const {
    ComplexMatrix out(rows_, cols_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) out(i, j) = std::conj((*this)(i, j));
    return out;
  }

  cplx trace() const {
    if (!is_square()) throw dimension_error("trace: matrix must be square");
    cplx t = 0.0;
    for (int i = 0; i < rows_; ++i) t += (*this)(i, i);
    return t;
  }

  double max_abs() const {
    double m = 0.0;
    for (const cplx& e : entries_) m = std::max(m, std::abs(e));
    return m;
  }

  friend ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_same_shape(a, b, "+");
    ComplexMatrix out(a.rows_, a.cols_);
    for (std::size_t k = 0; k < a.entries_.size(); ++k) out.entries_[k] = a.entries_[k] + b.entries_[k];
    return out;
  }

  friend ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_same_shape(a, b, "-");
    ComplexMatrix out(a.rows_, a.cols_);
    for (std::size_t k = 0; k < a.entries_.size(); ++k) out.entries_[k] = a.entries_[k] - b.entries_[k];
    return out;
  }

  friend ComplexMatrix operator*(const cplx& scalar, const ComplexMatrix& a) {
    ComplexMatrix out(a.rows_, a.cols_);
    for (std::size_t k = 0; k < a.entries_.size(); ++k) out.entries_[k] = scalar * a.entries_[k];
    return out;
  }

  friend ComplexMatrix operator*(const ComplexMatrix& a, const cplx& scalar) { return scalar * a; }

  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.cols_ != b.rows_)
      throw dimension_error("matmul: incompatible operands " + shape_string(a.rows_, a.cols_) +
                            " and " + shape_string(b.rows_, b.cols_));
    ComplexMatrix out(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
      for (int k = 0; k < a.cols_; ++k) {
        const cplx aik = a(i, k);
        if (aik == cplx{}) continue;
        for (int j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
      }
    return out;
  }

 private:
  static void require_positive(int rows, int cols) {
    if (rows <= 0 || cols <= 0)
      throw dimension_error("matrix: dimensions must be positive, got " + shape_string(rows, cols));
  }

  static void require_same_shape(const ComplexMatrix& a, const ComplexMatrix& b, const char* op) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
      throw dimension_error(std::string("operator") + op + ": incompatible operands " +
                            shape_string(a.rows_, a.cols_) + " and " + shape_string(b.rows_, b.cols_));
  }

  static std::string shape_string(int rows, int cols) {
    return std::to_string(rows) + "x" + std::to_string(cols);
  }

  int rows_ = 0;
  int cols_ = 0;
  std::vector<cplx> entries_;
};

inline ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) {
      const cplx aij = a(i, j);
      if (aij == cplx{}) continue;
      for (int k = 0; k < b.rows(); ++k)
        for (int l = 0; l < b.cols(); ++l) out(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
    }
  return out;
}

inline ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (!a.is_square() || !b.is_square() || a.rows() != b.rows())
    throw dimension_error("commutator: operands must be square with equal dimension, got " +
                          std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + " and " +
                          std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  return a * b - b * a;
}

// Hilbert-Schmidt (Frobenius) norm: the Euclidean norm of the entry vector.
inline double hs_norm(const ComplexMatrix& a) {
  double sum = 0.0;
  for (const cplx& e : a.entries()) sum += std::norm(e);
  return std::sqrt(sum);
}

inline double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  return (a - b).max_abs();
}

inline double hermiticity_deviation(const ComplexMatrix& a) {
  return max_abs_diff(a, a.dagger());
}

// max |u^dagger u - I|; zero for a unitary matrix.
inline double unitarity_deviation(const ComplexMatrix& u) {
  if (!u.is_square()) return 1.0;
  return max_abs_diff(u.dagger() * u, ComplexMatrix::identity(u.rows()));
}

inline ComplexMatrix partial_trace(const ComplexMatrix& rho, int d_a, int d_b, Side keep) {
  if (!rho.is_square() || rho.rows() != d_a * d_b)
    throw dimension_error("partial_trace: matrix of dimension " + std::to_string(rho.rows()) + "x" +
                          std::to_string(rho.cols()) + " does not factor as " + std::to_string(d_a) +
                          "*" + std::to_string(d_b));
  if (keep == Side::A) {
    ComplexMatrix out(d_a, d_a);
    for (int i = 0; i < d_a; ++i)
      for (int j = 0; j < d_a; ++j)
        for (int k = 0; k < d_b; ++k) out(i, j) += rho(i * d_b + k, j * d_b + k);
    return out;
  }
  ComplexMatrix out(d_b, d_b);
  for (int i = 0; i < d_b; ++i)
    for (int j = 0; j < d_b; ++j)
      for (int k = 0; k < d_a; ++k) out(i, j) += rho(k * d_b + i, k * d_b + j);
  return out;
}

}  // namespace ncqd
