#pragma once

#include <cstddef>
#include <vector>

#include "core/error.hpp"

namespace srbfn {

using Vector = std::vector<double>;

// Dense row-major matrix of doubles. Small by design: the linear algebra in
// this project never exceeds a few thousand rows by a few dozen columns.
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return data_.empty(); }

  double& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  double at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  double* row_ptr(std::size_t i) { return data_.data() + i * cols_; }
  const double* row_ptr(std::size_t i) const { return data_.data() + i * cols_; }

  std::vector<double>& data() { return data_; }
  const std::vector<double>& data() const { return data_; }

  static Matrix identity(std::size_t n);

 private:
  std::size_t rows_, cols_;
  std::vector<double> data_;
};

// A^T A, computed on the upper triangle and mirrored so the result is
// symmetric to the last bit regardless of summation order effects.
Matrix gram(const Matrix& a);

// x = A^{-1} b for symmetric positive-definite A, via Cholesky factorization.
// Throws NotPositiveDefinite when a pivot is not strictly positive.
Vector solve_spd(const Matrix& a, const Vector& b);

// Per-column mean and sample standard deviation (N-1 denominator), two-pass.
// Requires at least 2 rows.
void column_mean_std(const Matrix& a, Vector& means, Vector& stds);

// A^T y for matching shapes.
Vector transpose_times(const Matrix& a, const Vector& y);

// A x for matching shapes.
Vector times(const Matrix& a, const Vector& x);

}  // namespace srbfn
