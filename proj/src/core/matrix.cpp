#include "core/matrix.hpp"

#include <cmath>
#include <string>

namespace srbfn {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1.0;
  return m;
}

Matrix gram(const Matrix& a) {
  if (a.empty()) fail(ErrorCode::ShapeMismatch, "gram: empty matrix");
  const std::size_t n = a.rows(), m = a.cols();
  Matrix g(m, m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i; j < m; ++j) {
      double s = 0.0;
      for (std::size_t r = 0; r < n; ++r) s += a.at(r, i) * a.at(r, j);
      g.at(i, j) = s;
      g.at(j, i) = s;
    }
  }
  return g;
}

Vector solve_spd(const Matrix& a, const Vector& b) {
  const std::size_t n = a.rows();
  if (a.cols() != n || b.size() != n)
    fail(ErrorCode::ShapeMismatch, "solve_spd: matrix must be square and match b");
  // Cholesky: A = L L^T, lower triangle stored.
  Matrix l(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      double s = a.at(i, j);
      for (std::size_t k = 0; k < j; ++k) s -= l.at(i, k) * l.at(j, k);
      if (i == j) {
        if (s <= 0.0 || !std::isfinite(s))
          fail(ErrorCode::NotPositiveDefinite,
               "solve_spd: non-positive pivot at row " + std::to_string(i));
        l.at(i, i) = std::sqrt(s);
      } else {
        l.at(i, j) = s / l.at(j, j);
      }
    }
  }
  // Forward substitution L z = b, then back substitution L^T x = z.
  Vector z(n);
  for (std::size_t i = 0; i < n; ++i) {
    double s = b[i];
    for (std::size_t k = 0; k < i; ++k) s -= l.at(i, k) * z[k];
    z[i] = s / l.at(i, i);
  }
  Vector x(n);
  for (std::size_t ii = n; ii-- > 0;) {
    double s = z[ii];
    for (std::size_t k = ii + 1; k < n; ++k) s -= l.at(k, ii) * x[k];
    x[ii] = s / l.at(ii, ii);
  }
  return x;
}

void column_mean_std(const Matrix& a, Vector& means, Vector& stds) {
  if (a.rows() < 2)
    fail(ErrorCode::InsufficientRows, "column_mean_std: need at least 2 rows");
  const std::size_t n = a.rows(), m = a.cols();
  means.assign(m, 0.0);
  stds.assign(m, 0.0);
  for (std::size_t j = 0; j < m; ++j) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += a.at(i, j);
    means[j] = s / static_cast<double>(n);
  }
  for (std::size_t j = 0; j < m; ++j) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double d = a.at(i, j) - means[j];
      s += d * d;
    }
    stds[j] = std::sqrt(s / static_cast<double>(n - 1));
  }
}

Vector transpose_times(const Matrix& a, const Vector& y) {
  if (a.rows() != y.size())
    fail(ErrorCode::ShapeMismatch, "transpose_times: row count mismatch");
  Vector out(a.cols(), 0.0);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out[j] += a.at(i, j) * y[i];
  return out;
}

Vector times(const Matrix& a, const Vector& x) {
  if (a.cols() != x.size())
    fail(ErrorCode::ShapeMismatch, "times: column count mismatch");
  Vector out(a.rows(), 0.0);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j < a.cols(); ++j) s += a.at(i, j) * x[j];
    out[i] = s;
  }
  return out;
}

}  // namespace srbfn
