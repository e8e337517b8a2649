#include "core/baselines.hpp"

#include "core/structured.hpp"

namespace srbfn {

Vector arithmetic_combine(const HypothesisEnsemble& ens, const Matrix& x) {
  const StructuredDataset sd = build_structured(ens, x, StructuredSource::Test);
  Vector out(x.rows(), 0.0);
  const double inv = 1.0 / static_cast<double>(sd.d.cols());
  for (std::size_t i = 0; i < sd.d.rows(); ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j < sd.d.cols(); ++j) s += sd.d.at(i, j);
    out[i] = s * inv;
  }
  return out;
}

LinearModel linear_fit(const Matrix& x, const Vector& y, double lambda) {
  if (x.rows() != y.size())
    fail(ErrorCode::ShapeMismatch, "linear_fit: rows(X) != len(y)");
  if (x.rows() < 2) fail(ErrorCode::InsufficientRows, "linear_fit: need >= 2 rows");
  const std::size_t n = x.rows(), d = x.cols();

  Vector x_mean(d, 0.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < d; ++j) x_mean[j] += x.at(i, j);
  for (auto& v : x_mean) v /= static_cast<double>(n);
  double y_mean = 0.0;
  for (double v : y) y_mean += v;
  y_mean /= static_cast<double>(n);

  Matrix xc(n, d);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < d; ++j) xc.at(i, j) = x.at(i, j) - x_mean[j];
  Vector yc(n);
  for (std::size_t i = 0; i < n; ++i) yc[i] = y[i] - y_mean;

  Matrix g = gram(xc);
  for (std::size_t j = 0; j < d; ++j) g.at(j, j) += lambda;
  const Vector rhs = transpose_times(xc, yc);

  LinearModel m;
  m.lambda = lambda;
  try {
    m.coefficients = solve_spd(g, rhs);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NotPositiveDefinite) throw;
    for (std::size_t j = 0; j < d; ++j) g.at(j, j) += 1e-10;
    m.coefficients = solve_spd(g, rhs);
  }
  m.intercept = y_mean;
  for (std::size_t j = 0; j < d; ++j) m.intercept -= m.coefficients[j] * x_mean[j];
  return m;
}

Vector linear_predict(const LinearModel& m, const Matrix& x) {
  if (x.cols() != m.coefficients.size())
    fail(ErrorCode::ShapeMismatch, "linear_predict: dimension mismatch");
  Vector out = times(x, m.coefficients);
  for (auto& v : out) v += m.intercept;
  return out;
}

}  // namespace srbfn
