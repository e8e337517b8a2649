#include "core/predictor.hpp"

#include <cmath>

#include "core/error.hpp"

namespace srbfn {

MlpParams init_mlp(std::size_t d, std::size_t kappa, double chi, Rng& rng) {
  if (d < 1 || kappa < 1)
    fail(ErrorCode::InvalidConfig, "init_mlp: d and kappa must be >= 1");
  MlpParams p;
  p.d = d;
  p.kappa = kappa;
  p.w1 = Matrix(kappa, d);
  p.b1.assign(kappa, 0.0);
  p.w2 = Matrix(kappa, kappa);
  p.b2.assign(kappa, 0.0);
  p.w_out.assign(kappa, 0.0);
  p.b_out = 0.0;
  for (auto& v : p.w1.data()) v = rng.normal() * chi;
  for (auto& v : p.w2.data()) v = rng.normal() * chi;
  for (auto& v : p.w_out) v = rng.normal() * chi;
  return p;
}

double forward(const MlpParams& p, const double* x, std::size_t len, MlpWorkspace& ws) {
  if (len != p.d) fail(ErrorCode::ShapeMismatch, "forward: input length != d");
  const std::size_t k = p.kappa;
  for (std::size_t i = 0; i < k; ++i) {
    double s = p.b1[i];
    const double* w = p.w1.row_ptr(i);
    for (std::size_t j = 0; j < len; ++j) s += w[j] * x[j];
    ws.a1[i] = std::tanh(s);
  }
  for (std::size_t i = 0; i < k; ++i) {
    double s = p.b2[i];
    const double* w = p.w2.row_ptr(i);
    for (std::size_t j = 0; j < k; ++j) s += w[j] * ws.a1[j];
    ws.a2[i] = std::tanh(s);
  }
  double f = p.b_out;
  for (std::size_t i = 0; i < k; ++i) f += p.w_out[i] * ws.a2[i];
  return f;
}

double forward(const MlpParams& p, const Vector& x) {
  MlpWorkspace ws;
  ws.resize(p.kappa);
  return forward(p, x.data(), x.size(), ws);
}

double loss_and_gradient(const MlpParams& p, const double* x, std::size_t len,
                         double y, double lambda_p, std::size_t n,
                         MlpWorkspace& ws, MlpGradient& out) {
  const std::size_t k = p.kappa;
  const double f = forward(p, x, len, ws);
  const double r = 2.0 * (f - y);

  out.b_out = r;
  for (std::size_t i = 0; i < k; ++i) {
    out.w_out[i] = r * ws.a2[i];
    ws.dz2[i] = r * p.w_out[i] * (1.0 - ws.a2[i] * ws.a2[i]);
  }
  for (std::size_t i = 0; i < k; ++i) {
    double* g2 = out.w2.row_ptr(i);
    const double dz = ws.dz2[i];
    for (std::size_t j = 0; j < k; ++j) g2[j] = dz * ws.a1[j];
    out.b2[i] = dz;
  }
  for (std::size_t j = 0; j < k; ++j) {
    double s = 0.0;
    for (std::size_t i = 0; i < k; ++i) s += p.w2.at(i, j) * ws.dz2[i];
    ws.dz1[j] = s * (1.0 - ws.a1[j] * ws.a1[j]);
  }
  for (std::size_t i = 0; i < k; ++i) {
    double* g1 = out.w1.row_ptr(i);
    const double dz = ws.dz1[i];
    for (std::size_t j = 0; j < len; ++j) g1[j] = dz * x[j];
    out.b1[i] = dz;
  }

  double loss = (f - y) * (f - y);
  if (lambda_p > 0.0) {
    const double c = lambda_p / static_cast<double>(n);
    double sq = 0.0;
    for (std::size_t i = 0; i < p.w1.data().size(); ++i) {
      out.w1.data()[i] += c * p.w1.data()[i];
      sq += p.w1.data()[i] * p.w1.data()[i];
    }
    for (std::size_t i = 0; i < k; ++i) {
      out.b1[i] += c * p.b1[i];
      sq += p.b1[i] * p.b1[i];
    }
    for (std::size_t i = 0; i < p.w2.data().size(); ++i) {
      out.w2.data()[i] += c * p.w2.data()[i];
      sq += p.w2.data()[i] * p.w2.data()[i];
    }
    for (std::size_t i = 0; i < k; ++i) {
      out.b2[i] += c * p.b2[i];
      sq += p.b2[i] * p.b2[i];
    }
    for (std::size_t i = 0; i < k; ++i) {
      out.w_out[i] += c * p.w_out[i];
      sq += p.w_out[i] * p.w_out[i];
    }
    out.b_out += c * p.b_out;
    sq += p.b_out * p.b_out;
    loss += 0.5 * c * sq;
  }
  return loss;
}

void sgd_step(MlpParams& p, const MlpGradient& g, double eta, double weight) {
  const double s = eta * weight;
  if (s == 0.0) return;
  for (std::size_t i = 0; i < p.w1.data().size(); ++i) p.w1.data()[i] -= s * g.w1.data()[i];
  for (std::size_t i = 0; i < p.b1.size(); ++i) p.b1[i] -= s * g.b1[i];
  for (std::size_t i = 0; i < p.w2.data().size(); ++i) p.w2.data()[i] -= s * g.w2.data()[i];
  for (std::size_t i = 0; i < p.b2.size(); ++i) p.b2[i] -= s * g.b2[i];
  for (std::size_t i = 0; i < p.w_out.size(); ++i) p.w_out[i] -= s * g.w_out[i];
  p.b_out -= s * g.b_out;
}

std::size_t param_count(const MlpParams& p) {
  return p.w1.data().size() + p.b1.size() + p.w2.data().size() + p.b2.size() +
         p.w_out.size() + 1;
}

double get_param(const MlpParams& p, std::size_t idx) {
  std::size_t n = p.w1.data().size();
  if (idx < n) return p.w1.data()[idx];
  idx -= n;
  if (idx < p.b1.size()) return p.b1[idx];
  idx -= p.b1.size();
  n = p.w2.data().size();
  if (idx < n) return p.w2.data()[idx];
  idx -= n;
  if (idx < p.b2.size()) return p.b2[idx];
  idx -= p.b2.size();
  if (idx < p.w_out.size()) return p.w_out[idx];
  idx -= p.w_out.size();
  if (idx == 0) return p.b_out;
  fail(ErrorCode::ShapeMismatch, "get_param: index out of range");
}

void set_param(MlpParams& p, std::size_t idx, double value) {
  std::size_t n = p.w1.data().size();
  if (idx < n) {
    p.w1.data()[idx] = value;
    return;
  }
  idx -= n;
  if (idx < p.b1.size()) {
    p.b1[idx] = value;
    return;
  }
  idx -= p.b1.size();
  n = p.w2.data().size();
  if (idx < n) {
    p.w2.data()[idx] = value;
    return;
  }
  idx -= n;
  if (idx < p.b2.size()) {
    p.b2[idx] = value;
    return;
  }
  idx -= p.b2.size();
  if (idx < p.w_out.size()) {
    p.w_out[idx] = value;
    return;
  }
  idx -= p.w_out.size();
  if (idx == 0) {
    p.b_out = value;
    return;
  }
  fail(ErrorCode::ShapeMismatch, "set_param: index out of range");
}

bool all_finite(const MlpParams& p) {
  for (double v : p.w1.data())
    if (!std::isfinite(v)) return false;
  for (double v : p.b1)
    if (!std::isfinite(v)) return false;
  for (double v : p.w2.data())
    if (!std::isfinite(v)) return false;
  for (double v : p.b2)
    if (!std::isfinite(v)) return false;
  for (double v : p.w_out)
    if (!std::isfinite(v)) return false;
  return std::isfinite(p.b_out);
}

MlpGradient make_gradient_like(const MlpParams& p) {
  MlpGradient g;
  g.d = p.d;
  g.kappa = p.kappa;
  g.w1 = Matrix(p.kappa, p.d);
  g.b1.assign(p.kappa, 0.0);
  g.w2 = Matrix(p.kappa, p.kappa);
  g.b2.assign(p.kappa, 0.0);
  g.w_out.assign(p.kappa, 0.0);
  g.b_out = 0.0;
  return g;
}

}  // namespace srbfn
