#include "core/trainer.hpp"

#include <cmath>
#include <numeric>
#include <string>

namespace srbfn {

void MhpConfig::validate() const {
  if (m < 1) fail(ErrorCode::InvalidConfig, "config: M must be >= 1");
  if (epsilon < 0.0 || epsilon >= 1.0)
    fail(ErrorCode::InvalidConfig, "config: epsilon must lie in [0, 1)");
  if (m == 1 && epsilon > 0.0)
    fail(ErrorCode::DegenerateConfig,
         "config: M = 1 requires epsilon = 0 (no other predictors to share with)");
  if (eta <= 0.0) fail(ErrorCode::InvalidConfig, "config: eta must be > 0");
  if (lambda_p < 0.0) fail(ErrorCode::InvalidConfig, "config: lambda_p must be >= 0");
  if (chi < 0.0) fail(ErrorCode::InvalidConfig, "config: chi must be >= 0");
  if (kappa < 1) fail(ErrorCode::InvalidConfig, "config: kappa must be >= 1");
  if (epochs < 1) fail(ErrorCode::InvalidConfig, "config: epochs must be >= 1");
}

std::size_t winner_index(const Vector& predictions, double y) {
  std::size_t best = 0;
  double best_loss = (predictions[0] - y) * (predictions[0] - y);
  for (std::size_t j = 1; j < predictions.size(); ++j) {
    const double loss = (predictions[j] - y) * (predictions[j] - y);
    if (loss < best_loss) {
      best_loss = loss;
      best = j;
    }
  }
  return best;
}

Vector delta_weights(std::size_t m, double epsilon, std::size_t winner) {
  if (m == 1 && epsilon > 0.0)
    fail(ErrorCode::DegenerateConfig, "delta_weights: M = 1 requires epsilon = 0");
  if (winner >= m) fail(ErrorCode::ShapeMismatch, "delta_weights: winner out of range");
  if (m == 1) return Vector{1.0};
  Vector w(m, epsilon / static_cast<double>(m - 1));
  w[winner] = 1.0 - epsilon;
  return w;
}

HypothesisEnsemble train_ensemble(const Matrix& x, const Vector& y,
                                  const MhpConfig& cfg) {
  cfg.validate();
  if (x.rows() == 0 || x.rows() != y.size())
    fail(ErrorCode::ShapeMismatch, "train_ensemble: features/targets mismatch");
  const std::size_t n = x.rows(), d = x.cols(), m = cfg.m;

  Rng rng(cfg.seed);
  HypothesisEnsemble ens;
  ens.config = cfg;
  ens.input_dim = d;
  ens.predictors.reserve(m);
  for (std::size_t j = 0; j < m; ++j)
    ens.predictors.push_back(init_mlp(d, cfg.kappa, cfg.chi, rng));

  std::vector<MlpGradient> grads;
  grads.reserve(m);
  for (std::size_t j = 0; j < m; ++j)
    grads.push_back(make_gradient_like(ens.predictors[j]));
  std::vector<MlpWorkspace> ws(m);
  for (auto& w : ws) w.resize(cfg.kappa);

  const double share = (m > 1) ? cfg.epsilon / static_cast<double>(m - 1) : 0.0;
  Vector preds(m);
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);

  std::size_t steps = 0;
  for (std::size_t epoch = 0; epoch < cfg.epochs; ++epoch) {
    rng.shuffle(order);
    for (std::size_t pos = 0; pos < n; ++pos) {
      const std::size_t i = order[pos];
      const double* xi = x.row_ptr(i);
      // Gradients are taken at the pre-step parameters for every predictor,
      // then all updates are applied, so no predictor sees another's change
      // from the same sample.
      for (std::size_t j = 0; j < m; ++j)
        loss_and_gradient(ens.predictors[j], xi, d, y[i], cfg.lambda_p, n,
                          ws[j], grads[j]);
      // The winner is decided by prediction error alone; read each f off the
      // activations the gradient pass left behind.
      for (std::size_t j = 0; j < m; ++j) {
        double f = ens.predictors[j].b_out;
        for (std::size_t t = 0; t < cfg.kappa; ++t)
          f += ens.predictors[j].w_out[t] * ws[j].a2[t];
        preds[j] = f;
      }
      const std::size_t win = winner_index(preds, y[i]);
      for (std::size_t j = 0; j < m; ++j) {
        const double weight = (j == win) ? 1.0 - cfg.epsilon : share;
        sgd_step(ens.predictors[j], grads[j], cfg.eta, weight);
      }
      if (++steps % 1000 == 0) {
        for (std::size_t j = 0; j < m; ++j)
          if (!all_finite(ens.predictors[j]))
            fail(ErrorCode::NumericalDivergence,
                 "training diverged (eta=" + std::to_string(cfg.eta) +
                     ", chi=" + std::to_string(cfg.chi) +
                     ", kappa=" + std::to_string(cfg.kappa) + ")");
      }
    }
  }
  for (std::size_t j = 0; j < m; ++j)
    if (!all_finite(ens.predictors[j]))
      fail(ErrorCode::NumericalDivergence,
           "training diverged (eta=" + std::to_string(cfg.eta) +
               ", chi=" + std::to_string(cfg.chi) +
               ", kappa=" + std::to_string(cfg.kappa) + ")");
  return ens;
}

}  // namespace srbfn
