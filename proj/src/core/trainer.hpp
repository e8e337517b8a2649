#pragma once

#include <cstdint>
#include <vector>

#include "core/dataset.hpp"
#include "core/predictor.hpp"

namespace srbfn {

// Hyper-parameters for one ensemble of base learners.
struct MhpConfig {
  std::size_t m = 5;         // hypothesis count
  double epsilon = 0.1;      // share of update mass spread over non-winners
  double eta = 0.03;         // learning rate
  double lambda_p = 0.0001;  // per-predictor L2 penalty
  double chi = 0.01;         // init scale
  std::size_t kappa = 20;    // neurons per hidden layer
  std::size_t epochs = 50;
  std::uint64_t seed = 0;

  void validate() const;
};

struct HypothesisEnsemble {
  std::vector<MlpParams> predictors;
  MhpConfig config;
  std::size_t input_dim = 0;
  Standardizer standardizer;  // set by the harness for fold-trained ensembles
};

// argmin_j (predictions[j] - y)^2; ties resolved to the lowest index.
std::size_t winner_index(const Vector& predictions, double y);

// Update weights per sample: the winner gets 1 - epsilon, every other
// predictor gets epsilon / (M - 1). M = 1 requires epsilon = 0.
Vector delta_weights(std::size_t m, double epsilon, std::size_t winner);

// Joint winner-relaxed SGD over all predictors. X must already be
// standardized. Deterministic for a fixed config seed. Throws
// NumericalDivergence when parameters stop being finite.
HypothesisEnsemble train_ensemble(const Matrix& x, const Vector& y,
                                  const MhpConfig& cfg);

}  // namespace srbfn
