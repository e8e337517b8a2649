#pragma once

#include "core/matrix.hpp"
#include "core/trainer.hpp"

namespace srbfn {

enum class StructuredSource { Train, Test };

// N x M matrix of ensemble predictions: column j holds predictor j's output
// on every input row.
struct StructuredDataset {
  Matrix d;  // N x M
  double epsilon = 0.0;
  StructuredSource source = StructuredSource::Train;
};

// Per-column Gaussian bump parameters, fitted on training predictions only.
struct BasisParams {
  Vector mu;     // column means
  Vector sigma;  // column sample stds, floored at sigma_floor()
};

constexpr double sigma_floor() { return 1e-8; }

StructuredDataset build_structured(const HypothesisEnsemble& ens, const Matrix& x,
                                   StructuredSource source);

BasisParams fit_basis(const StructuredDataset& sd);

// Phi[i][j] = exp(-(D[i][j] - mu_j)^2 / (2 sigma_j^2)); every entry in (0, 1].
Matrix feature_map(const StructuredDataset& sd, const BasisParams& basis);

}  // namespace srbfn
