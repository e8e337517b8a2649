#include "core/structured.hpp"

#include <cmath>

namespace srbfn {

StructuredDataset build_structured(const HypothesisEnsemble& ens, const Matrix& x,
                                   StructuredSource source) {
  if (x.cols() != ens.input_dim)
    fail(ErrorCode::ShapeMismatch, "build_structured: input dimension mismatch");
  StructuredDataset sd;
  sd.epsilon = ens.config.epsilon;
  sd.source = source;
  sd.d = Matrix(x.rows(), ens.predictors.size());
  MlpWorkspace ws;
  for (std::size_t j = 0; j < ens.predictors.size(); ++j) {
    ws.resize(ens.predictors[j].kappa);
    for (std::size_t i = 0; i < x.rows(); ++i)
      sd.d.at(i, j) = forward(ens.predictors[j], x.row_ptr(i), x.cols(), ws);
  }
  return sd;
}

BasisParams fit_basis(const StructuredDataset& sd) {
  if (sd.source != StructuredSource::Train)
    fail(ErrorCode::InvalidConfig,
         "fit_basis: basis parameters must come from training predictions");
  if (sd.d.rows() < 2)
    fail(ErrorCode::InsufficientRows, "fit_basis: need at least 2 rows");
  BasisParams basis;
  column_mean_std(sd.d, basis.mu, basis.sigma);
  for (auto& s : basis.sigma)
    if (s < sigma_floor()) s = sigma_floor();
  return basis;
}

Matrix feature_map(const StructuredDataset& sd, const BasisParams& basis) {
  if (sd.d.cols() != basis.mu.size() || basis.mu.size() != basis.sigma.size())
    fail(ErrorCode::ShapeMismatch, "feature_map: basis size mismatch");
  Matrix phi(sd.d.rows(), sd.d.cols());
  for (std::size_t j = 0; j < sd.d.cols(); ++j) {
    const double inv = 1.0 / (2.0 * basis.sigma[j] * basis.sigma[j]);
    for (std::size_t i = 0; i < sd.d.rows(); ++i) {
      const double dev = sd.d.at(i, j) - basis.mu[j];
      phi.at(i, j) = std::exp(-dev * dev * inv);
    }
  }
  return phi;
}

}  // namespace srbfn
