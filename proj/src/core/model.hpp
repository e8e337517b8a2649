#pragma once

#include <string>

#include "core/structured.hpp"

namespace srbfn {

// The structured ensemble model: Gaussian features of the prediction matrix,
// combined linearly with ridge weights fitted in closed form.
struct SRbfnModel {
  HypothesisEnsemble ensemble;
  BasisParams basis;
  Vector w;
  double lambda_s = 0.0;
};

// Solves (Phi^T Phi + lambda_s I) w = Phi^T y. On a non-positive pivot the
// solve is retried once with 1e-10 added to the diagonal; a second failure
// propagates NotPositiveDefinite.
Vector fit_weights(const Matrix& phi, const Vector& y, double lambda_s);

// Full training path on already-standardized features. The caller attaches
// the standardizer to the ensemble for raw-input prediction.
SRbfnModel fit_srbfn(const HypothesisEnsemble& ens, const Matrix& x_std,
                     const Vector& y, double lambda_s);

// Prediction on standardized inputs (harness path: fold standardization is
// done outside).
Vector predict_srbfn_std(const SRbfnModel& model, const Matrix& x_std);

// Prediction on raw inputs using the stored standardizer.
Vector predict_srbfn(const SRbfnModel& model, const Matrix& x_raw);

// Versioned JSON persistence of the whole model (ensemble, basis, weights).
void save_model(const SRbfnModel& model, const std::string& path);
SRbfnModel load_model(const std::string& path);

std::string model_info_json(const SRbfnModel& model);

}  // namespace srbfn
