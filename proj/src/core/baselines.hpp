#pragma once

#include "core/trainer.hpp"

namespace srbfn {

// Uniform average of the M hypotheses' predictions.
Vector arithmetic_combine(const HypothesisEnsemble& ens, const Matrix& x);

// Ridge linear regression with an intercept: coefficients solve
// (Xc^T Xc + lambda I) beta = Xc^T yc on mean-centered data, and the
// intercept restores the means.
struct LinearModel {
  Vector coefficients;
  double intercept = 0.0;
  double lambda = 0.0;
};

LinearModel linear_fit(const Matrix& x, const Vector& y, double lambda);
Vector linear_predict(const LinearModel& m, const Matrix& x);

}  // namespace srbfn
