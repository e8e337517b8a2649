#pragma once

#include <cstddef>

#include "core/matrix.hpp"
#include "core/rng.hpp"

namespace srbfn {

// One base learner: x -> w_out . tanh(W2 tanh(W1 x + b1) + b2) + b_out.
// Two hidden layers of `kappa` neurons each, scalar linear head.
struct MlpParams {
  std::size_t d = 0;      // input dimension
  std::size_t kappa = 0;  // neurons per hidden layer
  Matrix w1;              // kappa x d
  Vector b1;              // kappa
  Matrix w2;              // kappa x kappa
  Vector b2;              // kappa
  Vector w_out;           // kappa
  double b_out = 0.0;
};

// Gradient with the same layout as the parameters it differentiates.
using MlpGradient = MlpParams;

// Weights ~ N(0,1) * chi, biases zero.
MlpParams init_mlp(std::size_t d, std::size_t kappa, double chi, Rng& rng);

// Scratch space for forward/backward so the per-sample training loop does
// not allocate. One instance per predictor per thread.
struct MlpWorkspace {
  Vector a1, a2;    // hidden activations
  Vector dz1, dz2;  // backprop deltas
  void resize(std::size_t kappa) {
    a1.assign(kappa, 0.0);
    a2.assign(kappa, 0.0);
    dz1.assign(kappa, 0.0);
    dz2.assign(kappa, 0.0);
  }
};

double forward(const MlpParams& p, const double* x, std::size_t len, MlpWorkspace& ws);
double forward(const MlpParams& p, const Vector& x);

// Squared-error loss with an L2 penalty of (lambda_p / 2N) ||theta||^2 on
// this predictor's own parameters; the returned gradient is exact
// backpropagation plus (lambda_p / N) * theta (biases included).
// `out` must already have the right shapes (reuse across calls).
double loss_and_gradient(const MlpParams& p, const double* x, std::size_t len,
                         double y, double lambda_p, std::size_t n,
                         MlpWorkspace& ws, MlpGradient& out);

// theta' = theta - eta * weight * g.
void sgd_step(MlpParams& p, const MlpGradient& g, double eta, double weight);

// Flat-index access across every parameter (w1, b1, w2, b2, w_out, b_out, in
// that order). Used by the finite-difference checks and serialization.
std::size_t param_count(const MlpParams& p);
double get_param(const MlpParams& p, std::size_t idx);
void set_param(MlpParams& p, std::size_t idx, double value);

bool all_finite(const MlpParams& p);

MlpGradient make_gradient_like(const MlpParams& p);

}  // namespace srbfn
