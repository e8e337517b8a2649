#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "core/dataset.hpp"
#include "core/trainer.hpp"

namespace srbfn {

double rmse(const Vector& predicted, const Vector& actual);

// Mean and sample standard deviation (N-1), ignoring NaN entries.
void mean_std(const Vector& values, double& mean, double& stddev);

// First and third quartiles with linear interpolation between order
// statistics (position p * (n - 1)).
void quartiles(Vector values, double& q1, double& q3);

// One model's cross-validation record for one configuration. The rmses list
// is laid out sim-major (index = sim * k + fold); diverged cells hold NaN and
// are excluded from the statistics but counted in `failed`.
struct RunResult {
  MhpConfig config;
  double lambda_s = 0.0;
  std::string model;  // "srbfn" | "arithmetic" | "linear"
  std::size_t k = 0;
  std::size_t n_sims = 0;
  Vector rmses;
  std::size_t failed = 0;
  double mean = 0.0;
  double stddev = 0.0;
  double seconds = 0.0;

  void finalize();  // recompute failed/mean/stddev from rmses
};

struct CvOutcome {
  RunResult srbfn;
  RunResult arithmetic;
  RunResult linear;
};

// Canonical identity of a configuration, excluding the seed (cell seeds are
// derived, not configured) and excluding lambda_s (the closed-form solve is
// downstream of training). Used for seed mixing and sweep grouping.
std::string config_key(const MhpConfig& cfg);
std::uint64_t config_hash(const MhpConfig& cfg);

// Deterministic per-cell seeds. Folds depend only on (master, sim) so every
// configuration sees the same fold partitions, which makes cross-config
// comparisons paired.
std::uint64_t fold_split_seed(std::uint64_t master_seed, std::size_t sim);
std::uint64_t cell_seed(std::uint64_t master_seed, const MhpConfig& cfg,
                        std::size_t fold, std::size_t sim);

// k-fold x n_sims evaluation of the structured model and both baselines on
// shared folds and shared trained ensembles.
CvOutcome cross_validate(const RegressionDataset& data, const MhpConfig& cfg,
                         double lambda_s, std::size_t k, std::size_t n_sims,
                         std::uint64_t master_seed);

// Table-style summary over many results: per model, the best (lowest-mean)
// configuration and the quartiles of mean RMSE across configurations.
struct ModelSummary {
  std::string model;
  double top_mean = 0.0;
  double top_std = 0.0;
  double q1 = 0.0;
  double q3 = 0.0;
  std::size_t configs = 0;
  std::size_t failed_cells = 0;
};
std::vector<ModelSummary> quartile_summary(const std::vector<RunResult>& results);

// Mean RMSE and 90% normal-approximation CI half-width per (M, epsilon)
// cell, pooled over fold x sim observations of the structured model.
struct DiversityCell {
  std::size_t m = 0;
  double epsilon = 0.0;
  double mean = 0.0;
  double ci_half = 0.0;
  std::size_t n = 0;
};
std::vector<DiversityCell> diversity_curve(const std::vector<RunResult>& results);

// Aggregates across configurations per lambda_s: mean of config means and
// mean of config stds, for the structured model.
struct RegularizationRow {
  double lambda_s = 0.0;
  double mean_of_means = 0.0;
  double mean_of_stds = 0.0;
  std::size_t configs = 0;
};
std::vector<RegularizationRow> regularization_profile(
    const std::vector<RunResult>& results);

// Paired per-(fold, sim, lambda_s) RMSE differences between two epsilon
// values at fixed M for the structured model: diff = rmse(eps_hi) -
// rmse(eps_lo). Pairing is valid because folds are shared across configs.
struct EpsilonComparison {
  std::size_t m = 0;
  double eps_hi = 0.0;
  double eps_lo = 0.0;
  double mean_diff = 0.0;
  double ci_half = 0.0;  // 90% normal approximation
  std::size_t n = 0;
};
EpsilonComparison epsilon_comparison(const std::vector<RunResult>& results,
                                     std::size_t m, double eps_hi, double eps_lo);

}  // namespace srbfn
