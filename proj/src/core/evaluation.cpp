#include "core/evaluation.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <map>

#include "core/baselines.hpp"
#include "core/model.hpp"

namespace srbfn {

namespace {
constexpr double kNan = std::numeric_limits<double>::quiet_NaN();
constexpr double kZ90 = 1.645;  // two-sided 90% normal quantile

double now_seconds() {
  using clock = std::chrono::steady_clock;
  return std::chrono::duration<double>(clock::now().time_since_epoch()).count();
}
}  // namespace

double rmse(const Vector& predicted, const Vector& actual) {
  if (predicted.size() != actual.size() || predicted.empty())
    fail(ErrorCode::ShapeMismatch, "rmse: length mismatch or empty input");
  double s = 0.0;
  for (std::size_t i = 0; i < predicted.size(); ++i) {
    const double d = predicted[i] - actual[i];
    s += d * d;
  }
  return std::sqrt(s / static_cast<double>(predicted.size()));
}

void mean_std(const Vector& values, double& mean, double& stddev) {
  double s = 0.0;
  std::size_t n = 0;
  for (double v : values)
    if (!std::isnan(v)) {
      s += v;
      ++n;
    }
  if (n == 0) {
    mean = kNan;
    stddev = kNan;
    return;
  }
  mean = s / static_cast<double>(n);
  if (n == 1) {
    stddev = 0.0;
    return;
  }
  double sq = 0.0;
  for (double v : values)
    if (!std::isnan(v)) {
      const double d = v - mean;
      sq += d * d;
    }
  stddev = std::sqrt(sq / static_cast<double>(n - 1));
}

void quartiles(Vector values, double& q1, double& q3) {
  values.erase(std::remove_if(values.begin(), values.end(),
                              [](double v) { return std::isnan(v); }),
               values.end());
  if (values.empty()) fail(ErrorCode::EmptyResults, "quartiles: no values");
  std::sort(values.begin(), values.end());
  const auto interp = [&](double p) {
    const double pos = p * static_cast<double>(values.size() - 1);
    const std::size_t lo = static_cast<std::size_t>(pos);
    const double frac = pos - static_cast<double>(lo);
    if (lo + 1 >= values.size()) return values.back();
    return values[lo] + frac * (values[lo + 1] - values[lo]);
  };
  q1 = interp(0.25);
  q3 = interp(0.75);
}

void RunResult::finalize() {
  failed = 0;
  for (double v : rmses)
    if (std::isnan(v)) ++failed;
  mean_std(rmses, mean, stddev);
}

std::string config_key(const MhpConfig& cfg) {
  char buf[256];
  std::snprintf(buf, sizeof(buf),
                "M=%zu;eps=%.17g;eta=%.17g;lambda_p=%.17g;chi=%.17g;kappa=%zu;epochs=%zu",
                cfg.m, cfg.epsilon, cfg.eta, cfg.lambda_p, cfg.chi, cfg.kappa,
                cfg.epochs);
  return buf;
}

std::uint64_t config_hash(const MhpConfig& cfg) {
  // FNV-1a over the canonical key.
  const std::string key = config_key(cfg);
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : key) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::uint64_t fold_split_seed(std::uint64_t master_seed, std::size_t sim) {
  return combine_seeds(master_seed, mix_seed(0xF01D5EEDULL + sim));
}

std::uint64_t cell_seed(std::uint64_t master_seed, const MhpConfig& cfg,
                        std::size_t fold, std::size_t sim) {
  const std::uint64_t base = combine_seeds(master_seed, config_hash(cfg));
  return combine_seeds(base, combine_seeds(fold, sim));
}

CvOutcome cross_validate(const RegressionDataset& data, const MhpConfig& cfg,
                         double lambda_s, std::size_t k, std::size_t n_sims,
                         std::uint64_t master_seed) {
  cfg.validate();
  if (n_sims < 1) fail(ErrorCode::InvalidConfig, "cross_validate: n_sims >= 1");

  CvOutcome out;
  for (RunResult* r : {&out.srbfn, &out.arithmetic, &out.linear}) {
    r->config = cfg;
    r->lambda_s = lambda_s;
    r->k = k;
    r->n_sims = n_sims;
    r->rmses.assign(k * n_sims, kNan);
    r->seconds = 0.0;
  }
  out.srbfn.model = "srbfn";
  out.arithmetic.model = "arithmetic";
  out.linear.model = "linear";

  std::vector<std::size_t> train_idx, test_idx;
  for (std::size_t sim = 0; sim < n_sims; ++sim) {
    const FoldSplit split =
        kfold_split(data.targets.size(), k, fold_split_seed(master_seed, sim));
    for (std::size_t fold = 0; fold < k; ++fold) {
      fold_indices(split, fold, train_idx, test_idx);
      const Matrix x_train_raw = take_rows(data.features, train_idx);
      const Matrix x_test_raw = take_rows(data.features, test_idx);
      const Vector y_train = take_rows(data.targets, train_idx);
      const Vector y_test = take_rows(data.targets, test_idx);

      const Standardizer std_fold = fit_standardizer(x_train_raw);
      const Matrix x_train = apply_standardizer(std_fold, x_train_raw);
      const Matrix x_test = apply_standardizer(std_fold, x_test_raw);

      const std::size_t cell = sim * k + fold;

      MhpConfig cell_cfg = cfg;
      cell_cfg.seed = cell_seed(master_seed, cfg, fold, sim);
      double t0 = now_seconds();
      bool trained = false;
      HypothesisEnsemble ens;
      try {
        ens = train_ensemble(x_train, y_train, cell_cfg);
        ens.standardizer = std_fold;
        trained = true;
      } catch (const Error& e) {
        if (e.code() != ErrorCode::NumericalDivergence) throw;
      }
      if (trained) {
        const SRbfnModel model = fit_srbfn(ens, x_train, y_train, lambda_s);
        out.srbfn.rmses[cell] = rmse(predict_srbfn_std(model, x_test), y_test);
        out.srbfn.seconds += now_seconds() - t0;

        t0 = now_seconds();
        out.arithmetic.rmses[cell] = rmse(arithmetic_combine(ens, x_test), y_test);
        out.arithmetic.seconds += now_seconds() - t0;
      } else {
        out.srbfn.seconds += now_seconds() - t0;
      }

      t0 = now_seconds();
      const LinearModel lm = linear_fit(x_train, y_train, lambda_s);
      out.linear.rmses[cell] = rmse(linear_predict(lm, x_test), y_test);
      out.linear.seconds += now_seconds() - t0;
    }
  }
  out.srbfn.finalize();
  out.arithmetic.finalize();
  out.linear.finalize();
  return out;
}

std::vector<ModelSummary> quartile_summary(const std::vector<RunResult>& results) {
  if (results.empty()) fail(ErrorCode::EmptyResults, "quartile_summary: no results");
  std::map<std::string, std::vector<const RunResult*>> by_model;
  for (const auto& r : results) by_model[r.model].push_back(&r);

  std::vector<ModelSummary> out;
  for (const auto& [model, rows] : by_model) {
    ModelSummary s;
    s.model = model;
    s.configs = rows.size();
    Vector means;
    const RunResult* best = nullptr;
    for (const auto* r : rows) {
      s.failed_cells += r->failed;
      if (std::isnan(r->mean)) continue;  // every cell diverged
      means.push_back(r->mean);
      if (!best || r->mean < best->mean) best = r;
    }
    if (!best)
      fail(ErrorCode::EmptyResults, "quartile_summary: no usable results for " + model);
    s.top_mean = best->mean;
    s.top_std = best->stddev;
    quartiles(means, s.q1, s.q3);
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<DiversityCell> diversity_curve(const std::vector<RunResult>& results) {
  std::map<std::pair<std::size_t, double>, Vector> cells;
  for (const auto& r : results) {
    if (r.model != "srbfn") continue;
    auto& pool = cells[{r.config.m, r.config.epsilon}];
    for (double v : r.rmses)
      if (!std::isnan(v)) pool.push_back(v);
  }
  if (cells.empty())
    fail(ErrorCode::InsufficientObservations, "diversity_curve: no structured-model results");
  std::vector<DiversityCell> out;
  for (const auto& [key, pool] : cells) {
    if (pool.size() < 2)
      fail(ErrorCode::InsufficientObservations,
           "diversity_curve: need >= 2 observations per (M, epsilon) cell");
    DiversityCell c;
    c.m = key.first;
    c.epsilon = key.second;
    c.n = pool.size();
    double sd;
    mean_std(pool, c.mean, sd);
    c.ci_half = kZ90 * sd / std::sqrt(static_cast<double>(pool.size()));
    out.push_back(c);
  }
  return out;
}

std::vector<RegularizationRow> regularization_profile(
    const std::vector<RunResult>& results) {
  std::map<double, std::pair<Vector, Vector>> rows;  // lambda_s -> (means, stds)
  for (const auto& r : results) {
    if (r.model != "srbfn" || std::isnan(r.mean)) continue;
    rows[r.lambda_s].first.push_back(r.mean);
    rows[r.lambda_s].second.push_back(r.stddev);
  }
  if (rows.size() < 2)
    fail(ErrorCode::InsufficientObservations,
         "regularization_profile: need results spanning >= 2 lambda_s values");
  std::vector<RegularizationRow> out;
  for (const auto& [lambda, lists] : rows) {
    RegularizationRow row;
    row.lambda_s = lambda;
    row.configs = lists.first.size();
    double unused;
    mean_std(lists.first, row.mean_of_means, unused);
    mean_std(lists.second, row.mean_of_stds, unused);
    out.push_back(row);
  }
  return out;
}

EpsilonComparison epsilon_comparison(const std::vector<RunResult>& results,
                                     std::size_t m, double eps_hi, double eps_lo) {
  // Group srbfn rows by everything except epsilon, then pair off hi vs lo.
  std::map<std::string, std::pair<const RunResult*, const RunResult*>> pairs;
  for (const auto& r : results) {
    if (r.model != "srbfn" || r.config.m != m) continue;
    MhpConfig neutral = r.config;
    neutral.epsilon = 0.0;
    char buf[64];
    std::snprintf(buf, sizeof(buf), ";lambda_s=%.17g", r.lambda_s);
    const std::string key = config_key(neutral) + buf;
    if (r.config.epsilon == eps_hi) pairs[key].first = &r;
    if (r.config.epsilon == eps_lo) pairs[key].second = &r;
  }
  Vector diffs;
  for (const auto& [key, pr] : pairs) {
    if (!pr.first || !pr.second) continue;
    const auto& hi = pr.first->rmses;
    const auto& lo = pr.second->rmses;
    if (hi.size() != lo.size()) continue;
    for (std::size_t i = 0; i < hi.size(); ++i)
      if (!std::isnan(hi[i]) && !std::isnan(lo[i])) diffs.push_back(hi[i] - lo[i]);
  }
  if (diffs.size() < 2)
    fail(ErrorCode::InsufficientObservations,
         "epsilon_comparison: fewer than two paired observations for the "
         "requested cell");
  EpsilonComparison cmp;
  cmp.m = m;
  cmp.eps_hi = eps_hi;
  cmp.eps_lo = eps_lo;
  cmp.n = diffs.size();
  double sd;
  mean_std(diffs, cmp.mean_diff, sd);
  cmp.ci_half = kZ90 * sd / std::sqrt(static_cast<double>(diffs.size()));
  return cmp;
}

}  // namespace srbfn
