#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "core/evaluation.hpp"

namespace srbfn {

// Axis values for the full hyper-parameter product. Defaults are the
// experiment grids; the full product is 11520 combinations, so sweeps
// normally run from the curated 80-entry list instead.
struct SweepGrid {
  std::vector<std::size_t> m_values{2, 5, 10, 20, 35};
  std::vector<std::size_t> kappa_values{20, 200, 2000};
  std::vector<double> eta_values{0.03, 0.3};
  std::vector<double> chi_values{0.0001, 0.01, 0.1, 1.0};
  std::vector<double> epsilon_values{0.0, 0.1, 0.35, 0.5};
  std::vector<double> lambda_p_values{0.0, 0.0001, 0.01, 0.07};
  std::vector<double> lambda_s_values{0.0, 3.0, 5.0};
  std::size_t epochs = 50;

  std::size_t product_count() const;
};

// One sweep row: a training configuration plus the ridge strength for the
// closed-form solve.
struct SweepEntry {
  MhpConfig config;
  double lambda_s = 0.0;
};

// Full Cartesian product in canonical (outer-to-inner: M, kappa, eta, chi,
// epsilon, lambda_p, lambda_s) order. Combinations with M = 1 and epsilon > 0
// are skipped as degenerate.
std::vector<SweepEntry> expand_grid(const SweepGrid& grid);

// The shipped 80-entry list: every (M, epsilon) pair crossed with all
// lambda_s values at default (kappa=20, eta=0.03, chi=0.01, lambda_p=1e-4),
// padded with kappa/eta/chi/lambda_p variations and the single-hypothesis
// case. All values come from the experiment grids. epochs = 20 throughout.
std::vector<SweepEntry> curated_entries();

std::vector<SweepEntry> load_entries(const std::string& path);
void save_entries(const std::vector<SweepEntry>& entries, std::size_t epochs,
                  const std::string& path);

struct SweepOptions {
  std::size_t k = 10;
  std::size_t n_sims = 10;
  std::uint64_t master_seed = 0;
  std::size_t workers = 1;
  std::size_t subsample = 0;  // 0 = use every row
  std::string dataset_tag;    // recorded in the results header
  bool resume = true;
};

// Runs every entry as k x n_sims cells, reusing one trained ensemble for all
// lambda_s values that share a training configuration and for the arithmetic
// baseline. Results stream to `results_path` as line-delimited JSON in a
// deterministic order (header first, then rows grouped by training config in
// list order), so an interrupted sweep leaves a clean prefix and rerunning
// completes only what is missing.
void run_sweep(const RegressionDataset& data, const std::vector<SweepEntry>& entries,
               const SweepOptions& opts, const std::string& results_path);

struct ResultsFile {
  int version = 0;
  std::string dataset_tag;
  std::uint64_t master_seed = 0;
  std::size_t k = 0;
  std::size_t n_sims = 0;
  std::size_t subsample = 0;
  std::size_t expected_rows = 0;
  std::vector<RunResult> results;
};

ResultsFile read_results(const std::string& path);

// Writes summary.csv, diversity.csv, regularization.csv and
// epsilon_comparison.csv under out_dir; returns a JSON digest of the same
// numbers. `plot_only` restricts output to the two plot-data tables.
std::string write_report(const ResultsFile& rf, const std::string& out_dir,
                         bool plot_only = false);

}  // namespace srbfn
