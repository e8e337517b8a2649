#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "core/matrix.hpp"

namespace srbfn {

// What the loader did to the raw file to produce a clean table.
struct CleaningStats {
  std::size_t raw_rows = 0;       // data rows with at least one value
  std::size_t dropped_rows = 0;   // removed because the target was missing
  std::size_t imputed_cells = 0;  // feature cells replaced by column means
};

// A fully cleaned regression problem: no sentinels, no missing cells.
// Features are in original units here; standardization is a per-fold
// operation done by the harness, never by the loader.
struct RegressionDataset {
  Matrix features;                         // N x d
  Vector targets;                          // N, original units
  std::vector<std::string> feature_names;  // d
  std::string target_name;
  CleaningStats cleaning;
};

// Loads the hourly air-quality sensor export: semicolon-delimited, decimal
// commas, -200 encodes missing, two unnamed trailing columns. Target: AH.
// Rows with missing target are dropped; remaining missing feature cells are
// imputed with the column mean over non-missing entries.
RegressionDataset load_air_quality(const std::string& path);

// Loads the appliance-energy export: plain comma CSV, first column a
// timestamp (dropped). Target: Appliances.
RegressionDataset load_energy(const std::string& path);

// Generic comma CSV with a header; `target` names the label column, every
// other column must parse as a number and becomes a feature.
RegressionDataset load_csv(const std::string& path, const std::string& target);

// Column z-scoring fitted on training rows only. Columns whose std falls
// below 1e-12 at fit time carry no information and are dropped by apply().
struct Standardizer {
  Vector means;                    // per kept column, in input order
  Vector stds;                     // matching means, all > 0
  std::vector<std::size_t> kept;   // indices into the original columns
  std::size_t input_cols = 0;      // width of the matrix this was fitted on
};

Standardizer fit_standardizer(const Matrix& features);
Matrix apply_standardizer(const Standardizer& s, const Matrix& features);

// k-fold assignment: seeded shuffle, then round-robin deal, so fold sizes
// differ by at most one.
struct FoldSplit {
  std::size_t k = 0;
  std::vector<std::size_t> assignments;  // length N, values in [0, k)
};

FoldSplit kfold_split(std::size_t n, std::size_t k, std::uint64_t seed);

// Row subsets for one fold.
void fold_indices(const FoldSplit& split, std::size_t fold,
                  std::vector<std::size_t>& train, std::vector<std::size_t>& test);

Matrix take_rows(const Matrix& m, const std::vector<std::size_t>& rows);
Vector take_rows(const Vector& v, const std::vector<std::size_t>& rows);

}  // namespace srbfn
