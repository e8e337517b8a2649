#include "core/dataset.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <limits>
#include <numeric>
#include <sstream>

#include "core/rng.hpp"

namespace srbfn {

namespace {

constexpr double kMissing = std::numeric_limits<double>::quiet_NaN();

std::vector<std::string> split_line(const std::string& line, char delim) {
  std::vector<std::string> out;
  std::string cell;
  std::stringstream ss(line);
  while (std::getline(ss, cell, delim)) out.push_back(cell);
  if (!line.empty() && line.back() == delim) out.push_back("");
  return out;
}

std::string strip(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && (std::isspace(static_cast<unsigned char>(s[b])))) ++b;
  while (e > b && (std::isspace(static_cast<unsigned char>(s[e - 1])))) --e;
  return s.substr(b, e - b);
}

double parse_number(std::string cell, bool comma_decimal, const std::string& ctx) {
  cell = strip(cell);
  if (cell.empty()) fail(ErrorCode::MalformedCsv, "empty numeric cell " + ctx);
  if (comma_decimal) std::replace(cell.begin(), cell.end(), ',', '.');
  std::size_t pos = 0;
  double v;
  try {
    v = std::stod(cell, &pos);
  } catch (const std::exception&) {
    fail(ErrorCode::MalformedCsv, "non-numeric cell '" + cell + "' " + ctx);
  }
  if (pos != cell.size())
    fail(ErrorCode::MalformedCsv, "trailing junk in cell '" + cell + "' " + ctx);
  return v;
}

std::ifstream open_or_fail(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::FileNotFound, "cannot open " + path);
  return in;
}

// Reads all non-empty lines, tolerating CRLF endings.
std::vector<std::string> read_lines(std::istream& in) {
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty()) lines.push_back(line);
  }
  return lines;
}

RegressionDataset assemble(std::vector<std::vector<double>>& rows,
                           const std::vector<std::string>& names,
                           std::size_t target_col, const std::string& target_name,
                           bool impute_missing) {
  if (rows.empty()) fail(ErrorCode::EmptyAfterCleaning, "no usable data rows");
  const std::size_t width = names.size();
  const std::size_t raw_rows = rows.size();

  // Drop rows whose target is missing.
  std::vector<std::vector<double>> kept;
  kept.reserve(rows.size());
  for (auto& r : rows)
    if (!std::isnan(r[target_col])) kept.push_back(std::move(r));
  if (kept.empty()) fail(ErrorCode::EmptyAfterCleaning, "all rows lack a target value");

  // Column means over non-missing entries, for imputation.
  std::vector<double> col_sum(width, 0.0);
  std::vector<std::size_t> col_n(width, 0);
  for (const auto& r : kept)
    for (std::size_t j = 0; j < width; ++j)
      if (!std::isnan(r[j])) {
        col_sum[j] += r[j];
        ++col_n[j];
      }

  RegressionDataset ds;
  ds.target_name = target_name;
  for (std::size_t j = 0; j < width; ++j)
    if (j != target_col) ds.feature_names.push_back(names[j]);

  ds.features = Matrix(kept.size(), width - 1);
  ds.targets.resize(kept.size());
  ds.cleaning.raw_rows = raw_rows;
  ds.cleaning.dropped_rows = raw_rows - kept.size();
  for (std::size_t i = 0; i < kept.size(); ++i) {
    std::size_t out_j = 0;
    for (std::size_t j = 0; j < width; ++j) {
      double v = kept[i][j];
      if (std::isnan(v)) {
        if (!impute_missing || col_n[j] == 0)
          fail(ErrorCode::MalformedCsv, "missing value in column " + names[j]);
        v = col_sum[j] / static_cast<double>(col_n[j]);
        ++ds.cleaning.imputed_cells;
      }
      if (j == target_col)
        ds.targets[i] = v;
      else
        ds.features.at(i, out_j++) = v;
    }
  }
  return ds;
}

}  // namespace

RegressionDataset load_air_quality(const std::string& path) {
  auto in = open_or_fail(path);
  auto lines = read_lines(in);
  if (lines.size() < 2) fail(ErrorCode::MalformedCsv, "file has no data rows: " + path);

  auto header = split_line(lines[0], ';');
  // The published file ends each line with two empty unnamed columns.
  while (!header.empty() && strip(header.back()).empty()) header.pop_back();
  if (header.size() < 3 || strip(header[0]) != "Date" || strip(header[1]) != "Time")
    fail(ErrorCode::MalformedCsv, "expected semicolon header starting Date;Time in " + path);

  std::vector<std::string> names;
  for (std::size_t j = 2; j < header.size(); ++j) names.push_back(strip(header[j]));
  const auto target_it = std::find(names.begin(), names.end(), "AH");
  if (target_it == names.end())
    fail(ErrorCode::MalformedCsv, "no AH column in " + path);
  const std::size_t target_col = static_cast<std::size_t>(target_it - names.begin());

  std::vector<std::vector<double>> rows;
  for (std::size_t li = 1; li < lines.size(); ++li) {
    auto cells = split_line(lines[li], ';');
    while (cells.size() > header.size() && strip(cells.back()).empty()) cells.pop_back();
    // The file's tail has rows of bare semicolons; skip fully empty rows.
    bool all_empty = true;
    for (const auto& c : cells)
      if (!strip(c).empty()) {
        all_empty = false;
        break;
      }
    if (all_empty) continue;
    if (cells.size() != header.size())
      fail(ErrorCode::MalformedCsv,
           "row " + std::to_string(li + 1) + " has " + std::to_string(cells.size()) +
               " cells, expected " + std::to_string(header.size()));
    std::vector<double> row(names.size());
    for (std::size_t j = 0; j < names.size(); ++j) {
      const double v = parse_number(cells[j + 2], /*comma_decimal=*/true,
                                    "(row " + std::to_string(li + 1) + ")");
      row[j] = (v == -200.0) ? kMissing : v;
    }
    rows.push_back(std::move(row));
  }
  return assemble(rows, names, target_col, "AH", /*impute_missing=*/true);
}

RegressionDataset load_energy(const std::string& path) {
  auto in = open_or_fail(path);
  auto lines = read_lines(in);
  if (lines.size() < 2) fail(ErrorCode::MalformedCsv, "file has no data rows: " + path);

  auto header = split_line(lines[0], ',');
  std::vector<std::string> names;
  for (auto& h : header) {
    auto s = strip(h);
    // The published file quotes its header names.
    if (s.size() >= 2 && s.front() == '"' && s.back() == '"') s = s.substr(1, s.size() - 2);
    names.push_back(s);
  }
  if (names.empty() || names[0] != "date")
    fail(ErrorCode::MalformedCsv, "expected a leading date column in " + path);
  names.erase(names.begin());
  const auto target_it = std::find(names.begin(), names.end(), "Appliances");
  if (target_it == names.end())
    fail(ErrorCode::MalformedCsv, "no Appliances column in " + path);
  const std::size_t target_col = static_cast<std::size_t>(target_it - names.begin());

  std::vector<std::vector<double>> rows;
  for (std::size_t li = 1; li < lines.size(); ++li) {
    auto cells = split_line(lines[li], ',');
    if (cells.size() != names.size() + 1)
      fail(ErrorCode::MalformedCsv,
           "row " + std::to_string(li + 1) + " has " + std::to_string(cells.size()) +
               " cells, expected " + std::to_string(names.size() + 1));
    std::vector<double> row(names.size());
    for (std::size_t j = 0; j < names.size(); ++j) {
      auto cell = strip(cells[j + 1]);
      if (cell.size() >= 2 && cell.front() == '"' && cell.back() == '"')
        cell = cell.substr(1, cell.size() - 2);
      row[j] = parse_number(cell, /*comma_decimal=*/false,
                            "(row " + std::to_string(li + 1) + ")");
    }
    rows.push_back(std::move(row));
  }
  return assemble(rows, names, target_col, "Appliances", /*impute_missing=*/false);
}

RegressionDataset load_csv(const std::string& path, const std::string& target) {
  auto in = open_or_fail(path);
  auto lines = read_lines(in);
  if (lines.size() < 2) fail(ErrorCode::MalformedCsv, "file has no data rows: " + path);

  auto header = split_line(lines[0], ',');
  std::vector<std::string> names;
  for (auto& h : header) names.push_back(strip(h));
  const auto target_it = std::find(names.begin(), names.end(), target);
  if (target_it == names.end())
    fail(ErrorCode::MalformedCsv, "no '" + target + "' column in " + path);
  const std::size_t target_col = static_cast<std::size_t>(target_it - names.begin());

  std::vector<std::vector<double>> rows;
  for (std::size_t li = 1; li < lines.size(); ++li) {
    auto cells = split_line(lines[li], ',');
    if (cells.size() != names.size())
      fail(ErrorCode::MalformedCsv, "ragged row " + std::to_string(li + 1));
    std::vector<double> row(names.size());
    for (std::size_t j = 0; j < names.size(); ++j)
      row[j] = parse_number(cells[j], false, "(row " + std::to_string(li + 1) + ")");
    rows.push_back(std::move(row));
  }
  return assemble(rows, names, target_col, target, /*impute_missing=*/false);
}

Standardizer fit_standardizer(const Matrix& features) {
  Vector means, stds;
  column_mean_std(features, means, stds);
  Standardizer s;
  s.input_cols = features.cols();
  for (std::size_t j = 0; j < features.cols(); ++j) {
    if (stds[j] < 1e-12) continue;  // constant column: no information, drop
    s.kept.push_back(j);
    s.means.push_back(means[j]);
    s.stds.push_back(stds[j]);
  }
  return s;
}

Matrix apply_standardizer(const Standardizer& s, const Matrix& features) {
  if (features.cols() != s.input_cols)
    fail(ErrorCode::ShapeMismatch,
         "standardizer was fitted on " + std::to_string(s.input_cols) +
             " columns, got " + std::to_string(features.cols()));
  Matrix out(features.rows(), s.kept.size());
  for (std::size_t i = 0; i < features.rows(); ++i)
    for (std::size_t j = 0; j < s.kept.size(); ++j)
      out.at(i, j) = (features.at(i, s.kept[j]) - s.means[j]) / s.stds[j];
  return out;
}

FoldSplit kfold_split(std::size_t n, std::size_t k, std::uint64_t seed) {
  if (k < 2 || n < 2 * k)
    fail(ErrorCode::InvalidFoldCount,
         "kfold_split: need k >= 2 and n >= 2k (n=" + std::to_string(n) +
             ", k=" + std::to_string(k) + ")");
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  Rng rng(seed);
  rng.shuffle(order);
  FoldSplit split;
  split.k = k;
  split.assignments.resize(n);
  for (std::size_t pos = 0; pos < n; ++pos)
    split.assignments[order[pos]] = pos % k;
  return split;
}

void fold_indices(const FoldSplit& split, std::size_t fold,
                  std::vector<std::size_t>& train, std::vector<std::size_t>& test) {
  train.clear();
  test.clear();
  for (std::size_t i = 0; i < split.assignments.size(); ++i)
    (split.assignments[i] == fold ? test : train).push_back(i);
}

Matrix take_rows(const Matrix& m, const std::vector<std::size_t>& rows) {
  Matrix out(rows.size(), m.cols());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out.at(i, j) = m.at(rows[i], j);
  return out;
}

Vector take_rows(const Vector& v, const std::vector<std::size_t>& rows) {
  Vector out(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) out[i] = v[rows[i]];
  return out;
}

}  // namespace srbfn
