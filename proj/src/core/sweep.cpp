#include "core/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <condition_variable>
#include <cstdio>
#include <fstream>
#include <limits>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "core/baselines.hpp"
#include "core/config_json.hpp"
#include "core/model.hpp"

namespace srbfn {

using nlohmann::json;

namespace {
constexpr int kResultsVersion = 1;
constexpr double kNan = std::numeric_limits<double>::quiet_NaN();

double now_seconds() {
  using clock = std::chrono::steady_clock;
  return std::chrono::duration<double>(clock::now().time_since_epoch()).count();
}
}  // namespace

std::size_t SweepGrid::product_count() const {
  return m_values.size() * kappa_values.size() * eta_values.size() *
         chi_values.size() * epsilon_values.size() * lambda_p_values.size() *
         lambda_s_values.size();
}

std::vector<SweepEntry> expand_grid(const SweepGrid& grid) {
  std::vector<SweepEntry> out;
  for (std::size_t m : grid.m_values)
    for (std::size_t kappa : grid.kappa_values)
      for (double eta : grid.eta_values)
        for (double chi : grid.chi_values)
          for (double eps : grid.epsilon_values)
            for (double lp : grid.lambda_p_values)
              for (double ls : grid.lambda_s_values) {
                if (m == 1 && eps > 0.0) continue;
                SweepEntry e;
                e.config.m = m;
                e.config.kappa = kappa;
                e.config.eta = eta;
                e.config.chi = chi;
                e.config.epsilon = eps;
                e.config.lambda_p = lp;
                e.config.epochs = grid.epochs;
                e.lambda_s = ls;
                out.push_back(e);
              }
  return out;
}

std::vector<SweepEntry> curated_entries() {
  const std::vector<double> all_lambda_s{0.0, 3.0, 5.0};
  std::vector<SweepEntry> out;
  auto push = [&out](std::size_t m, double eps, std::size_t kappa, double eta,
                     double chi, double lp, double ls) {
    SweepEntry e;
    e.config.m = m;
    e.config.epsilon = eps;
    e.config.kappa = kappa;
    e.config.eta = eta;
    e.config.chi = chi;
    e.config.lambda_p = lp;
    e.config.epochs = 20;
    e.lambda_s = ls;
    out.push_back(e);
  };

  // Base block: every (M, epsilon) pair at defaults, across all lambda_s.
  for (std::size_t m : {2, 5, 10, 20, 35})
    for (double eps : {0.0, 0.1, 0.35, 0.5})
      for (double ls : all_lambda_s) push(m, eps, 20, 0.03, 0.01, 0.0001, ls);

  // Padding: one variation per remaining axis, plus regimes where pure
  // winner-takes-all specialization needs a wider init to break symmetry.
  for (double ls : all_lambda_s) push(2, 0.1, 200, 0.03, 0.01, 0.0001, ls);  // kappa
  for (double ls : all_lambda_s) push(10, 0.35, 20, 0.3, 0.01, 0.0001, ls);  // eta
  for (double ls : all_lambda_s) push(10, 0.35, 20, 0.03, 0.01, 0.07, ls);   // lambda_p
  for (double ls : all_lambda_s) push(1, 0.0, 20, 0.03, 0.01, 0.0001, ls);   // M = 1
  for (double ls : all_lambda_s) push(10, 0.0, 20, 0.03, 0.1, 0.0001, ls);
  for (double ls : all_lambda_s) push(35, 0.0, 20, 0.03, 0.1, 0.0001, ls);
  for (double ls : {0.0, 5.0}) push(35, 0.1, 20, 0.03, 1.0, 0.0001, ls);
  return out;
}

std::vector<SweepEntry> load_entries(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::FileNotFound, "cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    fail(ErrorCode::SchemaMismatch, std::string("config list parse error: ") + e.what());
  }
  if (j.value("format", "") != "srbfn-sweep-configs" || j.value("version", -1) != 1)
    fail(ErrorCode::SchemaMismatch, "unrecognized sweep config format in " + path);
  const std::size_t default_epochs = j.value("epochs", std::size_t{50});
  std::vector<SweepEntry> out;
  for (const auto& cj : j.at("configs")) {
    SweepEntry e;
    e.config.m = cj.at("M").get<std::size_t>();
    e.config.epsilon = cj.at("epsilon").get<double>();
    e.config.eta = cj.at("eta").get<double>();
    e.config.lambda_p = cj.at("lambda_p").get<double>();
    e.config.chi = cj.at("chi").get<double>();
    e.config.kappa = cj.at("kappa").get<std::size_t>();
    e.config.epochs = cj.value("epochs", default_epochs);
    e.lambda_s = cj.at("lambda_s").get<double>();
    e.config.validate();
    out.push_back(e);
  }
  if (out.empty()) fail(ErrorCode::SchemaMismatch, "config list is empty: " + path);
  return out;
}

void save_entries(const std::vector<SweepEntry>& entries, std::size_t epochs,
                  const std::string& path) {
  json configs = json::array();
  for (const auto& e : entries) {
    json cj{{"M", e.config.m},       {"epsilon", e.config.epsilon},
            {"eta", e.config.eta},   {"lambda_p", e.config.lambda_p},
            {"chi", e.config.chi},   {"kappa", e.config.kappa},
            {"lambda_s", e.lambda_s}};
    if (e.config.epochs != epochs) cj["epochs"] = e.config.epochs;
    configs.push_back(std::move(cj));
  }
  json j{{"format", "srbfn-sweep-configs"},
         {"version", 1},
         {"epochs", epochs},
         {"configs", std::move(configs)}};
  std::ofstream out(path);
  if (!out) fail(ErrorCode::IoError, "cannot write " + path);
  out << j.dump(2) << "\n";
}

namespace {

// Entries that share a training configuration: one trained ensemble serves
// every lambda_s in the group plus the arithmetic baseline.
struct Group {
  MhpConfig config;
  std::vector<double> lambda_s;  // in first-appearance order
};

std::vector<Group> group_entries(const std::vector<SweepEntry>& entries) {
  std::vector<Group> groups;
  std::map<std::string, std::size_t> index;
  for (const auto& e : entries) {
    const std::string key = config_key(e.config);
    auto it = index.find(key);
    if (it == index.end()) {
      index.emplace(key, groups.size());
      groups.push_back(Group{e.config, {e.lambda_s}});
    } else {
      auto& ls = groups[it->second].lambda_s;
      if (std::find(ls.begin(), ls.end(), e.lambda_s) == ls.end())
        ls.push_back(e.lambda_s);
    }
  }
  return groups;
}

json result_to_json(const RunResult& r) {
  json cfg = config_to_json(r.config);
  cfg.erase("seed");  // cell seeds are derived from the master seed
  cfg["lambda_s"] = r.lambda_s;
  return json{{"type", "result"}, {"model", r.model},   {"config", std::move(cfg)},
              {"k", r.k},         {"n_sims", r.n_sims}, {"rmses", r.rmses},
              {"failed", r.failed}, {"mean", r.mean},   {"std", r.stddev},
              {"seconds", r.seconds}};
}

RunResult result_from_json(const json& j) {
  RunResult r;
  json cfg = j.at("config");
  r.lambda_s = cfg.at("lambda_s").get<double>();
  cfg.erase("lambda_s");
  cfg["seed"] = 0;
  r.config = config_from_json(cfg);
  r.model = j.at("model").get<std::string>();
  r.k = j.at("k").get<std::size_t>();
  r.n_sims = j.at("n_sims").get<std::size_t>();
  for (const auto& v : j.at("rmses"))
    r.rmses.push_back(v.is_null() ? kNan : v.get<double>());
  r.seconds = j.value("seconds", 0.0);
  r.finalize();
  return r;
}

// Expected row order inside one flushed group: for each lambda_s in group
// order, the structured model, the arithmetic baseline, the linear baseline.
std::size_t rows_per_group(const Group& g) { return 3 * g.lambda_s.size(); }

struct GroupAccum {
  std::vector<Vector> srbfn_rmses;   // per lambda_s
  Vector arith_rmses;
  std::vector<Vector> linear_rmses;  // per lambda_s
  double srbfn_seconds = 0.0;
  double arith_seconds = 0.0;
  double linear_seconds = 0.0;
  std::size_t done_cells = 0;
};

RegressionDataset subsample_dataset(const RegressionDataset& data,
                                    std::size_t subsample, std::uint64_t master_seed) {
  if (subsample == 0 || subsample >= data.targets.size()) return data;
  std::vector<std::size_t> order(data.targets.size());
  std::iota(order.begin(), order.end(), 0);
  Rng rng(combine_seeds(master_seed, mix_seed(0x5B5A3713ULL)));
  rng.shuffle(order);
  order.resize(subsample);
  std::sort(order.begin(), order.end());
  RegressionDataset out;
  out.features = take_rows(data.features, order);
  out.targets = take_rows(data.targets, order);
  out.feature_names = data.feature_names;
  out.target_name = data.target_name;
  return out;
}

}  // namespace

void run_sweep(const RegressionDataset& data, const std::vector<SweepEntry>& entries,
               const SweepOptions& opts, const std::string& results_path) {
  if (entries.empty()) fail(ErrorCode::InvalidConfig, "run_sweep: no entries");
  for (const auto& e : entries) e.config.validate();

  const RegressionDataset working = subsample_dataset(data, opts.subsample, opts.master_seed);
  const std::vector<Group> groups = group_entries(entries);
  const std::size_t cells_per_group = opts.k * opts.n_sims;

  std::size_t expected_rows = 0;
  for (const auto& g : groups) expected_rows += rows_per_group(g);

  const json header{{"type", "header"},
                    {"format", "srbfn-results"},
                    {"version", kResultsVersion},
                    {"dataset", opts.dataset_tag},
                    {"master_seed", opts.master_seed},
                    {"k", opts.k},
                    {"n_sims", opts.n_sims},
                    {"subsample", opts.subsample},
                    {"rows", expected_rows}};

  // Resume: keep the longest prefix of complete groups from an existing file.
  std::vector<std::string> kept_rows;
  std::size_t first_pending_group = 0;
  {
    std::ifstream in(results_path);
    if (opts.resume && in) {
      std::string line;
      if (std::getline(in, line) && !line.empty()) {
        json h;
        try {
          h = json::parse(line);
        } catch (const std::exception&) {
          fail(ErrorCode::SchemaMismatch, "results file has a corrupt header line");
        }
        for (const char* field : {"version", "dataset", "master_seed", "k",
                                  "n_sims", "subsample", "rows"})
          if (h.value(field, json()) != header.at(field))
            fail(ErrorCode::SchemaMismatch,
                 std::string("results file does not match this sweep (field '") +
                     field + "' differs); use a fresh output path");
        std::vector<std::string> rows;
        while (std::getline(in, line))
          if (!line.empty()) rows.push_back(line);
        // Count complete leading groups; drop any partial tail.
        std::size_t consumed = 0;
        for (const auto& g : groups) {
          const std::size_t need = rows_per_group(g);
          if (consumed + need > rows.size()) break;
          bool ok = true;
          for (std::size_t r = 0; r < need && ok; ++r) {
            try {
              const json row = json::parse(rows[consumed + r]);
              ok = row.value("type", "") == "result";
            } catch (const std::exception&) {
              ok = false;
            }
          }
          if (!ok) break;
          consumed += need;
          ++first_pending_group;
        }
        kept_rows.assign(rows.begin(), rows.begin() + consumed);
      }
    }
  }

  std::ofstream out(results_path, std::ios::trunc);
  if (!out) fail(ErrorCode::IoError, "cannot write " + results_path);
  out << header.dump() << "\n";
  for (const auto& row : kept_rows) out << row << "\n";
  out.flush();

  if (first_pending_group == groups.size()) return;  // nothing left to do

  // Shared state for the worker pool.
  std::vector<GroupAccum> accums(groups.size());
  for (std::size_t gi = first_pending_group; gi < groups.size(); ++gi) {
    accums[gi].srbfn_rmses.assign(groups[gi].lambda_s.size(),
                                  Vector(cells_per_group, kNan));
    accums[gi].arith_rmses.assign(cells_per_group, kNan);
    accums[gi].linear_rmses.assign(groups[gi].lambda_s.size(),
                                   Vector(cells_per_group, kNan));
  }

  struct Job {
    std::size_t group, sim, fold;
  };
  std::vector<Job> jobs;
  for (std::size_t gi = first_pending_group; gi < groups.size(); ++gi)
    for (std::size_t sim = 0; sim < opts.n_sims; ++sim)
      for (std::size_t fold = 0; fold < opts.k; ++fold) jobs.push_back({gi, sim, fold});

  // Fold splits depend only on (master seed, sim); share them across groups.
  std::vector<FoldSplit> splits;
  for (std::size_t sim = 0; sim < opts.n_sims; ++sim)
    splits.push_back(kfold_split(working.targets.size(), opts.k,
                                 fold_split_seed(opts.master_seed, sim)));

  std::atomic<std::size_t> next_job{0};
  std::mutex flush_mutex;
  std::size_t next_group_to_write = first_pending_group;
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto flush_ready_groups = [&]() {
    // Caller holds flush_mutex.
    while (next_group_to_write < groups.size() &&
           accums[next_group_to_write].done_cells == cells_per_group) {
      const std::size_t gi = next_group_to_write;
      const Group& g = groups[gi];
      GroupAccum& acc = accums[gi];
      for (std::size_t li = 0; li < g.lambda_s.size(); ++li) {
        RunResult r;
        r.config = g.config;
        r.lambda_s = g.lambda_s[li];
        r.k = opts.k;
        r.n_sims = opts.n_sims;

        r.model = "srbfn";
        r.rmses = acc.srbfn_rmses[li];
        r.seconds = acc.srbfn_seconds;
        r.finalize();
        out << result_to_json(r).dump() << "\n";

        r.model = "arithmetic";
        r.rmses = acc.arith_rmses;
        r.seconds = acc.arith_seconds;
        r.finalize();
        out << result_to_json(r).dump() << "\n";

        r.model = "linear";
        r.rmses = acc.linear_rmses[li];
        r.seconds = acc.linear_seconds;
        r.finalize();
        out << result_to_json(r).dump() << "\n";
      }
      out.flush();
      acc = GroupAccum{};  // release memory
      ++next_group_to_write;
    }
  };

  auto worker = [&]() {
    std::vector<std::size_t> train_idx, test_idx;
    for (;;) {
      {
        std::lock_guard<std::mutex> lk(failure_mutex);
        if (failure) return;
      }
      const std::size_t ji = next_job.fetch_add(1);
      if (ji >= jobs.size()) return;
      const Job job = jobs[ji];
      const Group& g = groups[job.group];
      try {
        fold_indices(splits[job.sim], job.fold, train_idx, test_idx);
        const Matrix x_train_raw = take_rows(working.features, train_idx);
        const Matrix x_test_raw = take_rows(working.features, test_idx);
        const Vector y_train = take_rows(working.targets, train_idx);
        const Vector y_test = take_rows(working.targets, test_idx);
        const Standardizer std_fold = fit_standardizer(x_train_raw);
        const Matrix x_train = apply_standardizer(std_fold, x_train_raw);
        const Matrix x_test = apply_standardizer(std_fold, x_test_raw);

        const std::size_t cell = job.sim * opts.k + job.fold;
        MhpConfig cell_cfg = g.config;
        cell_cfg.seed = cell_seed(opts.master_seed, g.config, job.fold, job.sim);

        Vector srbfn_cell(g.lambda_s.size(), kNan);
        double arith_cell = kNan;
        Vector linear_cell(g.lambda_s.size(), kNan);
        double srbfn_sec = 0.0, arith_sec = 0.0, linear_sec = 0.0;

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
        const double train_sec = now_seconds() - t0;

        if (trained) {
          const StructuredDataset sd_train =
              build_structured(ens, x_train, StructuredSource::Train);
          const BasisParams basis = fit_basis(sd_train);
          const Matrix phi_train = feature_map(sd_train, basis);
          const StructuredDataset sd_test =
              build_structured(ens, x_test, StructuredSource::Test);
          const Matrix phi_test = feature_map(sd_test, basis);

          t0 = now_seconds();
          for (std::size_t li = 0; li < g.lambda_s.size(); ++li) {
            const Vector w = fit_weights(phi_train, y_train, g.lambda_s[li]);
            srbfn_cell[li] = rmse(times(phi_test, w), y_test);
          }
          srbfn_sec = train_sec + (now_seconds() - t0);

          t0 = now_seconds();
          Vector avg(x_test.rows(), 0.0);
          const double inv = 1.0 / static_cast<double>(sd_test.d.cols());
          for (std::size_t i = 0; i < sd_test.d.rows(); ++i) {
            double s = 0.0;
            for (std::size_t j = 0; j < sd_test.d.cols(); ++j) s += sd_test.d.at(i, j);
            avg[i] = s * inv;
          }
          arith_cell = rmse(avg, y_test);
          arith_sec = now_seconds() - t0;
        } else {
          srbfn_sec = train_sec;
        }

        t0 = now_seconds();
        for (std::size_t li = 0; li < g.lambda_s.size(); ++li) {
          const LinearModel lm = linear_fit(x_train, y_train, g.lambda_s[li]);
          linear_cell[li] = rmse(linear_predict(lm, x_test), y_test);
        }
        linear_sec = now_seconds() - t0;

        std::lock_guard<std::mutex> lk(flush_mutex);
        GroupAccum& acc = accums[job.group];
        for (std::size_t li = 0; li < g.lambda_s.size(); ++li) {
          acc.srbfn_rmses[li][cell] = srbfn_cell[li];
          acc.linear_rmses[li][cell] = linear_cell[li];
        }
        acc.arith_rmses[cell] = arith_cell;
        acc.srbfn_seconds += srbfn_sec;
        acc.arith_seconds += arith_sec;
        acc.linear_seconds += linear_sec;
        if (++acc.done_cells == cells_per_group) flush_ready_groups();
      } catch (...) {
        std::lock_guard<std::mutex> lk(failure_mutex);
        if (!failure) failure = std::current_exception();
        return;
      }
    }
  };

  const std::size_t nworkers = std::max<std::size_t>(1, opts.workers);
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t + 1 < nworkers; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

ResultsFile read_results(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::FileNotFound, "cannot open " + path);
  std::string line;
  if (!std::getline(in, line) || line.empty())
    fail(ErrorCode::SchemaMismatch, "results file is empty: " + path);
  json h;
  try {
    h = json::parse(line);
  } catch (const std::exception&) {
    fail(ErrorCode::SchemaMismatch, "corrupt results header in " + path);
  }
  if (h.value("type", "") != "header" || h.value("format", "") != "srbfn-results" ||
      h.value("version", -1) != kResultsVersion)
    fail(ErrorCode::SchemaMismatch, "unrecognized results format in " + path);

  ResultsFile rf;
  rf.version = h.at("version").get<int>();
  rf.dataset_tag = h.value("dataset", "");
  rf.master_seed = h.at("master_seed").get<std::uint64_t>();
  rf.k = h.at("k").get<std::size_t>();
  rf.n_sims = h.at("n_sims").get<std::size_t>();
  rf.subsample = h.value("subsample", std::size_t{0});
  rf.expected_rows = h.value("rows", std::size_t{0});
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    json row;
    try {
      row = json::parse(line);
    } catch (const std::exception&) {
      break;  // partial tail from an interrupted run
    }
    if (row.value("type", "") != "result") continue;
    rf.results.push_back(result_from_json(row));
  }
  if (rf.results.empty())
    fail(ErrorCode::EmptyResults, "results file has no result rows: " + path);
  return rf;
}

namespace {

std::string fmt(double v) {
  if (std::isnan(v)) return "nan";
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.10g", v);
  return buf;
}

}  // namespace

std::string write_report(const ResultsFile& rf, const std::string& out_dir,
                         bool plot_only) {
  const auto open_csv = [&](const std::string& name) {
    std::ofstream f(out_dir + "/" + name);
    if (!f) fail(ErrorCode::IoError, "cannot write " + out_dir + "/" + name);
    return f;
  };

  json digest;
  digest["dataset"] = rf.dataset_tag;
  digest["rows"] = rf.results.size();

  {
    auto f = open_csv("diversity.csv");
    f << "M,epsilon,mean_rmse,ci_half,n\n";
    json arr = json::array();
    for (const auto& c : diversity_curve(rf.results)) {
      f << c.m << "," << fmt(c.epsilon) << "," << fmt(c.mean) << ","
        << fmt(c.ci_half) << "," << c.n << "\n";
      arr.push_back({{"M", c.m},
                     {"epsilon", c.epsilon},
                     {"mean_rmse", c.mean},
                     {"ci_half", c.ci_half},
                     {"n", c.n}});
    }
    digest["diversity"] = std::move(arr);
  }
  {
    // A profile needs at least two ridge strengths; a single-lambda_s sweep
    // still gets the (header-only) table so downstream globs stay simple.
    auto f = open_csv("regularization.csv");
    f << "lambda_s,mean_rmse,mean_std,configs\n";
    std::vector<RegularizationRow> profile;
    try {
      profile = regularization_profile(rf.results);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::InsufficientObservations) throw;
    }
    json arr = json::array();
    for (const auto& row : profile) {
      f << fmt(row.lambda_s) << "," << fmt(row.mean_of_means) << ","
        << fmt(row.mean_of_stds) << "," << row.configs << "\n";
      arr.push_back({{"lambda_s", row.lambda_s},
                     {"mean_rmse", row.mean_of_means},
                     {"mean_std", row.mean_of_stds},
                     {"configs", row.configs}});
    }
    digest["regularization"] = std::move(arr);
  }
  if (plot_only) return digest.dump();

  {
    auto f = open_csv("summary.csv");
    f << "model,top_mean,top_std,q1,q3,configs,failed_cells\n";
    json arr = json::array();
    for (const auto& s : quartile_summary(rf.results)) {
      f << s.model << "," << fmt(s.top_mean) << "," << fmt(s.top_std) << ","
        << fmt(s.q1) << "," << fmt(s.q3) << "," << s.configs << ","
        << s.failed_cells << "\n";
      arr.push_back({{"model", s.model},
                     {"top_mean", s.top_mean},
                     {"top_std", s.top_std},
                     {"q1", s.q1},
                     {"q3", s.q3},
                     {"configs", s.configs},
                     {"failed_cells", s.failed_cells}});
    }
    digest["summary"] = std::move(arr);
  }
  {
    // Every (M, hi, lo) epsilon contrast available in the results, with the
    // conventional (0.35 vs 0) contrast first when present.
    auto f = open_csv("epsilon_comparison.csv");
    f << "M,eps_hi,eps_lo,mean_diff,ci_lo,ci_hi,n\n";
    json arr = json::array();
    std::map<std::size_t, std::vector<double>> eps_by_m;
    for (const auto& r : rf.results)
      if (r.model == "srbfn") {
        auto& v = eps_by_m[r.config.m];
        if (std::find(v.begin(), v.end(), r.config.epsilon) == v.end())
          v.push_back(r.config.epsilon);
      }
    for (auto& [m, epss] : eps_by_m) {
      std::sort(epss.begin(), epss.end());
      for (std::size_t a = 0; a < epss.size(); ++a)
        for (std::size_t b = a + 1; b < epss.size(); ++b) {
          // hi = larger epsilon, lo = smaller
          EpsilonComparison cmp;
          try {
            cmp = epsilon_comparison(rf.results, m, epss[b], epss[a]);
          } catch (const Error&) {
            continue;
          }
          f << cmp.m << "," << fmt(cmp.eps_hi) << "," << fmt(cmp.eps_lo) << ","
            << fmt(cmp.mean_diff) << "," << fmt(cmp.mean_diff - cmp.ci_half) << ","
            << fmt(cmp.mean_diff + cmp.ci_half) << "," << cmp.n << "\n";
          arr.push_back({{"M", cmp.m},
                         {"eps_hi", cmp.eps_hi},
                         {"eps_lo", cmp.eps_lo},
                         {"mean_diff", cmp.mean_diff},
                         {"ci_lo", cmp.mean_diff - cmp.ci_half},
                         {"ci_hi", cmp.mean_diff + cmp.ci_half},
                         {"n", cmp.n}});
        }
    }
    digest["epsilon_comparison"] = std::move(arr);
  }
  return digest.dump();
}

}  // namespace srbfn
