#include "srbfn/srbfn.h"

#include <cmath>
#include <cstring>
#include <exception>
#include <filesystem>
#include <new>
#include <string>

#include <json.hpp>

#include "core/baselines.hpp"
#include "core/config_json.hpp"
#include "core/dataset.hpp"
#include "core/evaluation.hpp"
#include "core/model.hpp"
#include "core/sweep.hpp"

using nlohmann::json;

struct srbfn_dataset {
  srbfn::RegressionDataset data;
};

struct srbfn_model {
  srbfn::SRbfnModel model;
};

namespace {

thread_local std::string g_last_error;

srbfn_status set_error(srbfn_status code, const std::string& message) {
  g_last_error = message;
  return code;
}

srbfn_status status_from(const srbfn::Error& e) {
  return set_error(static_cast<srbfn_status>(static_cast<int>(e.code())), e.what());
}

// Runs the body, translating every exception into a status code.
template <typename Fn>
srbfn_status guarded(Fn&& body) {
  try {
    body();
    return SRBFN_OK;
  } catch (const srbfn::Error& e) {
    return status_from(e);
  } catch (const std::bad_alloc&) {
    return set_error(SRBFN_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return set_error(SRBFN_ERR_INTERNAL, e.what());
  } catch (...) {
    return set_error(SRBFN_ERR_INTERNAL, "unknown failure");
  }
}

srbfn_status require(bool ok, const char* what) {
  return ok ? SRBFN_OK : set_error(SRBFN_ERR_NULL_ARGUMENT, what);
}

char* copy_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

srbfn::MhpConfig parse_config(const char* config_json) {
  json j = json::object();
  if (config_json != nullptr && config_json[0] != '\0') {
    try {
      j = json::parse(config_json);
    } catch (const std::exception& e) {
      srbfn::fail(srbfn::ErrorCode::InvalidConfig,
                  std::string("config is not valid JSON: ") + e.what());
    }
    if (!j.is_object())
      srbfn::fail(srbfn::ErrorCode::InvalidConfig, "config must be a JSON object");
  }
  // Fill unspecified keys with the defaults before decoding.
  const json defaults = srbfn::config_to_json(srbfn::MhpConfig{});
  for (auto it = defaults.begin(); it != defaults.end(); ++it)
    if (!j.contains(it.key())) j[it.key()] = it.value();
  for (auto it = j.begin(); it != j.end(); ++it)
    if (!defaults.contains(it.key()))
      srbfn::fail(srbfn::ErrorCode::InvalidConfig,
                  "unknown config key '" + it.key() + "'");
  const srbfn::MhpConfig cfg = srbfn::config_from_json(j);
  cfg.validate();
  return cfg;
}

json result_record(const srbfn::RunResult& r) {
  json rmses = json::array();
  for (double v : r.rmses) rmses.push_back(std::isnan(v) ? json() : json(v));
  return json{{"model", r.model},   {"rmses", std::move(rmses)},
              {"mean", r.mean},     {"std", r.stddev},
              {"failed", r.failed}, {"k", r.k},
              {"n_sims", r.n_sims}};
}

}  // namespace

extern "C" {

const char* srbfn_version(void) { return "1.0.0"; }

const char* srbfn_last_error(void) { return g_last_error.c_str(); }

void srbfn_string_free(char* s) { delete[] s; }

/* ---- Datasets ----------------------------------------------------------- */

srbfn_status srbfn_dataset_load_air(const char* path, srbfn_dataset** out) {
  if (auto st = require(path && out, "path and out must be non-NULL")) return st;
  return guarded([&] {
    *out = new srbfn_dataset{srbfn::load_air_quality(path)};
  });
}

srbfn_status srbfn_dataset_load_energy(const char* path, srbfn_dataset** out) {
  if (auto st = require(path && out, "path and out must be non-NULL")) return st;
  return guarded([&] {
    *out = new srbfn_dataset{srbfn::load_energy(path)};
  });
}

srbfn_status srbfn_dataset_load_csv(const char* path, const char* target,
                                    srbfn_dataset** out) {
  if (auto st = require(path && target && out, "path, target and out must be non-NULL"))
    return st;
  return guarded([&] {
    *out = new srbfn_dataset{srbfn::load_csv(path, target)};
  });
}

srbfn_status srbfn_dataset_from_arrays(const double* features, size_t rows,
                                       size_t cols, const double* targets,
                                       srbfn_dataset** out) {
  if (auto st = require(features && targets && out,
                        "features, targets and out must be non-NULL"))
    return st;
  return guarded([&] {
    if (rows == 0 || cols == 0)
      srbfn::fail(srbfn::ErrorCode::ShapeMismatch,
                  "from_arrays: rows and cols must be positive");
    srbfn::RegressionDataset data;
    data.features = srbfn::Matrix(rows, cols);
    std::memcpy(data.features.data().data(), features,
                rows * cols * sizeof(double));
    data.targets.assign(targets, targets + rows);
    for (size_t j = 0; j < cols; ++j)
      data.feature_names.push_back("x" + std::to_string(j));
    data.target_name = "y";
    data.cleaning.raw_rows = rows;
    *out = new srbfn_dataset{std::move(data)};
  });
}

srbfn_status srbfn_dataset_rows(const srbfn_dataset* ds, size_t* out) {
  if (auto st = require(ds && out, "ds and out must be non-NULL")) return st;
  *out = ds->data.targets.size();
  return SRBFN_OK;
}

srbfn_status srbfn_dataset_cols(const srbfn_dataset* ds, size_t* out) {
  if (auto st = require(ds && out, "ds and out must be non-NULL")) return st;
  *out = ds->data.features.cols();
  return SRBFN_OK;
}

srbfn_status srbfn_dataset_info_json(const srbfn_dataset* ds, char** out) {
  if (auto st = require(ds && out, "ds and out must be non-NULL")) return st;
  return guarded([&] {
    json j{{"rows", ds->data.targets.size()},
           {"cols", ds->data.features.cols()},
           {"feature_names", ds->data.feature_names},
           {"target", ds->data.target_name},
           {"cleaning",
            {{"raw_rows", ds->data.cleaning.raw_rows},
             {"dropped_rows", ds->data.cleaning.dropped_rows},
             {"imputed_cells", ds->data.cleaning.imputed_cells}}}};
    *out = copy_string(j.dump());
  });
}

void srbfn_dataset_free(srbfn_dataset* ds) { delete ds; }

/* ---- Models ------------------------------------------------------------- */

srbfn_status srbfn_train(const srbfn_dataset* ds, const char* config_json,
                         double lambda_s, srbfn_model** out) {
  if (auto st = require(ds && out, "ds and out must be non-NULL")) return st;
  return guarded([&] {
    const srbfn::MhpConfig cfg = parse_config(config_json);
    const srbfn::Standardizer st = srbfn::fit_standardizer(ds->data.features);
    const srbfn::Matrix x_std = srbfn::apply_standardizer(st, ds->data.features);
    srbfn::HypothesisEnsemble ens =
        srbfn::train_ensemble(x_std, ds->data.targets, cfg);
    ens.standardizer = st;
    *out = new srbfn_model{
        srbfn::fit_srbfn(ens, x_std, ds->data.targets, lambda_s)};
  });
}

srbfn_status srbfn_predict(const srbfn_model* model, const double* features,
                           size_t rows, size_t cols, double* out_predictions) {
  if (auto st = require(model && features && out_predictions,
                        "model, features and out_predictions must be non-NULL"))
    return st;
  return guarded([&] {
    if (rows == 0)
      srbfn::fail(srbfn::ErrorCode::ShapeMismatch, "predict: rows must be positive");
    srbfn::Matrix x(rows, cols);
    std::memcpy(x.data().data(), features, rows * cols * sizeof(double));
    const srbfn::Vector pred = srbfn::predict_srbfn(model->model, x);
    std::memcpy(out_predictions, pred.data(), rows * sizeof(double));
  });
}

srbfn_status srbfn_model_input_cols(const srbfn_model* model, size_t* out) {
  if (auto st = require(model && out, "model and out must be non-NULL")) return st;
  *out = model->model.ensemble.standardizer.input_cols;
  return SRBFN_OK;
}

srbfn_status srbfn_model_save(const srbfn_model* model, const char* path) {
  if (auto st = require(model && path, "model and path must be non-NULL")) return st;
  return guarded([&] { srbfn::save_model(model->model, path); });
}

srbfn_status srbfn_model_load(const char* path, srbfn_model** out) {
  if (auto st = require(path && out, "path and out must be non-NULL")) return st;
  return guarded([&] { *out = new srbfn_model{srbfn::load_model(path)}; });
}

srbfn_status srbfn_model_info_json(const srbfn_model* model, char** out) {
  if (auto st = require(model && out, "model and out must be non-NULL")) return st;
  return guarded([&] { *out = copy_string(srbfn::model_info_json(model->model)); });
}

void srbfn_model_free(srbfn_model* model) { delete model; }

/* ---- Evaluation --------------------------------------------------------- */

srbfn_status srbfn_cross_validate(const srbfn_dataset* ds, const char* config_json,
                                  double lambda_s, size_t k, size_t n_sims,
                                  uint64_t master_seed, char** out_json) {
  if (auto st = require(ds && out_json, "ds and out_json must be non-NULL"))
    return st;
  return guarded([&] {
    const srbfn::MhpConfig cfg = parse_config(config_json);
    const srbfn::CvOutcome cv =
        srbfn::cross_validate(ds->data, cfg, lambda_s, k, n_sims, master_seed);
    json j{{"config", srbfn::config_to_json(cfg)},
           {"lambda_s", lambda_s},
           {"k", k},
           {"n_sims", n_sims},
           {"master_seed", master_seed},
           {"srbfn", result_record(cv.srbfn)},
           {"arithmetic", result_record(cv.arithmetic)},
           {"linear", result_record(cv.linear)}};
    j["config"].erase("seed");  // cell seeds are derived from the master seed
    *out_json = copy_string(j.dump());
  });
}

srbfn_status srbfn_fold_metrics(const srbfn_dataset* ds, const char* config_json,
                                double lambda_s, size_t k, uint64_t master_seed,
                                char** out_json) {
  if (auto st = require(ds && out_json, "ds and out_json must be non-NULL"))
    return st;
  return guarded([&] {
    const srbfn::MhpConfig cfg = parse_config(config_json);
    const srbfn::FoldSplit split =
        srbfn::kfold_split(ds->data.targets.size(), k,
                           srbfn::fold_split_seed(master_seed, 0));
    json folds = json::array();
    std::vector<std::size_t> train_idx, test_idx;
    for (std::size_t fold = 0; fold < k; ++fold) {
      srbfn::fold_indices(split, fold, train_idx, test_idx);
      const srbfn::Matrix x_train_raw = srbfn::take_rows(ds->data.features, train_idx);
      const srbfn::Matrix x_test_raw = srbfn::take_rows(ds->data.features, test_idx);
      const srbfn::Vector y_train = srbfn::take_rows(ds->data.targets, train_idx);
      const srbfn::Vector y_test = srbfn::take_rows(ds->data.targets, test_idx);
      const srbfn::Standardizer st = srbfn::fit_standardizer(x_train_raw);
      const srbfn::Matrix x_train = srbfn::apply_standardizer(st, x_train_raw);
      const srbfn::Matrix x_test = srbfn::apply_standardizer(st, x_test_raw);
      srbfn::MhpConfig fold_cfg = cfg;
      fold_cfg.seed = srbfn::cell_seed(master_seed, cfg, fold, 0);
      json rec{{"fold", fold}};
      try {
        const srbfn::HypothesisEnsemble ens =
            srbfn::train_ensemble(x_train, y_train, fold_cfg);
        const srbfn::SRbfnModel model =
            srbfn::fit_srbfn(ens, x_train, y_train, lambda_s);
        rec["train_rmse"] =
            srbfn::rmse(srbfn::predict_srbfn_std(model, x_train), y_train);
        rec["test_rmse"] =
            srbfn::rmse(srbfn::predict_srbfn_std(model, x_test), y_test);
      } catch (const srbfn::Error& e) {
        if (e.code() != srbfn::ErrorCode::NumericalDivergence) throw;
        rec["train_rmse"] = nullptr;
        rec["test_rmse"] = nullptr;
        rec["diverged"] = true;
      }
      folds.push_back(std::move(rec));
    }
    json cfg_json = srbfn::config_to_json(cfg);
    cfg_json.erase("seed");
    json j{{"config", std::move(cfg_json)},
           {"lambda_s", lambda_s},
           {"k", k},
           {"master_seed", master_seed},
           {"folds", std::move(folds)}};
    *out_json = copy_string(j.dump());
  });
}

/* ---- Sweeps and reports -------------------------------------------------- */

srbfn_status srbfn_sweep_run(const srbfn_dataset* ds, const char* options_json,
                             const char* results_path) {
  if (auto st = require(ds && results_path, "ds and results_path must be non-NULL"))
    return st;
  return guarded([&] {
    json j = json::object();
    if (options_json != nullptr && options_json[0] != '\0') {
      try {
        j = json::parse(options_json);
      } catch (const std::exception& e) {
        srbfn::fail(srbfn::ErrorCode::InvalidConfig,
                    std::string("options are not valid JSON: ") + e.what());
      }
    }

    const std::string mode = j.value("mode", "curated");
    std::vector<srbfn::SweepEntry> entries;
    if (mode == "curated") {
      entries = srbfn::curated_entries();
    } else if (mode == "file") {
      const std::string path = j.value("configs_path", "");
      if (path.empty())
        srbfn::fail(srbfn::ErrorCode::InvalidConfig,
                    "mode 'file' requires 'configs_path'");
      entries = srbfn::load_entries(path);
    } else if (mode == "grid") {
      srbfn::SweepGrid grid;
      if (j.contains("grid")) {
        const json& g = j.at("grid");
        if (g.contains("M")) grid.m_values = g.at("M").get<std::vector<std::size_t>>();
        if (g.contains("kappa"))
          grid.kappa_values = g.at("kappa").get<std::vector<std::size_t>>();
        if (g.contains("eta")) grid.eta_values = g.at("eta").get<std::vector<double>>();
        if (g.contains("chi")) grid.chi_values = g.at("chi").get<std::vector<double>>();
        if (g.contains("epsilon"))
          grid.epsilon_values = g.at("epsilon").get<std::vector<double>>();
        if (g.contains("lambda_p"))
          grid.lambda_p_values = g.at("lambda_p").get<std::vector<double>>();
        if (g.contains("lambda_s"))
          grid.lambda_s_values = g.at("lambda_s").get<std::vector<double>>();
      }
      entries = srbfn::expand_grid(grid);
    } else {
      srbfn::fail(srbfn::ErrorCode::InvalidConfig,
                  "unknown sweep mode '" + mode + "'");
    }

    const std::size_t epochs = j.value("epochs", std::size_t{0});
    if (epochs > 0)
      for (auto& e : entries) e.config.epochs = epochs;

    srbfn::SweepOptions opts;
    opts.k = j.value("k", std::size_t{10});
    opts.n_sims = j.value("n_sims", std::size_t{10});
    opts.master_seed = j.value("master_seed", std::uint64_t{0});
    opts.workers = j.value("workers", std::size_t{1});
    opts.subsample = j.value("subsample", std::size_t{0});
    opts.dataset_tag = j.value("dataset_tag", "");
    opts.resume = j.value("resume", true);
    srbfn::run_sweep(ds->data, entries, opts, results_path);
  });
}

srbfn_status srbfn_default_configs_save(const char* path) {
  if (auto st = require(path != nullptr, "path must be non-NULL")) return st;
  return guarded([&] { srbfn::save_entries(srbfn::curated_entries(), 20, path); });
}

srbfn_status srbfn_report(const char* results_path, const char* out_dir,
                          int plot_only, char** out_digest_json) {
  if (auto st = require(results_path && out_dir && out_digest_json,
                        "results_path, out_dir and out_digest_json must be non-NULL"))
    return st;
  return guarded([&] {
    const srbfn::ResultsFile rf = srbfn::read_results(results_path);
    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);  // write_report reports failures
    *out_digest_json =
        copy_string(srbfn::write_report(rf, out_dir, plot_only != 0));
  });
}

} /* extern "C" */
