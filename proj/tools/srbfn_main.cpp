// Command-line front end for the srbfn shared library.
//
// Commands: validate, train, sweep, report, plot-data. Every command is
// deterministic given its inputs, flags, and seed. Exit codes are a stable
// scripting contract: 0 success, 1 computation failure (divergence, solver
// breakdown, I/O), 2 usage or input error (bad flags, missing or malformed
// files, invalid configurations).
//
// Options may also be supplied through --config FILE (INI format, one
// `[section]` per command); explicit flags always win over file values.
// SRBFN_OUT_DIR, when set, is the default output directory.
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <srbfn/srbfn.h>

using nlohmann::json;

namespace {

// Exit-code policy. Input and configuration problems are usage errors (2);
// failures that arise while computing on valid input are computation
// failures (1).
int exit_code_for(srbfn_status st) {
  switch (st) {
    case SRBFN_OK:
      return 0;
    case SRBFN_ERR_NOT_POSITIVE_DEFINITE:
    case SRBFN_ERR_NUMERICAL_DIVERGENCE:
    case SRBFN_ERR_INSUFFICIENT_OBSERVATIONS:
    case SRBFN_ERR_IO:
    case SRBFN_ERR_INTERNAL:
      return 1;
    default:
      return 2;
  }
}

int report_failure(srbfn_status st, const std::string& while_doing) {
  std::cerr << "error: " << while_doing << ": " << srbfn_last_error() << "\n";
  return exit_code_for(st);
}

// Takes ownership of a library string and frees it.
std::string take(char* s) {
  std::string out = s ? s : "";
  srbfn_string_free(s);
  return out;
}

struct DatasetArgs {
  std::string path;
  std::string kind = "csv";  // air | energy | csv
  std::string target;        // column name, csv kind only
};

void add_dataset_options(CLI::App* cmd, DatasetArgs& args) {
  cmd->add_option("--data", args.path, "Path to the dataset file");
  cmd->add_option("--dataset", args.kind,
                  "Dataset kind: air (hourly air-quality export), energy "
                  "(appliance-energy export), or csv (generic numeric CSV)")
      ->check(CLI::IsMember({"air", "energy", "csv"}));
  cmd->add_option("--target", args.target,
                  "Label column name (csv datasets only)");
}

// Commands that read a dataset check their arguments here, after parsing, so
// that side-effect-free paths (--dump-configs) can skip the requirement.
int check_dataset_args(const DatasetArgs& args) {
  if (args.path.empty()) {
    std::cerr << "error: --data is required\n";
    return 2;
  }
  if (args.kind == "csv" && args.target.empty()) {
    std::cerr << "error: csv datasets need --target\n";
    return 2;
  }
  return 0;
}

// Loads per the declared kind; returns NULL and sets last-error on failure.
srbfn_dataset* open_dataset(const DatasetArgs& args, srbfn_status* st) {
  srbfn_dataset* ds = nullptr;
  if (args.kind == "air") {
    *st = srbfn_dataset_load_air(args.path.c_str(), &ds);
  } else if (args.kind == "energy") {
    *st = srbfn_dataset_load_energy(args.path.c_str(), &ds);
  } else {
    *st = srbfn_dataset_load_csv(args.path.c_str(), args.target.c_str(), &ds);
  }
  return ds;
}

struct HyperArgs {
  std::size_t m = 5;
  double epsilon = 0.1;
  double eta = 0.03;
  double chi = 0.01;
  double lambda_p = 0.0001;
  std::size_t kappa = 20;
  std::size_t epochs = 50;
  std::uint64_t seed = 0;
};

void add_hyper_options(CLI::App* cmd, HyperArgs& h) {
  cmd->add_option("--M", h.m, "Number of hypotheses")->capture_default_str();
  cmd->add_option("--eps", h.epsilon, "Relaxation share for non-winners")
      ->capture_default_str();
  cmd->add_option("--eta", h.eta, "SGD learning rate")->capture_default_str();
  cmd->add_option("--chi", h.chi, "Weight-init scale")->capture_default_str();
  cmd->add_option("--lambda-p", h.lambda_p, "Predictor L2 penalty")
      ->capture_default_str();
  cmd->add_option("--kappa", h.kappa, "Hidden units per layer")
      ->capture_default_str();
  cmd->add_option("--epochs", h.epochs, "Training epochs")->capture_default_str();
  cmd->add_option("--seed", h.seed, "Master seed")->capture_default_str();
}

std::string hyper_to_config_json(const HyperArgs& h) {
  const json j{{"M", h.m},           {"epsilon", h.epsilon},
               {"eta", h.eta},       {"chi", h.chi},
               {"lambda_p", h.lambda_p}, {"kappa", h.kappa},
               {"epochs", h.epochs}, {"seed", h.seed}};
  return j.dump();
}

bool write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  out << content;
  return static_cast<bool>(out);
}

// ---- validate --------------------------------------------------------------

int cmd_validate(const DatasetArgs& args) {
  if (int code = check_dataset_args(args)) return code;
  srbfn_status st = SRBFN_OK;
  srbfn_dataset* ds = open_dataset(args, &st);
  if (!ds) return report_failure(st, "loading " + args.path);

  char* info_str = nullptr;
  if (srbfn_dataset_info_json(ds, &info_str) != SRBFN_OK) {
    srbfn_dataset_free(ds);
    return report_failure(SRBFN_ERR_INTERNAL, "describing " + args.path);
  }
  const json info = json::parse(take(info_str));
  const json& cleaning = info.at("cleaning");
  std::cout << "dataset: " << args.path << "\n"
            << "target: " << info.at("target").get<std::string>() << "\n"
            << "raw rows: " << cleaning.at("raw_rows").get<std::size_t>() << "\n"
            << "usable rows: " << info.at("rows").get<std::size_t>() << "\n"
            << "feature columns: " << info.at("cols").get<std::size_t>() << "\n"
            << "rows dropped (missing target): "
            << cleaning.at("dropped_rows").get<std::size_t>() << "\n"
            << "feature cells imputed: "
            << cleaning.at("imputed_cells").get<std::size_t>() << "\n";
  srbfn_dataset_free(ds);
  return 0;
}

// ---- train -----------------------------------------------------------------

int cmd_train(const DatasetArgs& data_args, const HyperArgs& hyper,
              double lambda_s, std::size_t k, const std::string& out_dir) {
  if (int code = check_dataset_args(data_args)) return code;
  srbfn_status st = SRBFN_OK;
  srbfn_dataset* ds = open_dataset(data_args, &st);
  if (!ds) return report_failure(st, "loading " + data_args.path);

  const std::string config = hyper_to_config_json(hyper);
  srbfn_model* model = nullptr;
  st = srbfn_train(ds, config.c_str(), lambda_s, &model);
  if (st != SRBFN_OK) {
    srbfn_dataset_free(ds);
    return report_failure(st, "training with " + config);
  }

  char* metrics_str = nullptr;
  st = srbfn_fold_metrics(ds, config.c_str(), lambda_s, k, hyper.seed,
                          &metrics_str);
  if (st != SRBFN_OK) {
    srbfn_model_free(model);
    srbfn_dataset_free(ds);
    return report_failure(st, "cross-validating with " + config);
  }
  const std::string metrics = take(metrics_str);

  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  const std::string model_path = out_dir + "/model.json";
  const std::string metrics_path = out_dir + "/metrics.json";
  st = srbfn_model_save(model, model_path.c_str());
  if (st != SRBFN_OK) {
    srbfn_model_free(model);
    srbfn_dataset_free(ds);
    return report_failure(st, "saving " + model_path);
  }
  if (!write_file(metrics_path, metrics + "\n")) {
    srbfn_model_free(model);
    srbfn_dataset_free(ds);
    std::cerr << "error: cannot write " << metrics_path << "\n";
    return 1;
  }

  // Friendly summary: mean held-out error across the folds.
  const json m = json::parse(metrics);
  double total = 0.0;
  std::size_t counted = 0;
  for (const auto& fold : m.at("folds")) {
    if (fold.at("test_rmse").is_null()) continue;
    total += fold.at("test_rmse").get<double>();
    ++counted;
  }
  std::cout << "model: " << model_path << "\n"
            << "metrics: " << metrics_path << "\n";
  if (counted > 0)
    std::cout << "mean test RMSE over " << counted << " folds: "
              << total / static_cast<double>(counted) << "\n";
  srbfn_model_free(model);
  srbfn_dataset_free(ds);
  return 0;
}

// ---- sweep -----------------------------------------------------------------

struct SweepArgs {
  std::string configs_path;  // non-empty selects file mode
  bool grid = false;
  std::vector<std::size_t> m_values{2, 5, 10, 20, 35};
  std::vector<std::size_t> kappa_values{20, 200, 2000};
  std::vector<double> eta_values{0.03, 0.3};
  std::vector<double> chi_values{0.0001, 0.01, 0.1, 1.0};
  std::vector<double> epsilon_values{0.0, 0.1, 0.35, 0.5};
  std::vector<double> lambda_p_values{0.0, 0.0001, 0.01, 0.07};
  std::vector<double> lambda_s_values{0.0, 3.0, 5.0};
  std::size_t epochs = 0;  // 0 keeps each entry's own value
  std::size_t k = 10;
  std::size_t sims = 10;
  std::uint64_t seed = 0;
  std::size_t workers = 1;
  std::size_t subsample = 0;
  bool resume = true;
  std::string results;  // results file; default derived from out_dir
  std::string dump_configs;
};

int cmd_sweep(const DatasetArgs& data_args, const SweepArgs& s,
              const std::string& out_dir) {
  if (!s.dump_configs.empty()) {
    const srbfn_status st = srbfn_default_configs_save(s.dump_configs.c_str());
    if (st != SRBFN_OK)
      return report_failure(st, "writing " + s.dump_configs);
    std::cout << "configs: " << s.dump_configs << "\n";
    return 0;
  }

  if (int code = check_dataset_args(data_args)) return code;
  srbfn_status st = SRBFN_OK;
  srbfn_dataset* ds = open_dataset(data_args, &st);
  if (!ds) return report_failure(st, "loading " + data_args.path);

  json options{{"k", s.k},
               {"n_sims", s.sims},
               {"master_seed", s.seed},
               {"workers", s.workers},
               {"subsample", s.subsample},
               {"dataset_tag", data_args.kind},
               {"resume", s.resume},
               {"epochs", s.epochs}};
  if (!s.configs_path.empty()) {
    options["mode"] = "file";
    options["configs_path"] = s.configs_path;
  } else if (s.grid) {
    options["mode"] = "grid";
    options["grid"] = json{{"M", s.m_values},
                           {"kappa", s.kappa_values},
                           {"eta", s.eta_values},
                           {"chi", s.chi_values},
                           {"epsilon", s.epsilon_values},
                           {"lambda_p", s.lambda_p_values},
                           {"lambda_s", s.lambda_s_values}};
  } else {
    options["mode"] = "curated";
  }

  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  const std::string results =
      s.results.empty() ? out_dir + "/results.jsonl" : s.results;
  st = srbfn_sweep_run(ds, options.dump().c_str(), results.c_str());
  srbfn_dataset_free(ds);
  if (st != SRBFN_OK) return report_failure(st, "sweeping to " + results);
  std::cout << "results: " << results << "\n";
  return 0;
}

// ---- report / plot-data ------------------------------------------------------

int cmd_report(const std::string& results, const std::string& out_dir,
               bool plot_only) {
  char* digest_str = nullptr;
  const srbfn_status st =
      srbfn_report(results.c_str(), out_dir.c_str(), plot_only ? 1 : 0,
                   &digest_str);
  if (st != SRBFN_OK) return report_failure(st, "summarizing " + results);
  const json digest = json::parse(take(digest_str));
  std::cout << digest.dump(2) << "\n";
  std::cerr << "tables written to " << out_dir << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Structured radial basis function network experiments"};
  app.require_subcommand(1);
  app.fallthrough();  // global options (--out, --config) may follow a command
  app.set_config("--config", "", "Read options from an INI file");
  app.set_version_flag("--version", srbfn_version());

  std::string out_dir = ".";
  app.add_option("--out", out_dir,
                 "Output directory (env: SRBFN_OUT_DIR)")
      ->envname("SRBFN_OUT_DIR")
      ->capture_default_str();

  // validate
  DatasetArgs validate_data;
  CLI::App* validate =
      app.add_subcommand("validate", "Load a dataset and describe it");
  add_dataset_options(validate, validate_data);

  // train
  DatasetArgs train_data;
  HyperArgs train_hyper;
  double train_lambda_s = 3.0;
  std::size_t train_k = 10;
  CLI::App* train = app.add_subcommand(
      "train", "Train one model and record per-fold metrics");
  add_dataset_options(train, train_data);
  add_hyper_options(train, train_hyper);
  train->add_option("--lambda-s", train_lambda_s, "Ridge strength")
      ->capture_default_str();
  train->add_option("--k", train_k, "Folds for the metrics record")
      ->capture_default_str();

  // sweep
  DatasetArgs sweep_data;
  SweepArgs sweep_args;
  CLI::App* sweep = app.add_subcommand(
      "sweep", "Evaluate many configurations with repeated cross-validation");
  add_dataset_options(sweep, sweep_data);
  sweep->add_option("--configs", sweep_args.configs_path,
                    "Run the configurations in this JSON list");
  CLI::Option* grid_flag = sweep->add_flag(
      "--grid", sweep_args.grid,
      "Run the full grid of the axis options below instead of the built-in "
      "curated list");
  sweep->add_option("--M", sweep_args.m_values, "Grid: hypothesis counts")
      ->delimiter(',')
      ->needs(grid_flag);
  sweep->add_option("--kappa", sweep_args.kappa_values,
                    "Grid: hidden units per layer")
      ->delimiter(',')
      ->needs(grid_flag);
  sweep->add_option("--eta", sweep_args.eta_values, "Grid: learning rates")
      ->delimiter(',')
      ->needs(grid_flag);
  sweep->add_option("--chi", sweep_args.chi_values, "Grid: init scales")
      ->delimiter(',')
      ->needs(grid_flag);
  sweep->add_option("--eps", sweep_args.epsilon_values,
                    "Grid: relaxation shares")
      ->delimiter(',')
      ->needs(grid_flag);
  sweep->add_option("--lambda-p", sweep_args.lambda_p_values,
                    "Grid: predictor penalties")
      ->delimiter(',')
      ->needs(grid_flag);
  sweep->add_option("--lambda-s", sweep_args.lambda_s_values,
                    "Grid: ridge strengths")
      ->delimiter(',')
      ->needs(grid_flag);
  sweep->add_option("--epochs", sweep_args.epochs,
                    "Override training epochs for every entry (0 keeps them)")
      ->capture_default_str();
  sweep->add_option("--k", sweep_args.k, "Cross-validation folds")
      ->capture_default_str();
  sweep->add_option("--sims", sweep_args.sims, "Simulations per configuration")
      ->capture_default_str();
  sweep->add_option("--seed", sweep_args.seed, "Master seed")
      ->capture_default_str();
  sweep->add_option("--workers", sweep_args.workers, "Parallel workers")
      ->capture_default_str();
  sweep->add_option("--subsample", sweep_args.subsample,
                    "Use only this many rows (0 = all); recorded in results")
      ->capture_default_str();
  sweep->add_flag("--resume,!--no-resume", sweep_args.resume,
                  "Continue an interrupted results file (default on)");
  sweep->add_option("--results", sweep_args.results,
                    "Results file (default: <out>/results.jsonl)");
  sweep->add_option("--dump-configs", sweep_args.dump_configs,
                    "Write the built-in configuration list here and exit")
      ->excludes(grid_flag);

  // report / plot-data
  std::string report_results;
  CLI::App* report =
      app.add_subcommand("report", "Summarize a results file into CSV tables");
  report->add_option("results", report_results, "Results file from a sweep")
      ->required();
  std::string plot_results;
  CLI::App* plot = app.add_subcommand(
      "plot-data", "Write only the plot tables (diversity, regularization)");
  plot->add_option("results", plot_results, "Results file from a sweep")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;  // help and version exit 0; bad usage exits 2
  }

  if (validate->parsed()) return cmd_validate(validate_data);
  if (train->parsed())
    return cmd_train(train_data, train_hyper, train_lambda_s, train_k, out_dir);
  if (sweep->parsed()) return cmd_sweep(sweep_data, sweep_args, out_dir);
  if (report->parsed()) return cmd_report(report_results, out_dir, false);
  if (plot->parsed()) return cmd_report(plot_results, out_dir, true);
  return 2;  // unreachable: a subcommand is required
}
