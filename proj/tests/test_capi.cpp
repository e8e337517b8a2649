// Black-box tests for the shared-library interface. Everything here goes
// through srbfn/srbfn.h alone: opaque handles, status codes, and JSON
// strings. No internal header is included, so these tests double as a
// compile-time check that the public header is self-sufficient.
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include <srbfn/srbfn.h>

using nlohmann::json;

namespace {

// Copies a library-owned string into a std::string and releases it.
std::string take(char* s) {
  std::string out = s ? s : "";
  srbfn_string_free(s);
  return out;
}

std::string write_temp(const std::string& name, const std::string& content) {
  const std::string path = std::string("/tmp/srbfn_capi_") + name;
  std::ofstream out(path);
  out << content;
  return path;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Deterministic synthetic regression table: two features, smooth target.
struct Table {
  std::vector<double> features;  // row-major, n x 2
  std::vector<double> targets;
  size_t rows;
};

Table make_table(size_t n) {
  Table t;
  t.rows = n;
  for (size_t i = 0; i < n; ++i) {
    const double x0 = 0.1 * static_cast<double>(i);
    const double x1 = std::sin(0.7 * static_cast<double>(i));
    t.features.push_back(x0);
    t.features.push_back(x1);
    t.targets.push_back(1.2 * x0 - 0.4 * x1 + 0.05 * std::sin(3.0 * static_cast<double>(i)));
  }
  return t;
}

srbfn_dataset* make_dataset(size_t n) {
  const Table t = make_table(n);
  srbfn_dataset* ds = nullptr;
  REQUIRE(srbfn_dataset_from_arrays(t.features.data(), t.rows, 2,
                                    t.targets.data(), &ds) == SRBFN_OK);
  REQUIRE(ds != nullptr);
  return ds;
}

const char* kConfig =
    R"({"M": 3, "epsilon": 0.1, "eta": 0.03, "chi": 0.01, "lambda_p": 0.0001,)"
    R"( "kappa": 8, "epochs": 10, "seed": 4})";

const char* kAirFixture =
    "Date;Time;CO(GT);PT08.S1(CO);AH;;\n"
    "10/03/2004;18.00.00;2,6;1360;0,7578;;\n"
    "10/03/2004;19.00.00;-200;1292;0,7255;;\n"
    "10/03/2004;20.00.00;2,2;1402;-200;;\n";

const char* kEnergyFixture =
    "\"date\",\"Appliances\",\"lights\",\"T1\",\"rv1\",\"rv2\"\n"
    "\"2016-01-11 17:00:00\",60,30,19.89,13.27,13.27\n"
    "\"2016-01-11 17:10:00\",60,30,19.89,18.60,18.60\n"
    "\"2016-01-11 17:20:00\",50,30,19.89,28.64,28.64\n"
    "\"2016-01-11 17:30:00\",50,40,19.89,45.41,45.41\n"
    "\"2016-01-11 17:40:00\",60,40,19.89,10.08,10.08\n";

}  // namespace

TEST_SUITE("capi") {

TEST_CASE("version and error state start clean") {
  const char* v = srbfn_version();
  REQUIRE(v != nullptr);
  CHECK(std::string(v) == "1.0.0");
  const char* err = srbfn_last_error();
  REQUIRE(err != nullptr);
  CHECK(std::string(err).empty());
}

TEST_CASE("null arguments are rejected with a message") {
  srbfn_dataset* ds = nullptr;
  CHECK(srbfn_dataset_load_air(nullptr, &ds) == SRBFN_ERR_NULL_ARGUMENT);
  CHECK(std::string(srbfn_last_error()).find("non-NULL") != std::string::npos);
  CHECK(srbfn_dataset_load_air("/tmp/x.csv", nullptr) == SRBFN_ERR_NULL_ARGUMENT);
  size_t n = 0;
  CHECK(srbfn_dataset_rows(nullptr, &n) == SRBFN_ERR_NULL_ARGUMENT);
  srbfn_model* model = nullptr;
  CHECK(srbfn_train(nullptr, kConfig, 0.0, &model) == SRBFN_ERR_NULL_ARGUMENT);
  double out = 0;
  CHECK(srbfn_predict(nullptr, &out, 1, 1, &out) == SRBFN_ERR_NULL_ARGUMENT);
  char* s = nullptr;
  CHECK(srbfn_report(nullptr, "/tmp", 0, &s) == SRBFN_ERR_NULL_ARGUMENT);
  CHECK(srbfn_dataset_from_arrays(nullptr, 1, 1, &out, &ds) ==
        SRBFN_ERR_NULL_ARGUMENT);
}

TEST_CASE("freeing null handles is a no-op") {
  srbfn_dataset_free(nullptr);
  srbfn_model_free(nullptr);
  srbfn_string_free(nullptr);
}

TEST_CASE("datasets from dense arrays report their shape") {
  srbfn_dataset* ds = make_dataset(12);
  size_t rows = 0, cols = 0;
  CHECK(srbfn_dataset_rows(ds, &rows) == SRBFN_OK);
  CHECK(srbfn_dataset_cols(ds, &cols) == SRBFN_OK);
  CHECK(rows == 12);
  CHECK(cols == 2);

  char* info = nullptr;
  REQUIRE(srbfn_dataset_info_json(ds, &info) == SRBFN_OK);
  const json j = json::parse(take(info));
  CHECK(j.at("rows") == 12);
  CHECK(j.at("cols") == 2);
  CHECK(j.at("target") == "y");
  CHECK(j.at("feature_names") == json::array({"x0", "x1"}));
  CHECK(j.at("cleaning").at("raw_rows") == 12);
  CHECK(j.at("cleaning").at("dropped_rows") == 0);
  CHECK(j.at("cleaning").at("imputed_cells") == 0);
  srbfn_dataset_free(ds);

  // Degenerate shapes are rejected before any allocation.
  const double one = 1.0;
  srbfn_dataset* bad = nullptr;
  CHECK(srbfn_dataset_from_arrays(&one, 0, 1, &one, &bad) ==
        SRBFN_ERR_SHAPE_MISMATCH);
  CHECK(bad == nullptr);
}

TEST_CASE("csv loading round-trips through the boundary") {
  const std::string path =
      write_temp("generic.csv", "a,b,y\n1,2,3\n4,5,6\n7,8,9\n");
  srbfn_dataset* ds = nullptr;
  REQUIRE(srbfn_dataset_load_csv(path.c_str(), "y", &ds) == SRBFN_OK);
  size_t rows = 0, cols = 0;
  srbfn_dataset_rows(ds, &rows);
  srbfn_dataset_cols(ds, &cols);
  CHECK(rows == 3);
  CHECK(cols == 2);
  srbfn_dataset_free(ds);

  srbfn_dataset* missing_col = nullptr;
  CHECK(srbfn_dataset_load_csv(path.c_str(), "absent", &missing_col) ==
        SRBFN_ERR_MALFORMED_CSV);
  CHECK(std::string(srbfn_last_error()).find("absent") != std::string::npos);

  srbfn_dataset* missing_file = nullptr;
  CHECK(srbfn_dataset_load_csv("/tmp/srbfn_capi_no_such.csv", "y",
                               &missing_file) == SRBFN_ERR_FILE_NOT_FOUND);
  CHECK(std::string(srbfn_last_error()).find("no_such") != std::string::npos);
  std::remove(path.c_str());
}

TEST_CASE("air export loads with its cleaning record") {
  const std::string path = write_temp("air.csv", kAirFixture);
  srbfn_dataset* ds = nullptr;
  REQUIRE(srbfn_dataset_load_air(path.c_str(), &ds) == SRBFN_OK);
  char* info = nullptr;
  REQUIRE(srbfn_dataset_info_json(ds, &info) == SRBFN_OK);
  const json j = json::parse(take(info));
  CHECK(j.at("rows") == 2);  // one row has a missing target
  CHECK(j.at("target") == "AH");
  CHECK(j.at("cleaning").at("raw_rows") == 3);
  CHECK(j.at("cleaning").at("dropped_rows") == 1);
  CHECK(j.at("cleaning").at("imputed_cells") == 1);
  srbfn_dataset_free(ds);
  std::remove(path.c_str());
}

TEST_CASE("energy export loads through the boundary") {
  const std::string path = write_temp("energy.csv", kEnergyFixture);
  srbfn_dataset* ds = nullptr;
  REQUIRE(srbfn_dataset_load_energy(path.c_str(), &ds) == SRBFN_OK);
  char* info = nullptr;
  REQUIRE(srbfn_dataset_info_json(ds, &info) == SRBFN_OK);
  const json j = json::parse(take(info));
  CHECK(j.at("rows") == 5);
  CHECK(j.at("cols") == 4);  // timestamp column dropped, Appliances is the target
  CHECK(j.at("target") == "Appliances");
  srbfn_dataset_free(ds);
  std::remove(path.c_str());
}

TEST_CASE("training and prediction are deterministic") {
  srbfn_dataset* ds = make_dataset(48);
  srbfn_model* m1 = nullptr;
  srbfn_model* m2 = nullptr;
  REQUIRE(srbfn_train(ds, kConfig, 3.0, &m1) == SRBFN_OK);
  REQUIRE(srbfn_train(ds, kConfig, 3.0, &m2) == SRBFN_OK);

  size_t in_cols = 0;
  CHECK(srbfn_model_input_cols(m1, &in_cols) == SRBFN_OK);
  CHECK(in_cols == 2);

  const Table t = make_table(48);
  std::vector<double> p1(t.rows), p2(t.rows);
  REQUIRE(srbfn_predict(m1, t.features.data(), t.rows, 2, p1.data()) == SRBFN_OK);
  REQUIRE(srbfn_predict(m2, t.features.data(), t.rows, 2, p2.data()) == SRBFN_OK);
  CHECK(std::memcmp(p1.data(), p2.data(), t.rows * sizeof(double)) == 0);
  for (double v : p1) CHECK(std::isfinite(v));

  srbfn_model_free(m1);
  srbfn_model_free(m2);
  srbfn_dataset_free(ds);
}

TEST_CASE("config errors map to distinct statuses") {
  srbfn_dataset* ds = make_dataset(30);
  srbfn_model* model = nullptr;

  CHECK(srbfn_train(ds, "not json", 0.0, &model) == SRBFN_ERR_INVALID_CONFIG);
  CHECK(std::string(srbfn_last_error()).find("JSON") != std::string::npos);

  CHECK(srbfn_train(ds, R"({"bogus": 1})", 0.0, &model) ==
        SRBFN_ERR_INVALID_CONFIG);
  CHECK(std::string(srbfn_last_error()).find("bogus") != std::string::npos);

  // One hypothesis leaves nothing to share the relaxation with.
  CHECK(srbfn_train(ds, R"({"M": 1, "epsilon": 0.1})", 0.0, &model) ==
        SRBFN_ERR_DEGENERATE_CONFIG);

  // A huge step size blows the loss up; the failure is surfaced, not hidden.
  CHECK(srbfn_train(ds, R"({"M": 2, "eta": 1e6, "epochs": 5, "seed": 1})", 0.0,
                    &model) == SRBFN_ERR_NUMERICAL_DIVERGENCE);
  CHECK(model == nullptr);
  srbfn_dataset_free(ds);
}

TEST_CASE("an empty config string means all defaults") {
  srbfn_dataset* ds = make_dataset(30);
  srbfn_model* model = nullptr;
  REQUIRE(srbfn_train(ds, "", 0.0, &model) == SRBFN_OK);
  char* info = nullptr;
  REQUIRE(srbfn_model_info_json(model, &info) == SRBFN_OK);
  const json j = json::parse(take(info));
  CHECK(j.at("M") == 5);  // library default hypothesis count
  srbfn_model_free(model);
  srbfn_dataset_free(ds);
}

TEST_CASE("model persistence round-trips bitwise") {
  srbfn_dataset* ds = make_dataset(40);
  srbfn_model* trained = nullptr;
  REQUIRE(srbfn_train(ds, kConfig, 3.0, &trained) == SRBFN_OK);

  const std::string path = "/tmp/srbfn_capi_model.json";
  REQUIRE(srbfn_model_save(trained, path.c_str()) == SRBFN_OK);
  srbfn_model* loaded = nullptr;
  REQUIRE(srbfn_model_load(path.c_str(), &loaded) == SRBFN_OK);

  size_t cols_saved = 0, cols_loaded = 0;
  srbfn_model_input_cols(trained, &cols_saved);
  srbfn_model_input_cols(loaded, &cols_loaded);
  CHECK(cols_saved == cols_loaded);

  const Table t = make_table(40);
  std::vector<double> p1(t.rows), p2(t.rows);
  REQUIRE(srbfn_predict(trained, t.features.data(), t.rows, 2, p1.data()) ==
          SRBFN_OK);
  REQUIRE(srbfn_predict(loaded, t.features.data(), t.rows, 2, p2.data()) ==
          SRBFN_OK);
  CHECK(std::memcmp(p1.data(), p2.data(), t.rows * sizeof(double)) == 0);

  char* info = nullptr;
  REQUIRE(srbfn_model_info_json(loaded, &info) == SRBFN_OK);
  const json j = json::parse(take(info));
  CHECK(j.at("M") == 3);
  CHECK(j.at("lambda_s") == 3.0);

  srbfn_model_free(trained);
  srbfn_model_free(loaded);
  srbfn_dataset_free(ds);
  std::remove(path.c_str());

  srbfn_model* missing = nullptr;
  CHECK(srbfn_model_load("/tmp/srbfn_capi_no_model.json", &missing) ==
        SRBFN_ERR_FILE_NOT_FOUND);
  const std::string garbage = write_temp("garbage_model.json", "not a model");
  CHECK(srbfn_model_load(garbage.c_str(), &missing) == SRBFN_ERR_SCHEMA_MISMATCH);
  std::remove(garbage.c_str());
}

TEST_CASE("prediction validates its input shape") {
  srbfn_dataset* ds = make_dataset(30);
  srbfn_model* model = nullptr;
  REQUIRE(srbfn_train(ds, kConfig, 0.0, &model) == SRBFN_OK);

  std::vector<double> wide(3 * 3, 0.5);
  std::vector<double> out(3);
  CHECK(srbfn_predict(model, wide.data(), 3, 3, out.data()) ==
        SRBFN_ERR_SHAPE_MISMATCH);
  CHECK(srbfn_predict(model, wide.data(), 0, 2, out.data()) ==
        SRBFN_ERR_SHAPE_MISMATCH);

  srbfn_model_free(model);
  srbfn_dataset_free(ds);
}

TEST_CASE("cross-validation returns three sized records") {
  srbfn_dataset* ds = make_dataset(60);
  char* out = nullptr;
  REQUIRE(srbfn_cross_validate(ds, kConfig, 3.0, 3, 2, 9, &out) == SRBFN_OK);
  const json j = json::parse(take(out));

  CHECK(j.at("config").at("M") == 3);
  CHECK_FALSE(j.at("config").contains("seed"));
  CHECK(j.at("lambda_s") == 3.0);
  CHECK(j.at("k") == 3);
  CHECK(j.at("n_sims") == 2);
  CHECK(j.at("master_seed") == 9);

  for (const char* name : {"srbfn", "arithmetic", "linear"}) {
    const json& rec = j.at(name);
    CHECK(rec.at("model") == name);
    CHECK(rec.at("rmses").size() == 6);  // k * n_sims cells
    CHECK(rec.at("failed") == 0);
    CHECK(rec.at("mean").is_number());
    CHECK(rec.at("mean").get<double>() > 0.0);
    CHECK(rec.at("std").is_number());
  }
  srbfn_dataset_free(ds);
}

TEST_CASE("cross-validation output is byte-stable") {
  srbfn_dataset* ds = make_dataset(60);
  char* a = nullptr;
  char* b = nullptr;
  char* c = nullptr;
  REQUIRE(srbfn_cross_validate(ds, kConfig, 0.0, 3, 1, 13, &a) == SRBFN_OK);
  REQUIRE(srbfn_cross_validate(ds, kConfig, 0.0, 3, 1, 13, &b) == SRBFN_OK);
  REQUIRE(srbfn_cross_validate(ds, kConfig, 0.0, 3, 1, 14, &c) == SRBFN_OK);
  const std::string s1 = take(a), s2 = take(b), s3 = take(c);
  CHECK(s1 == s2);
  CHECK(s1 != s3);  // a different master seed reshuffles the folds
  srbfn_dataset_free(ds);
}

TEST_CASE("fold metrics report train and test error per fold") {
  srbfn_dataset* ds = make_dataset(48);
  char* a = nullptr;
  REQUIRE(srbfn_fold_metrics(ds, kConfig, 3.0, 3, 5, &a) == SRBFN_OK);
  const std::string first = take(a);
  const json j = json::parse(first);

  CHECK_FALSE(j.at("config").contains("seed"));
  CHECK(j.at("k") == 3);
  CHECK(j.at("master_seed") == 5);
  REQUIRE(j.at("folds").size() == 3);
  for (size_t f = 0; f < 3; ++f) {
    const json& rec = j.at("folds").at(f);
    CHECK(rec.at("fold") == f);
    CHECK(rec.at("train_rmse").get<double>() > 0.0);
    CHECK(rec.at("test_rmse").get<double>() > 0.0);
  }

  char* b = nullptr;
  REQUIRE(srbfn_fold_metrics(ds, kConfig, 3.0, 3, 5, &b) == SRBFN_OK);
  CHECK(take(b) == first);  // timing is excluded, so reruns are byte-equal
  srbfn_dataset_free(ds);
}

TEST_CASE("grid sweeps stream resumable results") {
  srbfn_dataset* ds = make_dataset(24);
  const char* options =
      R"({"mode": "grid",
          "grid": {"M": [2], "kappa": [4], "eta": [0.1], "chi": [0.01],
                   "epsilon": [0.0, 0.1], "lambda_p": [0.0],
                   "lambda_s": [0.0, 3.0]},
          "epochs": 2, "k": 2, "n_sims": 1, "master_seed": 11,
          "dataset_tag": "capi"})";
  const std::string path = "/tmp/srbfn_capi_sweep.jsonl";
  std::remove(path.c_str());

  REQUIRE(srbfn_sweep_run(ds, options, path.c_str()) == SRBFN_OK);
  const std::string first = slurp(path);
  // 2 epsilon values x 2 ridge strengths x 3 models + 1 header line.
  CHECK(std::count(first.begin(), first.end(), '\n') == 13);

  // Re-running a complete sweep only re-reads it: the file is untouched.
  REQUIRE(srbfn_sweep_run(ds, options, path.c_str()) == SRBFN_OK);
  CHECK(slurp(path) == first);

  // A different master seed must not silently mix into the same file.
  const char* clashing =
      R"({"mode": "grid",
          "grid": {"M": [2], "kappa": [4], "eta": [0.1], "chi": [0.01],
                   "epsilon": [0.0, 0.1], "lambda_p": [0.0],
                   "lambda_s": [0.0, 3.0]},
          "epochs": 2, "k": 2, "n_sims": 1, "master_seed": 12,
          "dataset_tag": "capi"})";
  CHECK(srbfn_sweep_run(ds, clashing, path.c_str()) == SRBFN_ERR_SCHEMA_MISMATCH);

  // Bad options are detected before anything runs.
  CHECK(srbfn_sweep_run(ds, "nope", "/tmp/srbfn_capi_x.jsonl") ==
        SRBFN_ERR_INVALID_CONFIG);
  CHECK(srbfn_sweep_run(ds, R"({"mode": "wat"})", "/tmp/srbfn_capi_x.jsonl") ==
        SRBFN_ERR_INVALID_CONFIG);
  srbfn_dataset_free(ds);
}

TEST_CASE("file-mode sweeps read a config list") {
  srbfn_dataset* ds = make_dataset(24);
  const std::string configs = write_temp("configs.json", R"({
    "format": "srbfn-sweep-configs", "version": 1, "epochs": 2,
    "configs": [
      {"M": 2, "epsilon": 0.1, "eta": 0.1, "chi": 0.01, "lambda_p": 0.0,
       "kappa": 4, "lambda_s": 0.0},
      {"M": 2, "epsilon": 0.1, "eta": 0.1, "chi": 0.01, "lambda_p": 0.0,
       "kappa": 4, "lambda_s": 3.0}
    ]})");
  const std::string path = "/tmp/srbfn_capi_filemode.jsonl";
  std::remove(path.c_str());

  const std::string options = R"({"mode": "file", "configs_path": ")" +
                              configs + R"(", "k": 2, "n_sims": 1})";
  REQUIRE(srbfn_sweep_run(ds, options.c_str(), path.c_str()) == SRBFN_OK);
  const std::string text = slurp(path);
  CHECK(std::count(text.begin(), text.end(), '\n') == 7);  // header + 6 rows

  CHECK(srbfn_sweep_run(ds, R"({"mode": "file"})", path.c_str()) ==
        SRBFN_ERR_INVALID_CONFIG);
  const std::string junk = write_temp("junk_configs.json", R"({"v": 2})");
  const std::string bad_options =
      R"({"mode": "file", "configs_path": ")" + junk + R"("})";
  CHECK(srbfn_sweep_run(ds, bad_options.c_str(), "/tmp/srbfn_capi_y.jsonl") ==
        SRBFN_ERR_SCHEMA_MISMATCH);

  std::remove(configs.c_str());
  std::remove(junk.c_str());
  std::remove(path.c_str());
  srbfn_dataset_free(ds);
}

TEST_CASE("the built-in configuration list saves and parses") {
  const std::string path = "/tmp/srbfn_capi_default_configs.json";
  REQUIRE(srbfn_default_configs_save(path.c_str()) == SRBFN_OK);
  const json j = json::parse(slurp(path));
  CHECK(j.at("format") == "srbfn-sweep-configs");
  CHECK(j.at("version") == 1);
  CHECK(j.at("epochs") == 20);
  CHECK(j.at("configs").size() == 80);
  for (const auto& c : j.at("configs")) {
    CHECK(c.contains("M"));
    CHECK(c.contains("epsilon"));
    CHECK(c.contains("lambda_s"));
  }
  std::remove(path.c_str());
}

TEST_CASE("reports summarize a results file") {
  srbfn_dataset* ds = make_dataset(24);
  const char* options =
      R"({"mode": "grid",
          "grid": {"M": [2], "kappa": [4], "eta": [0.1], "chi": [0.01],
                   "epsilon": [0.0, 0.1], "lambda_p": [0.0],
                   "lambda_s": [0.0, 3.0]},
          "epochs": 2, "k": 2, "n_sims": 1, "master_seed": 11,
          "dataset_tag": "capi"})";
  const std::string results = "/tmp/srbfn_capi_report_input.jsonl";
  std::remove(results.c_str());
  REQUIRE(srbfn_sweep_run(ds, options, results.c_str()) == SRBFN_OK);

  const std::string out_dir = "/tmp/srbfn_capi_report";
  std::remove((out_dir + "/summary.csv").c_str());
  char* digest_str = nullptr;
  REQUIRE(srbfn_report(results.c_str(), out_dir.c_str(), 0, &digest_str) ==
          SRBFN_OK);
  const json digest = json::parse(take(digest_str));
  CHECK(digest.at("dataset") == "capi");
  CHECK(digest.at("rows") == 12);
  CHECK(digest.at("summary").size() == 3);
  CHECK(slurp(out_dir + "/summary.csv").rfind("model,", 0) == 0);
  CHECK(slurp(out_dir + "/diversity.csv").rfind("M,epsilon,", 0) == 0);

  // Plot-only mode produces just the two plot tables.
  const std::string plot_dir = "/tmp/srbfn_capi_report_plot";
  std::remove((plot_dir + "/summary.csv").c_str());
  std::remove((plot_dir + "/diversity.csv").c_str());
  char* plot_digest = nullptr;
  REQUIRE(srbfn_report(results.c_str(), plot_dir.c_str(), 1, &plot_digest) ==
          SRBFN_OK);
  const json pd = json::parse(take(plot_digest));
  CHECK_FALSE(pd.contains("summary"));
  CHECK(std::ifstream(plot_dir + "/diversity.csv").good());
  CHECK_FALSE(std::ifstream(plot_dir + "/summary.csv").good());

  char* none = nullptr;
  CHECK(srbfn_report("/tmp/srbfn_capi_no_results.jsonl", out_dir.c_str(), 0,
                     &none) == SRBFN_ERR_FILE_NOT_FOUND);
  const std::string empty =
      write_temp("header_only.jsonl",
                 R"({"type":"header","format":"srbfn-results","version":1,)"
                 R"("dataset":"x","master_seed":0,"k":2,"n_sims":1,)"
                 R"("subsample":0,"rows":3})"
                 "\n");
  CHECK(srbfn_report(empty.c_str(), out_dir.c_str(), 0, &none) ==
        SRBFN_ERR_EMPTY_RESULTS);

  std::remove(results.c_str());
  std::remove(empty.c_str());
  srbfn_dataset_free(ds);
}

}  // TEST_SUITE
