#include "core/model.hpp"

#include <fstream>

#include <json.hpp>

#include "core/config_json.hpp"

namespace srbfn {

using nlohmann::json;

Vector fit_weights(const Matrix& phi, const Vector& y, double lambda_s) {
  if (phi.rows() != y.size())
    fail(ErrorCode::ShapeMismatch, "fit_weights: Phi rows != y length");
  if (lambda_s < 0.0) fail(ErrorCode::InvalidConfig, "fit_weights: lambda_s < 0");
  Matrix g = gram(phi);
  for (std::size_t j = 0; j < g.cols(); ++j) g.at(j, j) += lambda_s;
  const Vector rhs = transpose_times(phi, y);
  try {
    return solve_spd(g, rhs);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NotPositiveDefinite) throw;
    // Collinear basis columns with lambda_s = 0 land here; a one-shot jitter
    // resolves the benign cases and anything worse propagates.
    for (std::size_t j = 0; j < g.cols(); ++j) g.at(j, j) += 1e-10;
    return solve_spd(g, rhs);
  }
}

SRbfnModel fit_srbfn(const HypothesisEnsemble& ens, const Matrix& x_std,
                     const Vector& y, double lambda_s) {
  SRbfnModel model;
  model.ensemble = ens;
  model.lambda_s = lambda_s;
  const StructuredDataset sd = build_structured(ens, x_std, StructuredSource::Train);
  model.basis = fit_basis(sd);
  const Matrix phi = feature_map(sd, model.basis);
  model.w = fit_weights(phi, y, lambda_s);
  return model;
}

Vector predict_srbfn_std(const SRbfnModel& model, const Matrix& x_std) {
  const StructuredDataset sd =
      build_structured(model.ensemble, x_std, StructuredSource::Test);
  const Matrix phi = feature_map(sd, model.basis);
  return times(phi, model.w);
}

Vector predict_srbfn(const SRbfnModel& model, const Matrix& x_raw) {
  const Matrix x_std = apply_standardizer(model.ensemble.standardizer, x_raw);
  return predict_srbfn_std(model, x_std);
}

namespace {

json matrix_to_json(const Matrix& m) {
  return json{{"rows", m.rows()}, {"cols", m.cols()}, {"data", m.data()}};
}

Matrix matrix_from_json(const json& j) {
  Matrix m(j.at("rows").get<std::size_t>(), j.at("cols").get<std::size_t>());
  const auto data = j.at("data").get<std::vector<double>>();
  if (data.size() != m.rows() * m.cols())
    fail(ErrorCode::SchemaMismatch, "matrix blob has wrong element count");
  m.data() = data;
  return m;
}

json mlp_to_json(const MlpParams& p) {
  return json{{"d", p.d},           {"kappa", p.kappa}, {"w1", matrix_to_json(p.w1)},
              {"b1", p.b1},         {"w2", matrix_to_json(p.w2)},
              {"b2", p.b2},         {"w_out", p.w_out}, {"b_out", p.b_out}};
}

MlpParams mlp_from_json(const json& j) {
  MlpParams p;
  p.d = j.at("d").get<std::size_t>();
  p.kappa = j.at("kappa").get<std::size_t>();
  p.w1 = matrix_from_json(j.at("w1"));
  p.b1 = j.at("b1").get<Vector>();
  p.w2 = matrix_from_json(j.at("w2"));
  p.b2 = j.at("b2").get<Vector>();
  p.w_out = j.at("w_out").get<Vector>();
  p.b_out = j.at("b_out").get<double>();
  if (p.w1.rows() != p.kappa || p.w1.cols() != p.d || p.b1.size() != p.kappa ||
      p.w2.rows() != p.kappa || p.w2.cols() != p.kappa || p.b2.size() != p.kappa ||
      p.w_out.size() != p.kappa)
    fail(ErrorCode::SchemaMismatch, "predictor blob has inconsistent shapes");
  return p;
}

constexpr int kModelFormatVersion = 1;

}  // namespace

void save_model(const SRbfnModel& model, const std::string& path) {
  json j;
  j["format"] = "srbfn-model";
  j["version"] = kModelFormatVersion;
  j["config"] = config_to_json(model.ensemble.config);
  j["input_dim"] = model.ensemble.input_dim;
  j["standardizer"] = {{"means", model.ensemble.standardizer.means},
                       {"stds", model.ensemble.standardizer.stds},
                       {"kept", model.ensemble.standardizer.kept},
                       {"input_cols", model.ensemble.standardizer.input_cols}};
  json preds = json::array();
  for (const auto& p : model.ensemble.predictors) preds.push_back(mlp_to_json(p));
  j["predictors"] = std::move(preds);
  j["basis"] = {{"mu", model.basis.mu}, {"sigma", model.basis.sigma}};
  j["w"] = model.w;
  j["lambda_s"] = model.lambda_s;

  std::ofstream out(path);
  if (!out) fail(ErrorCode::IoError, "cannot write " + path);
  out << j.dump(2) << "\n";
  if (!out) fail(ErrorCode::IoError, "short write to " + path);
}

SRbfnModel load_model(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::FileNotFound, "cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    fail(ErrorCode::SchemaMismatch, std::string("model parse error: ") + e.what());
  }
  if (j.value("format", "") != "srbfn-model" ||
      j.value("version", -1) != kModelFormatVersion)
    fail(ErrorCode::SchemaMismatch, "unrecognized model format/version in " + path);

  SRbfnModel model;
  try {
    model.ensemble.config = config_from_json(j.at("config"));
    model.ensemble.input_dim = j.at("input_dim").get<std::size_t>();
    model.ensemble.standardizer.means = j.at("standardizer").at("means").get<Vector>();
    model.ensemble.standardizer.stds = j.at("standardizer").at("stds").get<Vector>();
    model.ensemble.standardizer.kept =
        j.at("standardizer").at("kept").get<std::vector<std::size_t>>();
    model.ensemble.standardizer.input_cols =
        j.at("standardizer").at("input_cols").get<std::size_t>();
    for (const auto& pj : j.at("predictors"))
      model.ensemble.predictors.push_back(mlp_from_json(pj));
    model.basis.mu = j.at("basis").at("mu").get<Vector>();
    model.basis.sigma = j.at("basis").at("sigma").get<Vector>();
    model.w = j.at("w").get<Vector>();
    model.lambda_s = j.at("lambda_s").get<double>();
  } catch (const json::exception& e) {
    fail(ErrorCode::SchemaMismatch, std::string("model blob error: ") + e.what());
  }
  if (model.ensemble.predictors.size() != model.ensemble.config.m ||
      model.w.size() != model.ensemble.config.m)
    fail(ErrorCode::SchemaMismatch, "model blob has inconsistent hypothesis count");
  const auto& s = model.ensemble.standardizer;
  if (s.kept.size() != s.means.size() || s.kept.size() != s.stds.size())
    fail(ErrorCode::SchemaMismatch, "model blob has inconsistent standardizer arrays");
  for (std::size_t idx : s.kept)
    if (idx >= s.input_cols)
      fail(ErrorCode::SchemaMismatch, "standardizer kept-column index out of range");
  return model;
}

std::string model_info_json(const SRbfnModel& model) {
  json j;
  j["M"] = model.ensemble.config.m;
  j["epsilon"] = model.ensemble.config.epsilon;
  j["kappa"] = model.ensemble.config.kappa;
  j["lambda_s"] = model.lambda_s;
  j["input_dim"] = model.ensemble.input_dim;
  j["basis_mu"] = model.basis.mu;
  j["basis_sigma"] = model.basis.sigma;
  j["w"] = model.w;
  return j.dump();
}

}  // namespace srbfn
