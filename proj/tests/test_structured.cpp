#include <doctest.h>

#include <cmath>

#include "core/rng.hpp"
#include "core/structured.hpp"

using namespace srbfn;

namespace {

HypothesisEnsemble make_ensemble(std::size_t m, std::size_t d, double chi,
                                 std::uint64_t seed) {
  HypothesisEnsemble ens;
  ens.config.m = m;
  ens.config.chi = chi;
  ens.config.epsilon = m == 1 ? 0.0 : 0.1;
  ens.input_dim = d;
  Rng rng(seed);
  for (std::size_t j = 0; j < m; ++j)
    ens.predictors.push_back(init_mlp(d, 4, chi, rng));
  return ens;
}

// Directly evaluated Gaussian bump, kept independent of feature_map's
// hoisted-inverse formulation.
double gauss(double v, double mu, double sigma) {
  const double z = (v - mu) / sigma;
  return std::exp(-0.5 * z * z);
}

}  // namespace

TEST_SUITE("structured") {

TEST_CASE("prediction matrix has one column per hypothesis") {
  const HypothesisEnsemble ens = make_ensemble(3, 2, 0.3, 10);
  Matrix x(5, 2);
  Rng rng(1);
  for (auto& v : x.data()) v = rng.normal();
  const StructuredDataset sd = build_structured(ens, x, StructuredSource::Train);
  CHECK(sd.d.rows() == 5);
  CHECK(sd.d.cols() == 3);
  CHECK(sd.epsilon == ens.config.epsilon);
  CHECK(sd.source == StructuredSource::Train);
}

TEST_CASE("prediction matrix entries match per-predictor forwards") {
  const HypothesisEnsemble ens = make_ensemble(4, 3, 0.5, 11);
  Matrix x(6, 3);
  Rng rng(2);
  for (auto& v : x.data()) v = rng.normal();
  const StructuredDataset sd = build_structured(ens, x, StructuredSource::Test);
  for (std::size_t i = 0; i < 6; ++i) {
    const Vector xi(x.row_ptr(i), x.row_ptr(i) + 3);
    for (std::size_t j = 0; j < 4; ++j)
      CHECK(sd.d.at(i, j) == forward(ens.predictors[j], xi));
  }
}

TEST_CASE("zero-initialised hypotheses predict zero everywhere") {
  const HypothesisEnsemble ens = make_ensemble(2, 1, 0.0, 12);
  Matrix x(3, 1);
  x.at(0, 0) = -1.0;
  x.at(1, 0) = 0.0;
  x.at(2, 0) = 9.0;
  const StructuredDataset sd = build_structured(ens, x, StructuredSource::Train);
  for (double v : sd.d.data()) CHECK(v == 0.0);
}

TEST_CASE("basis centers and widths come from column statistics") {
  StructuredDataset sd;
  sd.d = Matrix(2, 1);
  sd.d.at(0, 0) = 1.0;
  sd.d.at(1, 0) = 3.0;
  const BasisParams basis = fit_basis(sd);
  CHECK(basis.mu == Vector{2.0});
  CHECK(basis.sigma[0] == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
}

TEST_CASE("basis widths agree with the shared column statistics routine") {
  StructuredDataset sd;
  sd.d = Matrix(50, 3);
  Rng rng(13);
  for (auto& v : sd.d.data()) v = 2.0 + 0.7 * rng.normal();
  const BasisParams basis = fit_basis(sd);
  Vector mu, sigma;
  column_mean_std(sd.d, mu, sigma);
  for (std::size_t j = 0; j < 3; ++j) {
    CHECK(basis.mu[j] == mu[j]);
    CHECK(basis.sigma[j] == sigma[j]);
  }
}

TEST_CASE("constant prediction columns get the width floor") {
  StructuredDataset sd;
  sd.d = Matrix(4, 2, 5.0);  // both columns constant
  const BasisParams basis = fit_basis(sd);
  CHECK(basis.sigma[0] == sigma_floor());
  CHECK(basis.sigma[1] == sigma_floor());
  // The resulting map must stay finite even with the razor-thin widths.
  const Matrix phi = feature_map(sd, basis);
  for (double v : phi.data()) {
    CHECK(std::isfinite(v));
    CHECK(v == 1.0);  // every value sits exactly at its center
  }
}

TEST_CASE("basis fitting refuses held-out predictions") {
  StructuredDataset sd;
  sd.d = Matrix(3, 1);
  sd.source = StructuredSource::Test;
  CHECK_THROWS_AS(fit_basis(sd), Error);
}

TEST_CASE("basis fitting needs at least two rows") {
  StructuredDataset sd;
  sd.d = Matrix(1, 2);
  CHECK_THROWS_AS(fit_basis(sd), Error);
}

TEST_CASE("map value is exactly one at a column center") {
  StructuredDataset sd;
  sd.d = Matrix(3, 1);
  sd.d.at(0, 0) = -1.0;
  sd.d.at(1, 0) = 0.0;
  sd.d.at(2, 0) = 1.0;
  const BasisParams basis = fit_basis(sd);  // mu = 0, sigma = 1
  REQUIRE(basis.mu[0] == 0.0);
  REQUIRE(basis.sigma[0] == 1.0);
  const Matrix phi = feature_map(sd, basis);
  CHECK(phi.at(1, 0) == 1.0);
}

TEST_CASE("map value one standard deviation out") {
  StructuredDataset sd;
  sd.d = Matrix(3, 1);
  sd.d.at(0, 0) = -1.0;
  sd.d.at(1, 0) = 0.0;
  sd.d.at(2, 0) = 1.0;
  const BasisParams basis = fit_basis(sd);
  const Matrix phi = feature_map(sd, basis);
  // exp(-1/2) at a one-sigma offset, evaluated independently.
  CHECK(phi.at(0, 0) == doctest::Approx(0.6065306597126334).epsilon(1e-15));
  CHECK(phi.at(2, 0) == doctest::Approx(0.6065306597126334).epsilon(1e-15));
}

TEST_CASE("map entries stay inside the half-open unit interval") {
  StructuredDataset sd;
  sd.d = Matrix(200, 4);
  Rng rng(14);
  for (auto& v : sd.d.data()) v = 3.0 * rng.normal();
  const BasisParams basis = fit_basis(sd);
  const Matrix phi = feature_map(sd, basis);
  for (double v : phi.data()) {
    CHECK(v > 0.0);
    CHECK(v <= 1.0);
  }
}

TEST_CASE("map agrees with a scalar oracle") {
  StructuredDataset sd;
  sd.d = Matrix(30, 2);
  Rng rng(15);
  for (auto& v : sd.d.data()) v = rng.normal() * 1.7 - 0.4;
  const BasisParams basis = fit_basis(sd);
  const Matrix phi = feature_map(sd, basis);
  for (std::size_t i = 0; i < 30; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      CHECK(std::fabs(phi.at(i, j) -
                      gauss(sd.d.at(i, j), basis.mu[j], basis.sigma[j])) < 1e-15);
}

TEST_CASE("held-out rows map through training-fitted parameters") {
  // Fit on train predictions, apply to a disjoint test block: values still
  // obey the scalar formula with the train-derived mu and sigma.
  const HypothesisEnsemble ens = make_ensemble(3, 1, 0.4, 16);
  Matrix xtr(40, 1), xte(10, 1);
  Rng rng(17);
  for (auto& v : xtr.data()) v = rng.normal();
  for (auto& v : xte.data()) v = rng.normal() + 2.0;
  const StructuredDataset sd_tr = build_structured(ens, xtr, StructuredSource::Train);
  const StructuredDataset sd_te = build_structured(ens, xte, StructuredSource::Test);
  const BasisParams basis = fit_basis(sd_tr);
  const Matrix phi = feature_map(sd_te, basis);
  for (std::size_t i = 0; i < 10; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      CHECK(std::fabs(phi.at(i, j) -
                      gauss(sd_te.d.at(i, j), basis.mu[j], basis.sigma[j])) < 1e-15);
}

TEST_CASE("map rejects mismatched basis width") {
  StructuredDataset sd;
  sd.d = Matrix(3, 2);
  BasisParams basis;
  basis.mu = {0.0};
  basis.sigma = {1.0};
  CHECK_THROWS_AS(feature_map(sd, basis), Error);
}

}  // TEST_SUITE
