#pragma once

#include <json.hpp>

#include "core/trainer.hpp"

namespace srbfn {

// JSON field names are part of the results/model file contract; change them
// only with a format-version bump.
inline nlohmann::json config_to_json(const MhpConfig& c) {
  return nlohmann::json{{"M", c.m},
                        {"epsilon", c.epsilon},
                        {"eta", c.eta},
                        {"lambda_p", c.lambda_p},
                        {"chi", c.chi},
                        {"kappa", c.kappa},
                        {"epochs", c.epochs},
                        {"seed", c.seed}};
}

inline MhpConfig config_from_json(const nlohmann::json& j) {
  MhpConfig c;
  c.m = j.at("M").get<std::size_t>();
  c.epsilon = j.at("epsilon").get<double>();
  c.eta = j.at("eta").get<double>();
  c.lambda_p = j.at("lambda_p").get<double>();
  c.chi = j.at("chi").get<double>();
  c.kappa = j.at("kappa").get<std::size_t>();
  c.epochs = j.value("epochs", std::size_t{50});
  c.seed = j.value("seed", std::uint64_t{0});
  return c;
}

}  // namespace srbfn
