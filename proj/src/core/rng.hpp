#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace srbfn {

// splitmix64 step; used to derive well-separated seeds from (master, tag)
// tuples so that adding configurations or folds never perturbs the streams
// of existing ones.
std::uint64_t mix_seed(std::uint64_t state);
std::uint64_t combine_seeds(std::uint64_t a, std::uint64_t b);

// Deterministic random source. Distribution algorithms are written out here
// (Box-Muller, Fisher-Yates, rejection sampling) instead of using
// std::normal_distribution etc., because the standard leaves those
// implementation-defined and reruns must be bit-identical across toolchains.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform in [0, 1).
  double uniform();
  // Uniform in [lo, hi).
  double uniform(double lo, double hi);
  // Standard normal via Box-Muller; caches the spare deviate.
  double normal();
  // Uniform integer in [0, n), rejection-sampled to avoid modulo bias.
  std::uint64_t below(std::uint64_t n);

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      const std::size_t j = static_cast<std::size_t>(below(i));
      std::swap(v[i - 1], v[j]);
    }
  }

 private:
  std::mt19937_64 engine_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace srbfn
