#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace lrts {

// mt19937_64 has a standardized output sequence; bounded draws are done here
// rather than through std::uniform_int_distribution, whose algorithm differs
// between standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform integer in [0, bound). `bound` must be > 0.
  std::uint64_t below(std::uint64_t bound);

 private:
  std::mt19937_64 engine_;
};

/// Reservoir-style uniform choice among equal-valued candidates.
class TieBreaker {
 public:
  explicit TieBreaker(std::uint64_t seed) : rng_(seed) {}

  /// Called for the k-th candidate (k >= 2) tying the current best; returns
  /// true when it should replace the incumbent. Each of k candidates ends up
  /// chosen with probability 1/k.
  bool replace(std::uint64_t k) { return rng_.below(k) == 0; }

 private:
  Rng rng_;
};

/// 64-bit FNV-1a, used to turn algorithm labels into seed tags.
std::uint64_t fnv1a(std::string_view text) noexcept;

/// Seed derivation rule shared by the harness and the CLI manifest:
///   seed = master ^ mix64(mix64(mix64(fold) ^ instance) ^ tag)
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t fold,
                          std::uint64_t instance, std::uint64_t tag) noexcept;

}  // namespace lrts
