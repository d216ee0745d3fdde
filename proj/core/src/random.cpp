#include "lrts/random.hpp"

#include "lrts/types.hpp"

namespace lrts {

std::uint64_t Rng::below(std::uint64_t bound) {
  // Rejection sampling on the top of the range removes modulo bias.
  const std::uint64_t limit = UINT64_MAX - (UINT64_MAX % bound);
  std::uint64_t x = engine_();
  while (x >= limit) x = engine_();
  return x % bound;
}

std::uint64_t fnv1a(std::string_view text) noexcept {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t fold,
                          std::uint64_t instance, std::uint64_t tag) noexcept {
  return master ^ mix64(mix64(mix64(fold) ^ instance) ^ tag);
}

}  // namespace lrts
