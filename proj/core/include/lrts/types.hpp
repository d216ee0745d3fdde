#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>

namespace lrts {

// Opaque state handle. Domains pack their full state into 64 bits so that
// identity comparison and hashing are exact.
struct StateId {
  std::uint64_t value = 0;

  friend constexpr auto operator<=>(StateId, StateId) = default;
};

struct ActionId {
  std::uint32_t value = 0;

  friend constexpr auto operator<=>(ActionId, ActionId) = default;
};

// splitmix64 finalizer; good avalanche for packed tile encodings whose low
// nibbles vary slowly.
constexpr std::uint64_t mix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

struct StateIdHash {
  std::size_t operator()(StateId s) const noexcept {
    return static_cast<std::size_t>(mix64(s.value));
  }
};

}  // namespace lrts

template <>
struct std::hash<lrts::StateId> {
  std::size_t operator()(lrts::StateId s) const noexcept {
    return lrts::StateIdHash{}(s);
  }
};
