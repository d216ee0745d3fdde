#include "lrts/tile_puzzle.hpp"

#include <cstdlib>
#include <stdexcept>

namespace lrts {

TilePuzzle::TilePuzzle(const TileBoard& start)
    : width_(start.width()),
      height_(start.height()),
      cells_(start.cells()),
      start_(start.pack()),
      goal_(TileBoard::goal(start.width(), start.height()).pack()) {
  if (!is_solvable(start)) {
    throw std::invalid_argument("board is not solvable: " + start.to_string());
  }
  for (int t = 0; t < cells_; ++t) {
    for (int c = 0; c < cells_; ++c) {
      distance_[static_cast<std::size_t>(t * 16 + c)] = static_cast<std::uint8_t>(
          t == 0 ? 0 : std::abs(t / width_ - c / width_) + std::abs(t % width_ - c % width_));
    }
  }
  for (int c = 0; c < cells_; ++c) {
    const int row = c / width_;
    const int col = c % width_;
    auto at = [&](BlankMove m) -> std::int8_t& {
      return neighbor_[static_cast<std::size_t>(c * 4 + static_cast<int>(m))];
    };
    at(BlankMove::kUp) = static_cast<std::int8_t>(row > 0 ? c - width_ : -1);
    at(BlankMove::kDown) = static_cast<std::int8_t>(row < height_ - 1 ? c + width_ : -1);
    at(BlankMove::kLeft) = static_cast<std::int8_t>(col > 0 ? c - 1 : -1);
    at(BlankMove::kRight) = static_cast<std::int8_t>(col < width_ - 1 ? c + 1 : -1);
  }
}

int TilePuzzle::blank_of(StateId s) const noexcept {
  for (int c = 0; c < cells_; ++c) {
    if (((s.value >> (4 * c)) & 0xF) == 0) return c;
  }
  return -1;
}

int TilePuzzle::manhattan(StateId s) const noexcept {
  int sum = 0;
  for (int c = 0; c < cells_; ++c) {
    const auto t = static_cast<int>((s.value >> (4 * c)) & 0xF);
    sum += distance_[static_cast<std::size_t>(t * 16 + c)];
  }
  return sum;
}

namespace {

// Slides the tile at `target` into the blank cell.
inline StateId slide(StateId s, int blank, int target) noexcept {
  const std::uint64_t tile = (s.value >> (4 * target)) & 0xF;
  return StateId{s.value ^ (tile << (4 * target)) ^ (tile << (4 * blank))};
}

}  // namespace

void TilePuzzle::successors(StateId s, std::vector<Successor>& out) const {
  out.clear();
  const int blank = blank_of(s);
  for (int m = 0; m < 4; ++m) {
    const int target = neighbor_[static_cast<std::size_t>(blank * 4 + m)];
    if (target < 0) continue;
    out.push_back({ActionId{static_cast<std::uint32_t>(m)}, slide(s, blank, target), 1.0});
  }
}

std::optional<Successor> TilePuzzle::apply(StateId s, ActionId a) const {
  if (a.value > 3) return std::nullopt;
  const int blank = blank_of(s);
  const int target = neighbor_[static_cast<std::size_t>(blank * 4 + static_cast<int>(a.value))];
  if (target < 0) return std::nullopt;
  return Successor{a, slide(s, blank, target), 1.0};
}

}  // namespace lrts
