#include "lrts/tile_board.hpp"

#include <cstdlib>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace lrts {

namespace {

void check_dimensions(int width, int height) {
  if (width < 2 || height < 2 || width * height > TileBoard::kMaxCells) {
    throw std::invalid_argument("unsupported board size " +
                                std::to_string(width) + "x" +
                                std::to_string(height));
  }
}

}  // namespace

TileBoard::TileBoard(int width, int height, std::span<const int> tiles) {
  check_dimensions(width, height);
  width_ = width;
  height_ = height;
  const int n = width * height;
  if (static_cast<int>(tiles.size()) != n) {
    throw std::invalid_argument("expected " + std::to_string(n) + " tiles, got " +
                                std::to_string(tiles.size()));
  }
  std::array<bool, kMaxCells> seen{};
  for (int i = 0; i < n; ++i) {
    const int t = tiles[static_cast<std::size_t>(i)];
    if (t < 0 || t >= n) {
      throw std::invalid_argument("tile value " + std::to_string(t) +
                                  " out of range");
    }
    if (seen[static_cast<std::size_t>(t)]) {
      throw std::invalid_argument("duplicate tile value " + std::to_string(t));
    }
    seen[static_cast<std::size_t>(t)] = true;
    tiles_[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(t);
    if (t == 0) blank_ = i;
  }
}

TileBoard TileBoard::goal(int width, int height) {
  check_dimensions(width, height);
  std::vector<int> tiles(static_cast<std::size_t>(width * height));
  std::iota(tiles.begin(), tiles.end(), 0);
  return TileBoard(width, height, tiles);
}

TileBoard TileBoard::unpack(int width, int height, StateId packed) {
  check_dimensions(width, height);
  std::vector<int> tiles(static_cast<std::size_t>(width * height));
  for (std::size_t i = 0; i < tiles.size(); ++i) {
    tiles[i] = static_cast<int>((packed.value >> (4 * i)) & 0xF);
  }
  return TileBoard(width, height, tiles);
}

StateId TileBoard::pack() const noexcept {
  std::uint64_t v = 0;
  for (int i = 0; i < cells(); ++i) {
    v |= static_cast<std::uint64_t>(tiles_[static_cast<std::size_t>(i)]) << (4 * i);
  }
  return StateId{v};
}

std::optional<TileBoard> TileBoard::moved(BlankMove move) const {
  const int row = blank_ / width_;
  const int col = blank_ % width_;
  int target = -1;
  switch (move) {
    case BlankMove::kUp:    if (row > 0) target = blank_ - width_; break;
    case BlankMove::kDown:  if (row < height_ - 1) target = blank_ + width_; break;
    case BlankMove::kLeft:  if (col > 0) target = blank_ - 1; break;
    case BlankMove::kRight: if (col < width_ - 1) target = blank_ + 1; break;
  }
  if (target < 0) return std::nullopt;
  TileBoard next = *this;
  std::swap(next.tiles_[static_cast<std::size_t>(blank_)],
            next.tiles_[static_cast<std::size_t>(target)]);
  next.blank_ = target;
  return next;
}

std::string TileBoard::to_string() const {
  std::ostringstream out;
  for (int i = 0; i < cells(); ++i) {
    if (i) out << ' ';
    out << static_cast<int>(tiles_[static_cast<std::size_t>(i)]);
  }
  return out.str();
}

int manhattan(const TileBoard& board) {
  const int w = board.width();
  int sum = 0;
  for (int cell = 0; cell < board.cells(); ++cell) {
    const int t = board.tile(cell);
    if (t == 0) continue;
    sum += std::abs(cell / w - t / w) + std::abs(cell % w - t % w);
  }
  return sum;
}

bool is_solvable(const TileBoard& board) {
  int inversions = 0;
  for (int i = 0; i < board.cells(); ++i) {
    const int a = board.tile(i);
    if (a == 0) continue;
    for (int j = i + 1; j < board.cells(); ++j) {
      const int b = board.tile(j);
      if (b != 0 && a > b) ++inversions;
    }
  }
  // The goal has zero inversions and its blank in row 0.
  if (board.width() % 2 == 1) return inversions % 2 == 0;
  return (inversions + board.blank_index() / board.width()) % 2 == 0;
}

TileBoard random_solvable(int width, int height, Rng& rng) {
  check_dimensions(width, height);
  std::vector<int> tiles(static_cast<std::size_t>(width * height));
  for (;;) {
    std::iota(tiles.begin(), tiles.end(), 0);
    for (std::size_t i = tiles.size() - 1; i > 0; --i) {
      std::swap(tiles[i], tiles[rng.below(i + 1)]);
    }
    TileBoard board(width, height, tiles);
    if (is_solvable(board)) return board;
  }
}

TileBoard random_solvable(int width, int height, std::uint64_t seed) {
  Rng rng(seed);
  return random_solvable(width, height, rng);
}

}  // namespace lrts
