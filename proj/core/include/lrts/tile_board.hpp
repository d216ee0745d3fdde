#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>

#include "lrts/random.hpp"
#include "lrts/types.hpp"

namespace lrts {

/// Direction the blank moves in. Values double as ActionId payloads; the
/// inverse of a move is `value ^ 1`.
enum class BlankMove : std::uint8_t { kUp = 0, kDown = 1, kLeft = 2, kRight = 3 };

inline constexpr std::array<BlankMove, 4> kBlankMoves = {
    BlankMove::kUp, BlankMove::kDown, BlankMove::kLeft, BlankMove::kRight};

/// Sliding-tile board of up to 4x4 cells. Tile 0 is the blank; the goal has
/// the blank in cell 0 and tile k in cell k (row-major).
///
/// The packed form stores cell i in bits [4i, 4i+4) and is used as the
/// StateId. Construction validates the permutation but not solvability.
class TileBoard {
 public:
  static constexpr int kMaxCells = 16;

  TileBoard(int width, int height, std::span<const int> tiles);

  static TileBoard goal(int width, int height);
  static TileBoard unpack(int width, int height, StateId packed);

  int width() const noexcept { return width_; }
  int height() const noexcept { return height_; }
  int cells() const noexcept { return width_ * height_; }
  int blank_index() const noexcept { return blank_; }
  int tile(int cell) const { return tiles_[static_cast<std::size_t>(cell)]; }

  StateId pack() const noexcept;
  std::optional<TileBoard> moved(BlankMove move) const;

  std::string to_string() const;

  friend bool operator==(const TileBoard& a, const TileBoard& b) {
    return a.width_ == b.width_ && a.height_ == b.height_ && a.tiles_ == b.tiles_;
  }

 private:
  TileBoard() = default;

  int width_ = 0;
  int height_ = 0;
  int blank_ = 0;
  std::array<std::uint8_t, kMaxCells> tiles_{};
};

/// Sum of row and column displacements of the non-blank tiles.
int manhattan(const TileBoard& board);

/// True iff the board lies in the goal's reachability class. For odd widths
/// that is an even inversion count; for even widths the blank's row is added
/// to the inversion count before the parity test.
bool is_solvable(const TileBoard& board);

/// Uniform permutation, resampled until solvable.
TileBoard random_solvable(int width, int height, Rng& rng);
TileBoard random_solvable(int width, int height, std::uint64_t seed);

}  // namespace lrts
