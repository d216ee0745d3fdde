#pragma once

#include <array>
#include <vector>

#include "lrts/search_problem.hpp"
#include "lrts/tile_board.hpp"

namespace lrts {

/// Unit-cost sliding-tile puzzle over packed boards, with Manhattan distance
/// as the initial heuristic.
class TilePuzzle final : public SearchProblem {
 public:
  /// Throws std::invalid_argument if `start` is not solvable.
  explicit TilePuzzle(const TileBoard& start);

  StateId initial_state() const override { return start_; }
  bool is_goal(StateId s) const override { return s == goal_; }
  void successors(StateId s, std::vector<Successor>& out) const override;
  ActionId invert(ActionId a) const override { return ActionId{a.value ^ 1u}; }
  std::optional<Successor> apply(StateId s, ActionId a) const override;
  double initial_heuristic(StateId s) const override {
    return static_cast<double>(manhattan(s));
  }

  int manhattan(StateId s) const noexcept;
  int blank_of(StateId s) const noexcept;

  int width() const noexcept { return width_; }
  int height() const noexcept { return height_; }
  StateId goal_state() const noexcept { return goal_; }
  TileBoard board(StateId s) const { return TileBoard::unpack(width_, height_, s); }

 private:
  int width_;
  int height_;
  int cells_;
  StateId start_;
  StateId goal_;
  // distance_[tile * 16 + cell]
  std::array<std::uint8_t, 256> distance_{};
  // neighbor_[cell * 4 + move], -1 when off the board
  std::array<std::int8_t, 64> neighbor_{};
};

}  // namespace lrts
