#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>

#include "lrts/search_problem.hpp"
#include "lrts/tile_board.hpp"

namespace lrts {

/// Exact goal distances for every state reachable from a set of goals,
/// computed once by breadth-first search. Valid for unit-cost domains with
/// reversible actions (so distances to the goal equal distances from it).
class BfsOracle {
 public:
  BfsOracle(const SearchProblem& problem, std::span<const StateId> goals);

  /// Throws std::out_of_range when `s` is unreachable (an unsolvable input).
  int optimal(StateId s) const;
  std::optional<int> find(StateId s) const;

  std::size_t size() const noexcept { return distance_.size(); }
  int max_distance() const noexcept { return max_distance_; }

 private:
  std::unordered_map<StateId, std::uint8_t, StateIdHash> distance_;
  int max_distance_ = 0;
};

/// Full-space oracle for one board size, rooted at its goal.
BfsOracle make_tile_oracle(int width, int height);

/// Convenience wrapper: h*(s) for a unit-cost problem.
int bfs_optimal(const BfsOracle& oracle, StateId s);

struct IdaResult {
  std::optional<int> cost;     // nullopt when the budget ran out
  std::uint64_t generated = 0;
};

inline constexpr std::uint64_t kDefaultIdaBudget = 100'000'000;

/// IDA* with Manhattan distance on a tile board. Throws
/// std::invalid_argument for unsolvable boards.
IdaResult ida_star_optimal(const TileBoard& board,
                           std::uint64_t node_budget = kDefaultIdaBudget);

enum class Provenance { kBfs, kIdaStar };

std::string_view to_string(Provenance p) noexcept;

/// Optimal costs keyed by canonical board text ("WxH:t0,t1,...").
/// Persisted one entry per line: `<board> <cost> <BFS|IDA_STAR>`.
class OptimalCostCache {
 public:
  struct Entry {
    int cost = 0;
    Provenance provenance = Provenance::kBfs;
  };

  static std::string key(const TileBoard& board);

  /// Throws std::logic_error if a different cost is already recorded.
  void insert(const TileBoard& board, int cost, Provenance provenance);
  std::optional<int> find(const TileBoard& board) const;
  std::size_t size() const noexcept { return entries_.size(); }

  void save(std::ostream& out) const;
  void save(const std::filesystem::path& path) const;
  static OptimalCostCache load(std::istream& in);
  static OptimalCostCache load(const std::filesystem::path& path);

 private:
  std::unordered_map<std::string, Entry> entries_;
};

}  // namespace lrts
