#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "lrts/heuristic_table.hpp"
#include "lrts/random.hpp"
#include "lrts/search_problem.hpp"

namespace lrts {

struct LookaheadNode {
  StateId state;
  std::int32_t parent = -1;  // arena index; -1 for the origin
  std::int32_t first = -1;   // arena index of the depth-1 ancestor
  ActionId action;           // action taken from the parent
  double reach_cost = 0.0;
};

/// Breadth-first layering around an origin with a single visited set shared
/// by all layers, so layer d holds exactly the states whose minimum action
/// distance from the origin is d. Layers are grown one at a time so a caller
/// can stop as soon as a shallow layer answers its question.
///
/// Within a layer, a state reachable from several parents keeps the cheapest
/// one. The object is reusable across origins via reset() to keep its
/// allocations warm in the agent hot loop.
class LayeredExpansion {
 public:
  explicit LayeredExpansion(const SearchProblem& problem);
  LayeredExpansion(const SearchProblem& problem, StateId origin);

  void reset(StateId origin);

  /// Builds layer depth()+1. Returns false when that layer is empty.
  bool grow();

  int depth() const noexcept { return static_cast<int>(offsets_.size()) - 2; }
  StateId origin() const noexcept { return nodes_.front().state; }

  std::span<const LookaheadNode> layer(int d) const;
  /// Layers 1..depth() in arena order (parents precede children).
  std::span<const LookaheadNode> ball() const;
  const std::vector<LookaheadNode>& arena() const noexcept { return nodes_; }

  std::size_t arena_index(const LookaheadNode& node) const noexcept {
    return static_cast<std::size_t>(&node - nodes_.data());
  }

  /// Action sequence from the origin to the arena node at `index`.
  std::vector<ActionId> actions_to(std::size_t index) const;

 private:
  const SearchProblem* problem_;
  std::vector<LookaheadNode> nodes_;
  std::vector<std::size_t> offsets_;  // layer d spans [offsets_[d], offsets_[d+1])
  std::unordered_map<StateId, std::int32_t, StateIdHash> index_;
  std::vector<Successor> scratch_;
};

/// Materialized depth-d neighborhood with explicit action sequences.
struct Neighborhood {
  struct Member {
    StateId state;
    double reach_cost = 0.0;
    std::vector<ActionId> actions;
  };

  StateId origin;
  int depth = 0;
  std::vector<Member> members;
};

/// States at minimum action distance exactly `depth` from `origin`.
Neighborhood neighborhood(const SearchProblem& problem, StateId origin,
                          int depth);

struct FrontierChoice {
  std::size_t index = 0;  // position within the candidate span
  StateId state;
  double value = 0.0;     // gamma * reach_cost + h(state)
};

/// Candidate minimizing gamma * reach_cost + h; ties resolved by `ties`.
/// nullopt for an empty candidate set.
std::optional<FrontierChoice> best_frontier(
    std::span<const LookaheadNode> candidates, const HeuristicTable& table,
    double gamma, TieBreaker& ties);

struct NeighborhoodChoice {
  StateId state;
  double value = 0.0;
  std::vector<ActionId> actions;
};

std::optional<NeighborhoodChoice> best_frontier(const Neighborhood& nbhd,
                                                const HeuristicTable& table,
                                                double gamma,
                                                TieBreaker& ties);

}  // namespace lrts
