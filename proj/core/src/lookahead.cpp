#include "lrts/lookahead.hpp"

#include <algorithm>
#include <stdexcept>

namespace lrts {

LayeredExpansion::LayeredExpansion(const SearchProblem& problem)
    : problem_(&problem) {
  reset(problem.initial_state());
}

LayeredExpansion::LayeredExpansion(const SearchProblem& problem,
                                   StateId origin)
    : problem_(&problem) {
  reset(origin);
}

void LayeredExpansion::reset(StateId origin) {
  nodes_.clear();
  index_.clear();
  offsets_.clear();
  nodes_.push_back(LookaheadNode{origin, -1, -1, ActionId{}, 0.0});
  index_.emplace(origin, 0);
  offsets_ = {0, 1};
}

bool LayeredExpansion::grow() {
  const std::size_t begin = offsets_[offsets_.size() - 2];
  const std::size_t end = offsets_.back();
  const std::size_t layer_start = nodes_.size();
  const bool first_layer = offsets_.size() == 2;

  for (std::size_t i = begin; i < end; ++i) {
    const LookaheadNode parent = nodes_[i];
    problem_->successors(parent.state, scratch_);
    for (const Successor& succ : scratch_) {
      const double cost = parent.reach_cost + succ.cost;
      auto [it, inserted] =
          index_.try_emplace(succ.next, static_cast<std::int32_t>(nodes_.size()));
      if (inserted) {
        const auto self = static_cast<std::int32_t>(nodes_.size());
        nodes_.push_back(LookaheadNode{succ.next, static_cast<std::int32_t>(i),
                                       first_layer ? self : parent.first,
                                       succ.action, cost});
        continue;
      }
      // Already seen: only a same-layer duplicate may improve its parent.
      auto idx = static_cast<std::size_t>(it->second);
      if (idx >= layer_start && cost < nodes_[idx].reach_cost) {
        LookaheadNode& node = nodes_[idx];
        node.parent = static_cast<std::int32_t>(i);
        node.first = first_layer ? static_cast<std::int32_t>(idx) : parent.first;
        node.action = succ.action;
        node.reach_cost = cost;
      }
    }
  }
  offsets_.push_back(nodes_.size());
  return nodes_.size() > layer_start;
}

std::span<const LookaheadNode> LayeredExpansion::layer(int d) const {
  if (d < 0 || d > depth()) throw std::out_of_range("layer not expanded");
  const auto b = offsets_[static_cast<std::size_t>(d)];
  const auto e = offsets_[static_cast<std::size_t>(d) + 1];
  return {nodes_.data() + b, e - b};
}

std::span<const LookaheadNode> LayeredExpansion::ball() const {
  return {nodes_.data() + 1, nodes_.size() - 1};
}

std::vector<ActionId> LayeredExpansion::actions_to(std::size_t index) const {
  std::vector<ActionId> actions;
  for (auto i = static_cast<std::int32_t>(index); nodes_[i].parent >= 0;
       i = nodes_[i].parent) {
    actions.push_back(nodes_[i].action);
  }
  std::reverse(actions.begin(), actions.end());
  return actions;
}

Neighborhood neighborhood(const SearchProblem& problem, StateId origin,
                          int depth) {
  if (depth < 1) throw std::invalid_argument("neighborhood depth must be >= 1");
  LayeredExpansion expansion(problem, origin);
  for (int d = 1; d <= depth; ++d) expansion.grow();

  Neighborhood result{origin, depth, {}};
  for (const LookaheadNode& node : expansion.layer(depth)) {
    result.members.push_back({node.state, node.reach_cost,
                              expansion.actions_to(expansion.arena_index(node))});
  }
  return result;
}

namespace {

template <typename Range, typename Cost>
std::optional<FrontierChoice> pick_min(const Range& candidates,
                                       const HeuristicTable& table,
                                       double gamma, TieBreaker& ties,
                                       Cost reach_cost) {
  std::optional<FrontierChoice> best;
  std::uint64_t tied = 0;
  std::size_t i = 0;
  for (const auto& c : candidates) {
    const double value = gamma * reach_cost(c) + table.lookup(c.state);
    if (!best || value < best->value) {
      best = FrontierChoice{i, c.state, value};
      tied = 1;
    } else if (value == best->value && ties.replace(++tied)) {
      best = FrontierChoice{i, c.state, value};
    }
    ++i;
  }
  return best;
}

}  // namespace

std::optional<FrontierChoice> best_frontier(
    std::span<const LookaheadNode> candidates, const HeuristicTable& table,
    double gamma, TieBreaker& ties) {
  return pick_min(candidates, table, gamma, ties,
                  [](const LookaheadNode& n) { return n.reach_cost; });
}

std::optional<NeighborhoodChoice> best_frontier(const Neighborhood& nbhd,
                                                const HeuristicTable& table,
                                                double gamma,
                                                TieBreaker& ties) {
  auto choice = pick_min(nbhd.members, table, gamma, ties,
                         [](const Neighborhood::Member& m) { return m.reach_cost; });
  if (!choice) return std::nullopt;
  const auto& member = nbhd.members[choice->index];
  return NeighborhoodChoice{member.state, choice->value, member.actions};
}

}  // namespace lrts
