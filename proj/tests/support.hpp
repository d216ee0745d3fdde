#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "lrts/random.hpp"
#include "lrts/search_problem.hpp"

namespace lrts::testing {

/// Undirected explicit graph. Edge e yields action 2e (u -> v) and 2e+1
/// (v -> u), so inverting an action flips its low bit.
class GraphProblem final : public SearchProblem {
 public:
  struct Edge {
    int u;
    int v;
    double cost = 1.0;
  };

  GraphProblem(int nodes, std::vector<Edge> edges, std::set<int> goals, int start,
               std::vector<double> h0)
      : nodes_(nodes), edges_(std::move(edges)), goals_(std::move(goals)), start_(start),
        h0_(std::move(h0)) {}

  StateId initial_state() const override { return id(start_); }
  bool is_goal(StateId s) const override { return goals_.contains(static_cast<int>(s.value)); }
  void successors(StateId s, std::vector<Successor>& out) const override {
    out.clear();
    for (std::size_t e = 0; e < edges_.size(); ++e) {
      const auto node = static_cast<int>(s.value);
      if (edges_[e].u == node) out.push_back({ActionId{static_cast<std::uint32_t>(2 * e)}, id(edges_[e].v), edges_[e].cost});
      if (edges_[e].v == node) out.push_back({ActionId{static_cast<std::uint32_t>(2 * e + 1)}, id(edges_[e].u), edges_[e].cost});
    }
  }
  ActionId invert(ActionId a) const override { return ActionId{a.value ^ 1u}; }
  std::optional<Successor> apply(StateId s, ActionId a) const override {
    const std::size_t e = a.value / 2;
    if (e >= edges_.size()) return std::nullopt;
    const Edge& edge = edges_[e];
    const int from = (a.value & 1u) ? edge.v : edge.u;
    const int to = (a.value & 1u) ? edge.u : edge.v;
    if (static_cast<int>(s.value) != from) return std::nullopt;
    return Successor{a, id(to), edge.cost};
  }
  double initial_heuristic(StateId s) const override { return h0_.at(s.value); }

  int nodes() const { return nodes_; }
  const std::vector<Edge>& edges() const { return edges_; }
  static StateId id(int node) { return StateId{static_cast<std::uint64_t>(node)}; }

 private:
  int nodes_;
  std::vector<Edge> edges_;
  std::set<int> goals_;
  int start_;
  std::vector<double> h0_;
};

/// Path graph 0 - 1 - ... - (n-1) with the goal at the far end.
inline GraphProblem chain(std::vector<double> h0, int start = 0) {
  const int n = static_cast<int>(h0.size());
  std::vector<GraphProblem::Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1, 1.0});
  return GraphProblem(n, edges, {n - 1}, start, std::move(h0));
}

/// Connected random unit-cost graph: a random spanning tree plus extras.
inline GraphProblem random_graph(int n, int extra_edges, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<GraphProblem::Edge> edges;
  std::set<std::pair<int, int>> seen;
  for (int v = 1; v < n; ++v) {
    const int u = static_cast<int>(rng.below(static_cast<std::uint64_t>(v)));
    edges.push_back({u, v, 1.0});
    seen.insert({u, v});
  }
  for (int k = 0; k < extra_edges; ++k) {
    int u = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
    int v = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
    if (u == v) continue;
    if (u > v) std::swap(u, v);
    if (seen.insert({u, v}).second) edges.push_back({u, v, 1.0});
  }
  std::vector<double> h0(static_cast<std::size_t>(n));
  for (double& h : h0) h = static_cast<double>(rng.below(4));
  h0[static_cast<std::size_t>(n - 1)] = 0.0;
  return GraphProblem(n, edges, {n - 1}, 0, std::move(h0));
}

/// Minimum action distance from `origin` to every state within `radius`,
/// by plain queue BFS over std::map.
inline std::map<std::uint64_t, int> bfs_distances(const SearchProblem& problem, StateId origin,
                                                  int radius) {
  std::map<std::uint64_t, int> dist{{origin.value, 0}};
  std::vector<StateId> frontier{origin};
  std::vector<Successor> succ;
  for (int d = 1; d <= radius && !frontier.empty(); ++d) {
    std::vector<StateId> next;
    for (StateId s : frontier) {
      problem.successors(s, succ);
      for (const Successor& x : succ) {
        if (dist.emplace(x.next.value, d).second) next.push_back(x.next);
      }
    }
    frontier = std::move(next);
  }
  return dist;
}

inline std::set<std::uint64_t> bfs_layer(const SearchProblem& problem, StateId origin, int d) {
  std::set<std::uint64_t> out;
  for (auto [s, k] : bfs_distances(problem, origin, d)) {
    if (k == d) out.insert(s);
  }
  return out;
}

/// What one gamma-trap policy call must do, evaluated from scratch on a
/// unit-cost graph: either a move to any of `targets` at depth `depth`, or a
/// heuristic update to `raised`.
struct ReferenceDecision {
  bool trapped = false;
  int depth = 0;
  std::set<std::uint64_t> targets;
  double raised = 0.0;
};

template <class Lookup>
ReferenceDecision reference_gamma_trap(const SearchProblem& problem, StateId s, int d_max,
                                       double gamma, Lookup h) {
  ReferenceDecision out;
  const auto dist = bfs_distances(problem, s, d_max);
  const double h_s = h(s);
  double raised = -1.0;
  std::set<std::uint64_t> last_targets;
  int last_depth = 0;
  for (int d = 1; d <= d_max; ++d) {
    double best = 0.0;
    std::set<std::uint64_t> argmin;
    for (auto [state, k] : dist) {
      if (k != d) continue;
      const double v = gamma * d + h(StateId{state});
      if (argmin.empty() || v < best) {
        best = v;
        argmin = {state};
      } else if (v == best) {
        argmin.insert(state);
      }
    }
    if (argmin.empty()) break;
    if (best <= h_s) {
      out.depth = d;
      out.targets = argmin;
      return out;
    }
    raised = std::max(raised, best);
    last_targets = argmin;
    last_depth = d;
  }
  out.trapped = true;
  out.raised = raised;
  out.depth = last_depth;
  out.targets = last_targets;
  return out;
}

}  // namespace lrts::testing
