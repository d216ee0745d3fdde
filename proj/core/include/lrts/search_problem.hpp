#pragma once

#include <optional>
#include <vector>

#include "lrts/types.hpp"

namespace lrts {

struct Successor {
  ActionId action;
  StateId next;
  double cost = 1.0;
};

/// A deterministic state space with reversible, positively-priced actions.
///
/// Implementations must guarantee that every successor cost is > 0 and that
/// applying `invert(a)` in the successor reached by `a` returns to the source
/// state. Agents rely on the latter to backtrack.
class SearchProblem {
 public:
  virtual ~SearchProblem() = default;

  virtual StateId initial_state() const = 0;
  virtual bool is_goal(StateId s) const = 0;

  /// Replaces the contents of `out` with the successors of `s`.
  virtual void successors(StateId s, std::vector<Successor>& out) const = 0;

  virtual ActionId invert(ActionId a) const = 0;

  /// Applies a single action; nullopt when `a` is not applicable in `s`.
  virtual std::optional<Successor> apply(StateId s, ActionId a) const = 0;

  /// Initial (admissible) heuristic h0.
  virtual double initial_heuristic(StateId s) const = 0;
};

}  // namespace lrts
