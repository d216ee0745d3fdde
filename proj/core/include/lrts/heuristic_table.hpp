#pragma once

#include <cstddef>
#include <functional>
#include <unordered_map>

#include "lrts/types.hpp"

namespace lrts {

enum class WriteOutcome {
  kStored,     // value changed (or first write with a new value)
  kUnchanged,  // value equal to what lookup() already returned
  kRejected,   // upward-only write below the current value
};

/// Learned heuristic: a sparse overlay of written values over a weighted
/// base heuristic.
///
///   lookup(s) = overlay[s]            if s was ever written
///             = weight * base(s)      otherwise
///
/// Only overlay entries count as stored values; the base is recomputed on
/// demand.
class HeuristicTable {
 public:
  using Base = std::function<double(StateId)>;

  explicit HeuristicTable(Base base, double weight = 1.0);

  double lookup(StateId s) const;
  bool contains(StateId s) const { return overlay_.contains(s); }

  /// Stores `value` at `s`. With `upward_only`, a value below the current
  /// lookup is refused and nothing changes.
  WriteOutcome write(StateId s, double value, bool upward_only);

  std::size_t stored_count() const noexcept { return overlay_.size(); }
  std::size_t updates_this_trial() const noexcept { return updates_; }
  double weight() const noexcept { return weight_; }

  void begin_trial() noexcept { updates_ = 0; }

  /// Drops every learned value (RTA* keeps its table for one trial only).
  void clear();

  const std::unordered_map<StateId, double, StateIdHash>& overlay() const {
    return overlay_;
  }

 private:
  Base base_;
  double weight_;
  std::unordered_map<StateId, double, StateIdHash> overlay_;
  std::size_t updates_ = 0;
};

}  // namespace lrts
