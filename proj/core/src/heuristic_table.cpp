#include "lrts/heuristic_table.hpp"

#include <stdexcept>
#include <utility>

namespace lrts {

HeuristicTable::HeuristicTable(Base base, double weight)
    : base_(std::move(base)), weight_(weight) {
  if (!base_) throw std::invalid_argument("heuristic table needs a base");
  if (!(weight >= 1.0)) {
    throw std::invalid_argument("heuristic weight must be >= 1");
  }
}

double HeuristicTable::lookup(StateId s) const {
  if (auto it = overlay_.find(s); it != overlay_.end()) return it->second;
  return weight_ * base_(s);
}

WriteOutcome HeuristicTable::write(StateId s, double value, bool upward_only) {
  if (!(value >= 0.0)) {
    throw std::invalid_argument("heuristic values must be non-negative");
  }
  auto it = overlay_.find(s);
  const double current = it != overlay_.end() ? it->second : weight_ * base_(s);
  if (upward_only && value < current) return WriteOutcome::kRejected;

  if (it == overlay_.end()) {
    overlay_.emplace(s, value);
  } else {
    it->second = value;
  }
  if (value == current) return WriteOutcome::kUnchanged;
  ++updates_;
  return WriteOutcome::kStored;
}

void HeuristicTable::clear() {
  overlay_.clear();
  updates_ = 0;
}

}  // namespace lrts
