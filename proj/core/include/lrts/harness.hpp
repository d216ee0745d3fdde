#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <string_view>
#include <vector>

#include "lrts/agents.hpp"

namespace lrts {

inline constexpr std::size_t kDefaultMoveLimit = 500'000;
inline constexpr std::size_t kDefaultMemoryLimit = 4'000'000;
inline constexpr std::size_t kUnlimitedMoves = std::numeric_limits<std::size_t>::max();

enum class LimitHit { kMoves, kMemory };

std::string_view to_string(LimitHit limit) noexcept;

struct TrialRecord {
  int trial_index = 1;
  double solution_cost = 0.0;  // every executed action, backtracks included
  std::size_t h_updates = 0;
  std::size_t moves = 0;
  std::size_t stored_values = 0;  // table size when the trial ended
  bool hit_move_limit = false;
  bool hit_memory_limit = false;
};

struct ConvergenceRecord {
  int instance_id = 0;
  std::vector<TrialRecord> trials;
  std::optional<int> converged_at;  // first trial with no h updates
  double convergence_cost = 0.0;    // sum of solution costs, trials 1..N
  double final_cost = 0.0;          // last trial's cost
  std::size_t stored_values = 0;
  std::optional<LimitHit> limit_hit;
};

struct RunLimits {
  std::size_t move_limit = kDefaultMoveLimit;
  // Applies per instance; nullopt disables the check.
  std::optional<std::size_t> memory_limit = kDefaultMemoryLimit;
};

/// One trial from s0 to a goal (or a limit). The agent is reset to s0 with
/// its table preserved before and after the trial. Execution of a multi-
/// action policy output stops as soon as a goal is entered.
TrialRecord run_trial(Agent& agent, const RunLimits& limits, int trial_index = 1);

/// Repeats trials until one completes without heuristic updates, a trial
/// hits the move limit, or the table grows beyond the memory limit.
ConvergenceRecord run_until_convergence(Agent& agent, const RunLimits& limits,
                                        int instance_id = 0);

}  // namespace lrts
