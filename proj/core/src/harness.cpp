#include "lrts/harness.hpp"

namespace lrts {

std::string_view to_string(LimitHit limit) noexcept {
  return limit == LimitHit::kMoves ? "MOVES" : "MEMORY";
}

TrialRecord run_trial(Agent& agent, const RunLimits& limits, int trial_index) {
  agent.begin_trial();
  const SearchProblem& problem = agent.problem();
  TrialRecord record;
  record.trial_index = trial_index;

  auto over_memory = [&] {
    return limits.memory_limit && agent.table().stored_count() > *limits.memory_limit;
  };

  while (!problem.is_goal(agent.state().current)) {
    if (record.moves >= limits.move_limit) {
      record.hit_move_limit = true;
      break;
    }
    for (ActionId a : agent.step()) {
      record.solution_cost += agent.execute(a);
      ++record.moves;
      if (problem.is_goal(agent.state().current) || record.moves >= limits.move_limit) {
        break;
      }
    }
    if (over_memory()) {
      record.hit_memory_limit = true;
      break;
    }
  }
  record.h_updates = agent.table().updates_this_trial();
  record.stored_values = agent.table().stored_count();
  agent.begin_trial();
  // begin_trial() zeroes the per-trial update counter; RTA* also drops its
  // table, which is why stored_values was captured first.
  return record;
}

ConvergenceRecord run_until_convergence(Agent& agent, const RunLimits& limits,
                                        int instance_id) {
  ConvergenceRecord record;
  record.instance_id = instance_id;
  for (int trial = 1;; ++trial) {
    TrialRecord t = run_trial(agent, limits, trial);
    record.trials.push_back(t);
    record.convergence_cost += t.solution_cost;
    record.final_cost = t.solution_cost;
    record.stored_values = t.stored_values;
    if (t.hit_move_limit) {
      record.limit_hit = LimitHit::kMoves;
      break;
    }
    if (t.hit_memory_limit) {
      record.limit_hit = LimitHit::kMemory;
      break;
    }
    if (t.h_updates == 0) {
      record.converged_at = trial;
      break;
    }
  }
  return record;
}

}  // namespace lrts
