#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "lrts/heuristic_table.hpp"
#include "lrts/lookahead.hpp"
#include "lrts/random.hpp"
#include "lrts/search_problem.hpp"

namespace lrts {

enum class Algorithm {
  kGammaTrapBacktrack,  // gtrap-bt
  kGammaTrap,           // gtrap
  kLrta,                // lrta
  kRta,                 // rta
  kIlrta,               // ilrta (weighted when epsilon > 0)
};

std::string_view to_string(Algorithm algorithm) noexcept;
std::optional<Algorithm> parse_algorithm(std::string_view name) noexcept;

/// True for algorithms whose table only ever moves upward.
bool upward_only(Algorithm algorithm) noexcept;
bool learns(Algorithm algorithm) noexcept;

struct AgentConfig {
  Algorithm algorithm = Algorithm::kGammaTrapBacktrack;
  int lookahead = 1;     // maximum lookahead depth in plies
  double gamma = 1.0;    // gamma-trap family only
  double epsilon = 0.0;  // ilrta only; h0 is scaled by (1 + epsilon)
  std::uint64_t seed = 0;

  /// Figure-style label: gTrap-BT-0.2, gTrap-1.0, LRTA, RTA, eiLRTA-0.5.
  std::string label() const;
  /// Throws std::invalid_argument on out-of-range parameters.
  void validate() const;
};

/// Second-best sentinel stored by RTA* when only one first move exists.
inline constexpr double kRtaInfinity = 1e9;

/// Raised when a state has no successors within the lookahead; impossible in
/// a connected domain.
class DomainViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct TrailEntry {
  StateId previous;
  std::vector<ActionId> forward;  // actions that led from `previous`
};

struct AgentState {
  StateId start;
  StateId current;
  HeuristicTable table;
  std::vector<TrailEntry> trail;
  double trial_travel_cost = 0.0;
  std::vector<ActionId> trial_actions;
};

/// Per-agent scratch reused between policy calls.
struct StepContext {
  LayeredExpansion expansion;
  TieBreaker ties;
};

// Policy calls. Each one may update `agent.table` and `agent.trail` but does
// not move the agent; the caller executes the returned actions.
std::vector<ActionId> gamma_trap_step(AgentState& agent,
                                      const SearchProblem& problem,
                                      const AgentConfig& config,
                                      StepContext& ctx);
std::vector<ActionId> lrta_step(AgentState& agent, const SearchProblem& problem,
                                const AgentConfig& config, StepContext& ctx);
std::vector<ActionId> rta_step(AgentState& agent, const SearchProblem& problem,
                               const AgentConfig& config, StepContext& ctx);
std::vector<ActionId> ilrta_step(AgentState& agent, const SearchProblem& problem,
                                 const AgentConfig& config, StepContext& ctx);

/// One learning real-time agent bound to one problem instance. The table
/// persists across trials; begin_trial() puts the agent back at s0.
class Agent {
 public:
  Agent(const SearchProblem& problem, AgentConfig config);

  /// One policy call from the current state (which must not be a goal).
  std::vector<ActionId> step();

  /// Executes one action, returning its cost.
  double execute(ActionId action);

  void begin_trial();

  const SearchProblem& problem() const noexcept { return *problem_; }
  const AgentConfig& config() const noexcept { return config_; }
  const AgentState& state() const noexcept { return state_; }
  AgentState& state() noexcept { return state_; }
  const HeuristicTable& table() const noexcept { return state_.table; }
  HeuristicTable& table() noexcept { return state_.table; }

 private:
  const SearchProblem* problem_;
  AgentConfig config_;
  AgentState state_;
  StepContext ctx_;
};

}  // namespace lrts
