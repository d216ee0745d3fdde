#include "lrts/agents.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <limits>

namespace lrts {

namespace {

constexpr std::array<std::pair<Algorithm, std::string_view>, 5> kNames = {{
    {Algorithm::kGammaTrapBacktrack, "gtrap-bt"},
    {Algorithm::kGammaTrap, "gtrap"},
    {Algorithm::kLrta, "lrta"},
    {Algorithm::kRta, "rta"},
    {Algorithm::kIlrta, "ilrta"},
}};

// Shortest round-trip text with at least one fractional digit (0.2, 1.0).
std::string param_text(double v) {
  char buf[32];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  std::string s(buf, end);
  if (s.find_first_of(".e") == std::string::npos) s += ".0";
  return s;
}

void require_not_goal(const AgentState& agent, const SearchProblem& problem) {
  if (problem.is_goal(agent.current)) {
    throw std::logic_error("policy invoked in a goal state");
  }
}

void push_trail(AgentState& agent, StateId destination,
                const std::vector<ActionId>& actions) {
  // The trail records the route from s0; arriving back at s0 empties it.
  if (destination == agent.start) {
    agent.trail.clear();
  } else {
    agent.trail.push_back({agent.current, actions});
  }
}

std::vector<ActionId> backtrack(AgentState& agent, const SearchProblem& problem) {
  if (agent.current == agent.start) return {};
  if (agent.trail.empty()) {
    throw std::logic_error("backtracking trail empty away from s0");
  }
  TrailEntry entry = std::move(agent.trail.back());
  agent.trail.pop_back();
  std::vector<ActionId> back;
  back.reserve(entry.forward.size());
  for (auto it = entry.forward.rbegin(); it != entry.forward.rend(); ++it) {
    back.push_back(problem.invert(*it));
  }
  return back;
}

enum class Backup { kLrta, kIlrta, kRta };

// Mini-min lookahead over the whole depth-d ball (interior and frontier).
std::vector<ActionId> minimin_step(AgentState& agent,
                                   const SearchProblem& problem,
                                   const AgentConfig& config, StepContext& ctx,
                                   Backup mode) {
  require_not_goal(agent, problem);
  HeuristicTable& table = agent.table;
  LayeredExpansion& expansion = ctx.expansion;
  expansion.reset(agent.current);
  for (int d = 1; d <= config.lookahead; ++d) {
    if (!expansion.grow()) break;
  }
  const auto& arena = expansion.arena();
  if (arena.size() < 2) {
    throw DomainViolation("no successors within lookahead");
  }

  const double h_current = table.lookup(agent.current);
  std::vector<double> f(arena.size());
  f[0] = h_current;
  std::size_t best = 0;
  std::uint64_t tied = 0;
  for (std::size_t i = 1; i < arena.size(); ++i) {
    const LookaheadNode& node = arena[i];
    double value = node.reach_cost + table.lookup(node.state);
    if (mode == Backup::kIlrta) {
      value = std::max(value, f[static_cast<std::size_t>(node.parent)]);
    }
    f[i] = value;
    if (best == 0 || value < f[best]) {
      best = i;
      tied = 1;
    } else if (value == f[best] && ctx.ties.replace(++tied)) {
      best = i;
    }
  }

  const double backed_up = f[best];
  switch (mode) {
    case Backup::kLrta:
      if (backed_up != h_current) table.write(agent.current, backed_up, false);
      break;
    case Backup::kIlrta:
      if (backed_up > h_current) table.write(agent.current, backed_up, true);
      break;
    case Backup::kRta: {
      const std::int32_t best_first = arena[best].first;
      double second = kRtaInfinity;
      for (std::size_t i = 1; i < arena.size(); ++i) {
        if (arena[i].first != best_first) second = std::min(second, f[i]);
      }
      if (second != h_current) table.write(agent.current, second, false);
      break;
    }
  }
  const auto first = static_cast<std::size_t>(arena[best].first);
  return {arena[first].action};
}

}  // namespace

std::string_view to_string(Algorithm algorithm) noexcept {
  for (const auto& [a, name] : kNames) {
    if (a == algorithm) return name;
  }
  return "unknown";
}

std::optional<Algorithm> parse_algorithm(std::string_view name) noexcept {
  for (const auto& [a, n] : kNames) {
    if (n == name) return a;
  }
  return std::nullopt;
}

bool upward_only(Algorithm algorithm) noexcept {
  return algorithm == Algorithm::kGammaTrapBacktrack ||
         algorithm == Algorithm::kGammaTrap || algorithm == Algorithm::kIlrta;
}

bool learns(Algorithm algorithm) noexcept { return algorithm != Algorithm::kRta; }

std::string AgentConfig::label() const {
  switch (algorithm) {
    case Algorithm::kGammaTrapBacktrack: return "gTrap-BT-" + param_text(gamma);
    case Algorithm::kGammaTrap: return "gTrap-" + param_text(gamma);
    case Algorithm::kLrta: return "LRTA";
    case Algorithm::kRta: return "RTA";
    case Algorithm::kIlrta:
      return epsilon > 0.0 ? "eiLRTA-" + param_text(epsilon) : "iLRTA";
  }
  return "unknown";
}

void AgentConfig::validate() const {
  if (lookahead < 1) throw std::invalid_argument("lookahead must be >= 1");
  if (!(gamma > 0.0 && gamma <= 1.0)) {
    throw std::invalid_argument("gamma must lie in (0, 1]");
  }
  if (!(epsilon >= 0.0) || !std::isfinite(epsilon)) {
    throw std::invalid_argument("epsilon must be a finite value >= 0");
  }
}

std::vector<ActionId> gamma_trap_step(AgentState& agent,
                                      const SearchProblem& problem,
                                      const AgentConfig& config,
                                      StepContext& ctx) {
  require_not_goal(agent, problem);
  const bool backtracking = config.algorithm == Algorithm::kGammaTrapBacktrack;
  HeuristicTable& table = agent.table;
  LayeredExpansion& expansion = ctx.expansion;
  expansion.reset(agent.current);

  const double h_current = table.lookup(agent.current);
  double raised = -std::numeric_limits<double>::infinity();
  std::optional<FrontierChoice> deepest;
  int deepest_depth = 0;

  for (int d = 1; d <= config.lookahead; ++d) {
    // An empty layer traps at this depth and contributes nothing to the
    // max-min update; deeper layers are empty as well.
    if (!expansion.grow()) break;
    const auto layer = expansion.layer(d);
    auto choice = best_frontier(layer, table, config.gamma, ctx.ties);
    if (choice->value <= h_current) {
      const LookaheadNode& node = layer[choice->index];
      auto actions = expansion.actions_to(expansion.arena_index(node));
      if (backtracking) push_trail(agent, node.state, actions);
      return actions;
    }
    raised = std::max(raised, choice->value);
    deepest = choice;
    deepest_depth = d;
  }
  if (!deepest) throw DomainViolation("no successors within lookahead");

  // Trapped at every depth: each depth's minimum exceeds h(current), so the
  // max-min is a strict increase.
  if (table.write(agent.current, raised, true) != WriteOutcome::kStored) {
    throw std::logic_error("gamma-trap update did not raise h");
  }
  if (backtracking) return backtrack(agent, problem);

  const LookaheadNode& node = expansion.layer(deepest_depth)[deepest->index];
  return expansion.actions_to(expansion.arena_index(node));
}

std::vector<ActionId> lrta_step(AgentState& agent, const SearchProblem& problem,
                                const AgentConfig& config, StepContext& ctx) {
  return minimin_step(agent, problem, config, ctx, Backup::kLrta);
}

std::vector<ActionId> rta_step(AgentState& agent, const SearchProblem& problem,
                               const AgentConfig& config, StepContext& ctx) {
  return minimin_step(agent, problem, config, ctx, Backup::kRta);
}

std::vector<ActionId> ilrta_step(AgentState& agent, const SearchProblem& problem,
                                 const AgentConfig& config, StepContext& ctx) {
  return minimin_step(agent, problem, config, ctx, Backup::kIlrta);
}

Agent::Agent(const SearchProblem& problem, AgentConfig config)
    : problem_(&problem),
      config_(config),
      state_{problem.initial_state(),
             problem.initial_state(),
             HeuristicTable(
                 [p = &problem](StateId s) { return p->initial_heuristic(s); },
                 config.algorithm == Algorithm::kIlrta ? 1.0 + config.epsilon : 1.0),
             {},
             0.0,
             {}},
      ctx_{LayeredExpansion(problem), TieBreaker(config.seed)} {
  config_.validate();
}

std::vector<ActionId> Agent::step() {
  switch (config_.algorithm) {
    case Algorithm::kGammaTrapBacktrack:
    case Algorithm::kGammaTrap:
      return gamma_trap_step(state_, *problem_, config_, ctx_);
    case Algorithm::kLrta:
      return lrta_step(state_, *problem_, config_, ctx_);
    case Algorithm::kRta:
      return rta_step(state_, *problem_, config_, ctx_);
    case Algorithm::kIlrta:
      return ilrta_step(state_, *problem_, config_, ctx_);
  }
  throw std::logic_error("unknown algorithm");
}

double Agent::execute(ActionId action) {
  auto succ = problem_->apply(state_.current, action);
  if (!succ) throw std::logic_error("agent produced an inapplicable action");
  state_.current = succ->next;
  state_.trial_travel_cost += succ->cost;
  state_.trial_actions.push_back(action);
  return succ->cost;
}

void Agent::begin_trial() {
  state_.current = state_.start;
  state_.trail.clear();
  state_.trial_travel_cost = 0.0;
  state_.trial_actions.clear();
  if (config_.algorithm == Algorithm::kRta) {
    state_.table.clear();
  } else {
    state_.table.begin_trial();
  }
}

}  // namespace lrts
