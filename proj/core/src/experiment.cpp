#include "lrts/experiment.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <utility>

#include "lrts/tile_puzzle.hpp"

namespace lrts {

namespace {

constexpr std::array<std::pair<Experiment, std::string_view>, 4> kExperiments = {{
    {Experiment::kConvergence, "convergence"},
    {Experiment::kMemory, "memory"},
    {Experiment::kStability, "stability"},
    {Experiment::kFirstTrial, "first-trial"},
}};

constexpr std::array<std::pair<Domain, std::string_view>, 2> kDomains = {{
    {Domain::kPuzzle8, "puzzle8"},
    {Domain::kPuzzle15, "puzzle15"},
}};

}  // namespace

std::string_view to_string(Experiment e) noexcept {
  for (const auto& [k, v] : kExperiments) {
    if (k == e) return v;
  }
  return "unknown";
}

std::string_view to_string(Domain d) noexcept {
  for (const auto& [k, v] : kDomains) {
    if (k == d) return v;
  }
  return "unknown";
}

std::optional<Experiment> parse_experiment(std::string_view name) noexcept {
  for (const auto& [k, v] : kExperiments) {
    if (v == name) return k;
  }
  if (name == "first_trial") return Experiment::kFirstTrial;
  return std::nullopt;
}

std::optional<Domain> parse_domain(std::string_view name) noexcept {
  for (const auto& [k, v] : kDomains) {
    if (v == name) return k;
  }
  return std::nullopt;
}

void ExperimentConfig::validate() const {
  if (folds < 1) throw std::invalid_argument("folds must be >= 1");
  if (instances_per_fold < 1) throw std::invalid_argument("instances must be >= 1");
  if (lookaheads.empty()) throw std::invalid_argument("at least one lookahead is required");
  for (int d : lookaheads) {
    if (d < 1) throw std::invalid_argument("lookahead must be >= 1");
  }
  if (agents.empty()) throw std::invalid_argument("at least one algorithm is required");
  for (const AgentConfig& a : agents) {
    a.validate();
    if (a.algorithm == Algorithm::kRta && experiment != Experiment::kFirstTrial) {
      throw std::invalid_argument("rta does not learn; use it with --experiment first-trial");
    }
  }
  if (move_limit < 1) throw std::invalid_argument("move limit must be >= 1");
  if (memory_limit < 1) throw std::invalid_argument("memory limit must be >= 1");
  if (jobs < 1) throw std::invalid_argument("jobs must be >= 1");
  if (domain == Domain::kPuzzle15 && korf_file.empty()) {
    throw std::invalid_argument("puzzle15 requires --korf-file");
  }
}

std::vector<InstanceFold> random_folds(int folds, int per_fold, int width,
                                       int height, std::uint64_t master_seed) {
  const std::uint64_t tag = fnv1a(kInstanceSeedTag);
  std::vector<InstanceFold> out;
  for (int f = 0; f < folds; ++f) {
    InstanceFold fold{f, {}};
    for (int i = 0; i < per_fold; ++i) {
      Rng rng(derive_seed(master_seed, static_cast<std::uint64_t>(f),
                          static_cast<std::uint64_t>(i), tag));
      fold.instances.push_back({i, random_solvable(width, height, rng), std::nullopt});
    }
    out.push_back(std::move(fold));
  }
  return out;
}

std::uint64_t agent_seed(std::uint64_t master, int fold, int instance_id,
                         const AgentConfig& config) {
  const std::string tag = config.label() + "@" + std::to_string(config.lookahead);
  return derive_seed(master, static_cast<std::uint64_t>(fold),
                     static_cast<std::uint64_t>(instance_id), fnv1a(tag));
}

std::string RunRow::label() const {
  AgentConfig c;
  c.algorithm = algorithm;
  c.gamma = gamma.value_or(1.0);
  c.epsilon = epsilon.value_or(0.0);
  return c.label();
}

RunRow make_row(Experiment experiment, const AgentConfig& config, int fold,
                const ConvergenceRecord& record, std::optional<int> optimal) {
  RunRow row;
  row.experiment = experiment;
  row.algorithm = config.algorithm;
  if (config.algorithm == Algorithm::kGammaTrap ||
      config.algorithm == Algorithm::kGammaTrapBacktrack) {
    row.gamma = config.gamma;
  }
  if (config.algorithm == Algorithm::kIlrta) row.epsilon = config.epsilon;
  row.lookahead = config.lookahead;
  row.fold = fold;
  row.instance_id = record.instance_id;
  row.seed = config.seed;
  row.converged_at = record.converged_at;
  row.convergence_cost = record.convergence_cost;
  row.final_cost = record.final_cost;
  row.optimal_cost = optimal;
  row.stored_values = record.stored_values;
  row.limit_hit = record.limit_hit;
  row.trials = static_cast<int>(record.trials.size());
  row.first_trial_cost = record.trials.empty() ? 0.0 : record.trials.front().solution_cost;

  const bool complete = record.converged_at ||
                        (experiment == Experiment::kFirstTrial && !record.limit_hit);
  if (optimal && complete) {
    if (*optimal > 0) {
      row.final_ratio_pct = 100.0 * record.final_cost / *optimal;
    }
    if (record.converged_at && *optimal > 0) {
      std::vector<double> costs;
      for (const TrialRecord& t : record.trials) costs.push_back(t.solution_cost);
      row.indices = stability(costs, *optimal);
    }
  }
  return row;
}

std::vector<RunRow> run_experiment(
    const ExperimentConfig& config, const std::vector<InstanceFold>& folds,
    const std::function<std::optional<int>(const PuzzleInstance&)>& optimal) {
  struct Task {
    AgentConfig agent;
    const InstanceFold* fold;
    const PuzzleInstance* instance;
  };
  std::vector<Task> tasks;
  for (const AgentConfig& base : config.agents) {
    for (int d : config.lookaheads) {
      for (const InstanceFold& fold : folds) {
        for (const PuzzleInstance& inst : fold.instances) {
          AgentConfig a = base;
          a.lookahead = d;
          a.seed = agent_seed(config.master_seed, fold.fold, inst.id, a);
          tasks.push_back({a, &fold, &inst});
        }
      }
    }
  }

  const RunLimits limits{config.move_limit, config.memory_limit};
  const bool single_trial = config.experiment == Experiment::kFirstTrial;
  std::vector<RunRow> rows(tasks.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      try {
        const Task& task = tasks[i];
        TilePuzzle puzzle(task.instance->start);
        Agent agent(puzzle, task.agent);
        ConvergenceRecord record;
        if (single_trial) {
          record.instance_id = task.instance->id;
          TrialRecord t = run_trial(agent, limits, 1);
          record.trials.push_back(t);
          record.convergence_cost = record.final_cost = t.solution_cost;
          record.stored_values = t.stored_values;
          if (t.hit_move_limit) record.limit_hit = LimitHit::kMoves;
          if (t.hit_memory_limit) record.limit_hit = LimitHit::kMemory;
          if (t.h_updates == 0 && !record.limit_hit) record.converged_at = 1;
        } else {
          record = run_until_convergence(agent, limits, task.instance->id);
        }
        rows[i] = make_row(config.experiment, task.agent, task.fold->fold, record,
                           optimal(*task.instance));
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = tasks.size();
      }
    }
  };

  const int workers = std::max(1, std::min<int>(config.jobs, static_cast<int>(tasks.size())));
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);
  return rows;
}

}  // namespace lrts
