#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lrts/agents.hpp"
#include "lrts/harness.hpp"
#include "lrts/instances.hpp"
#include "lrts/oracle.hpp"
#include "lrts/stability.hpp"

namespace lrts {

enum class Experiment { kConvergence, kMemory, kStability, kFirstTrial };
enum class Domain { kPuzzle8, kPuzzle15 };

std::string_view to_string(Experiment e) noexcept;
std::string_view to_string(Domain d) noexcept;
std::optional<Experiment> parse_experiment(std::string_view name) noexcept;
std::optional<Domain> parse_domain(std::string_view name) noexcept;

struct ExperimentConfig {
  Experiment experiment = Experiment::kConvergence;
  Domain domain = Domain::kPuzzle8;
  int folds = 10;
  int instances_per_fold = 100;
  std::vector<int> lookaheads = {1, 2, 5, 10, 15};
  // Algorithm and parameters; the lookahead and seed fields are filled in
  // per run from `lookaheads` and the seed rule.
  std::vector<AgentConfig> agents;
  std::size_t move_limit = kDefaultMoveLimit;
  std::size_t memory_limit = kDefaultMemoryLimit;
  std::uint64_t master_seed = 1;
  std::filesystem::path korf_file;
  std::optional<std::filesystem::path> optimal_cache;
  std::uint64_t ida_budget = kDefaultIdaBudget;
  int jobs = 1;

  void validate() const;
};

struct InstanceFold {
  int fold = 0;
  std::vector<PuzzleInstance> instances;
};

/// Seed tag for instance generation, distinct from every agent tag.
inline constexpr std::string_view kInstanceSeedTag = "instance";

/// Random 8-puzzle folds; instance i of fold f is drawn from
/// derive_seed(master, f, i, fnv1a("instance")).
std::vector<InstanceFold> random_folds(int folds, int per_fold, int width,
                                       int height, std::uint64_t master_seed);

/// Seed of one agent run: derive_seed(master, fold, instance, fnv1a(tag))
/// where tag is "<label>@<lookahead>".
std::uint64_t agent_seed(std::uint64_t master, int fold, int instance_id,
                         const AgentConfig& config);

/// One CSV row: a single algorithm/lookahead run on one instance.
struct RunRow {
  Experiment experiment = Experiment::kConvergence;
  Algorithm algorithm = Algorithm::kLrta;
  std::optional<double> gamma;
  std::optional<double> epsilon;
  int lookahead = 1;
  int fold = 0;
  int instance_id = 0;
  std::uint64_t seed = 0;
  std::optional<int> converged_at;
  double convergence_cost = 0.0;
  double final_cost = 0.0;
  std::optional<int> optimal_cost;
  std::optional<double> final_ratio_pct;
  std::size_t stored_values = 0;
  std::optional<StabilityIndices> indices;
  std::optional<LimitHit> limit_hit;
  int trials = 0;
  double first_trial_cost = 0.0;

  std::string label() const;
};

/// Builds a CSV row from a convergence (or single-trial) record.
RunRow make_row(Experiment experiment, const AgentConfig& config, int fold,
                const ConvergenceRecord& record, std::optional<int> optimal);

/// Runs every (fold, instance, agent, lookahead) combination. Rows come
/// back sorted by (algorithm order in config, lookahead, fold, instance)
/// regardless of `jobs`.
std::vector<RunRow> run_experiment(const ExperimentConfig& config,
                                   const std::vector<InstanceFold>& folds,
                                   const std::function<std::optional<int>(const PuzzleInstance&)>& optimal);

}  // namespace lrts
