#include "commands.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <ostream>
#include <unordered_map>

#include "lrts/aggregate.hpp"
#include "lrts/csv.hpp"
#include "lrts/oracle.hpp"
#include "lrts/random.hpp"
#include "plots.hpp"

namespace lrts::cli {

namespace {

std::ofstream open_output(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  return out;
}

OptimalCostCache load_cache(const std::optional<std::filesystem::path>& path) {
  if (path && std::filesystem::exists(*path)) return OptimalCostCache::load(*path);
  return {};
}

}  // namespace

std::string family_stem(Experiment experiment) {
  std::string stem(to_string(experiment));
  std::replace(stem.begin(), stem.end(), '-', '_');
  return stem;
}

std::vector<InstanceFold> select_folds(const RunOptions& options) {
  const ExperimentConfig& c = options.config;
  if (c.domain == Domain::kPuzzle8) {
    return random_folds(c.folds, c.instances_per_fold, 3, 3, c.master_seed);
  }

  std::vector<PuzzleInstance> all = load_instances(c.korf_file, 4, 4);
  const std::size_t wanted =
      static_cast<std::size_t>(c.folds) * static_cast<std::size_t>(c.instances_per_fold);
  if (options.easiest) {
    std::stable_sort(all.begin(), all.end(), [](const PuzzleInstance& a, const PuzzleInstance& b) {
      return manhattan(a.start) < manhattan(b.start);
    });
  }
  if (all.size() < wanted) {
    throw ConfigError(c.korf_file.string() + " holds " + std::to_string(all.size()) +
                      " instances; " + std::to_string(c.folds) + " folds of " +
                      std::to_string(c.instances_per_fold) + " need " + std::to_string(wanted));
  }
  std::vector<InstanceFold> folds;
  for (int f = 0; f < c.folds; ++f) {
    InstanceFold fold{f, {}};
    const auto first = all.begin() + static_cast<std::ptrdiff_t>(f) * c.instances_per_fold;
    fold.instances.assign(first, first + c.instances_per_fold);
    folds.push_back(std::move(fold));
  }
  return folds;
}

RunManifest run_command(const RunOptions& options, std::ostream& log) {
  const ExperimentConfig& c = options.config;
  RunManifest manifest{options, replay_arguments(options), std::chrono::system_clock::now(), {}, {}};

  const std::vector<InstanceFold> folds = select_folds(options);

  // Optimal costs are resolved up front so workers only read a frozen map.
  std::unordered_map<std::string, std::optional<int>> optimal_by_board;
  if (c.domain == Domain::kPuzzle8) {
    log << "computing 8-puzzle distances by breadth-first search\n";
    const BfsOracle oracle = make_tile_oracle(3, 3);
    for (const InstanceFold& f : folds) {
      for (const PuzzleInstance& inst : f.instances) {
        optimal_by_board[OptimalCostCache::key(inst.start)] = bfs_optimal(oracle, inst.start.pack());
      }
    }
  } else {
    OptimalCostCache cache = load_cache(c.optimal_cache);
    std::size_t solved = 0, missing = 0;
    for (const InstanceFold& f : folds) {
      for (const PuzzleInstance& inst : f.instances) {
        std::optional<int> cost = inst.known_optimal_cost;
        if (!cost) cost = cache.find(inst.start);
        if (!cost && c.ida_budget > 0) {
          const IdaResult r = ida_star_optimal(inst.start, c.ida_budget);
          if (r.cost) {
            cache.insert(inst.start, *r.cost, Provenance::kIdaStar);
            ++solved;
          }
          cost = r.cost;
        }
        if (!cost) ++missing;
        optimal_by_board[OptimalCostCache::key(inst.start)] = cost;
      }
    }
    if (solved > 0) log << "IDA* solved " << solved << " instances\n";
    if (missing > 0) {
      log << "warning: no optimal cost for " << missing
          << " instances; their ratio and stability columns are empty\n";
    }
    if (c.optimal_cache && solved > 0) cache.save(*c.optimal_cache);
  }

  log << "running " << c.agents.size() << " agents x " << c.lookaheads.size() << " lookaheads x "
      << folds.size() << " folds\n";
  const std::vector<RunRow> rows =
      run_experiment(c, folds, [&](const PuzzleInstance& inst) {
        return optimal_by_board.at(OptimalCostCache::key(inst.start));
      });
  const std::vector<SummaryRow> summary = aggregate(rows);

  std::filesystem::create_directories(options.out_dir);
  const std::string stem = family_stem(c.experiment);
  const auto runs_path = options.out_dir / (stem + "_runs.csv");
  const auto summary_path = options.out_dir / (stem + "_summary.csv");
  {
    auto out = open_output(runs_path);
    write_runs_csv(out, rows);
  }
  {
    auto out = open_output(summary_path);
    write_summary_csv(out, summary);
  }
  manifest.outputs = {runs_path.filename().string(), summary_path.filename().string()};
  if (options.plots) {
    for (const auto& p : emit_plots(summary, options.out_dir / "plots")) {
      manifest.outputs.push_back((std::filesystem::path("plots") / p.filename()).string());
    }
  }
  manifest.finished = std::chrono::system_clock::now();
  write_manifest(manifest, options.out_dir / "manifest.json");

  std::size_t limited = 0;
  for (const RunRow& r : rows) limited += r.limit_hit.has_value();
  log << rows.size() << " runs (" << limited << " hit a limit) written to "
      << options.out_dir.string() << "\n";
  return manifest;
}

std::vector<std::filesystem::path> plot_command(const std::filesystem::path& summary_csv,
                                                const std::filesystem::path& out_dir,
                                                std::ostream& log) {
  std::ifstream in(summary_csv);
  if (!in) throw ConfigError("cannot open " + summary_csv.string());
  const auto rows = parse_summary(read_csv(in));
  if (rows.empty()) {
    log << "warning: " << summary_csv.string() << " has no rows; no plots written\n";
    return {};
  }
  return emit_plots(rows, out_dir);
}

std::size_t oracle_command(const OracleOptions& options, std::ostream& log) {
  const auto instances = load_instances(options.instance_file, options.width, options.height);
  OptimalCostCache cache = load_cache(options.cache);
  std::size_t missing = 0;
  for (const PuzzleInstance& inst : instances) {
    if (cache.find(inst.start)) continue;
    const IdaResult r = ida_star_optimal(inst.start, options.budget);
    if (r.cost) {
      cache.insert(inst.start, *r.cost, Provenance::kIdaStar);
      log << "instance " << inst.id << ": " << *r.cost << " (" << r.generated << " generated)\n";
    } else {
      ++missing;
      log << "instance " << inst.id << ": budget exhausted\n";
    }
    // Saved after every instance so an interrupted run keeps its progress.
    cache.save(options.cache);
  }
  cache.save(options.cache);
  return missing;
}

void generate_command(int width, int height, int count, std::uint64_t seed, std::ostream& out) {
  std::vector<PuzzleInstance> instances;
  for (int i = 0; i < count; ++i) {
    const std::uint64_t s = derive_seed(seed, 0, static_cast<std::uint64_t>(i), fnv1a(kInstanceSeedTag));
    instances.push_back({i + 1, random_solvable(width, height, s), std::nullopt});
  }
  write_instances(out, instances);
}

}  // namespace lrts::cli
