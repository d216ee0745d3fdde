#include "cli_config.hpp"

#include <CLI11.hpp>

#include "lrts/csv.hpp"

namespace lrts::cli {

namespace {

std::vector<std::string> default_algorithms(Experiment experiment) {
  std::vector<std::string> names = {"gtrap-bt", "gtrap", "lrta", "ilrta"};
  if (experiment == Experiment::kFirstTrial) names.push_back("rta");
  return names;
}

}  // namespace

RunOptions parse_config(const std::vector<std::string>& args) {
  CLI::App app{"Learning real-time search experiments", "lrts run"};
  app.allow_config_extras(false);

  std::string experiment = "convergence";
  std::string domain;
  std::vector<std::string> algorithms;
  std::vector<double> gammas = {0.2, 0.5, 1.0};
  std::vector<double> epsilons = {0.2, 0.5};
  std::vector<int> lookaheads;
  std::string korf_file, optimal_cache;
  int folds = -1, instances = -1;
  RunOptions options;
  ExperimentConfig& config = options.config;
  std::string out_dir;
  bool no_plots = false;

  app.set_config("--config", "", "Flat key=value file; flags override it");
  app.add_option("--experiment", experiment,
                 "convergence | memory | stability | first-trial")
      ->capture_default_str();
  app.add_option("--domain", domain, "puzzle8 | puzzle15 (memory defaults to puzzle15)");
  app.add_option("--algorithms", algorithms, "gtrap-bt,gtrap,lrta,rta,ilrta")
      ->delimiter(',');
  app.add_option("--gamma", gammas, "gamma values for gtrap-bt/gtrap, in (0,1]")
      ->delimiter(',')->capture_default_str();
  app.add_option("--epsilon", epsilons, "epsilon values for ilrta (0 = plain iLRTA*)")
      ->delimiter(',')->capture_default_str();
  app.add_option("--lookahead", lookaheads, "lookahead depths (repeatable); default 1,2,5,10,15")
      ->delimiter(',');
  app.add_option("--folds", folds, "number of folds (default 10; 1 for puzzle15)");
  app.add_option("--instances", instances, "instances per fold (default 100)");
  app.add_option("--seed", config.master_seed, "master seed")->capture_default_str();
  auto* move_limit = app.add_option("--move-limit", config.move_limit,
                                    "moves per trial (default 500000; unlimited for memory)");
  app.add_option("--memory-limit", config.memory_limit, "stored heuristic values per instance")
      ->capture_default_str();
  app.add_option("--korf-file", korf_file, "15-puzzle instance file (Korf format)");
  app.add_option("--optimal-cache", optimal_cache, "optimal-cost cache for 15-puzzle instances");
  app.add_option("--ida-budget", config.ida_budget,
                 "IDA* node budget for uncached 15-puzzle optima (0 disables)")
      ->capture_default_str();
  app.add_option("--jobs", config.jobs, "parallel instance runs")->capture_default_str();
  app.add_option("--out-dir", out_dir, "output directory")->envname(kOutDirEnv);
  app.add_flag("--easiest", options.easiest,
               "with --instances N on an instance file, keep the N lowest-Manhattan instances");
  app.add_flag("--no-plots", no_plots, "skip SVG output");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    throw HelpRequested(app.help());
  } catch (const CLI::ParseError& e) {
    throw ConfigError(e.what());
  }

  auto exp = parse_experiment(experiment);
  if (!exp) throw ConfigError("unknown experiment '" + experiment + "'");
  config.experiment = *exp;

  if (domain.empty()) domain = *exp == Experiment::kMemory ? "puzzle15" : "puzzle8";
  auto dom = parse_domain(domain);
  if (!dom) throw ConfigError("unknown domain '" + domain + "'");
  config.domain = *dom;

  // The memory experiment is bounded by stored values only.
  if (*exp == Experiment::kMemory && move_limit->count() == 0) config.move_limit = kUnlimitedMoves;

  if (!lookaheads.empty()) config.lookaheads = lookaheads;
  config.folds = folds > 0 ? folds : (*dom == Domain::kPuzzle15 ? 1 : 10);
  if (folds == 0) throw ConfigError("--folds must be >= 1");
  config.instances_per_fold = instances >= 0 ? instances : 100;
  config.korf_file = korf_file;
  if (!optimal_cache.empty()) config.optimal_cache = optimal_cache;
  if (!out_dir.empty()) options.out_dir = out_dir;
  options.plots = !no_plots;

  for (double g : gammas) {
    if (!(g > 0.0 && g <= 1.0)) {
      throw ConfigError("--gamma " + format_number(g) + " is outside (0, 1]");
    }
  }
  for (double e : epsilons) {
    if (!(e >= 0.0)) throw ConfigError("--epsilon must be >= 0");
  }

  if (algorithms.empty()) algorithms = default_algorithms(*exp);
  for (const std::string& name : algorithms) {
    auto alg = parse_algorithm(name);
    if (!alg) throw ConfigError("unknown algorithm '" + name + "'");
    switch (*alg) {
      case Algorithm::kGammaTrapBacktrack:
      case Algorithm::kGammaTrap:
        for (double g : gammas) config.agents.push_back({*alg, 1, g, 0.0, 0});
        break;
      case Algorithm::kIlrta:
        for (double e : epsilons) config.agents.push_back({*alg, 1, 1.0, e, 0});
        break;
      default:
        config.agents.push_back({*alg, 1, 1.0, 0.0, 0});
    }
  }

  try {
    config.validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  if (config.domain == Domain::kPuzzle15 && !std::filesystem::exists(config.korf_file)) {
    throw ConfigError("--korf-file " + config.korf_file.string() + " does not exist");
  }
  return options;
}

}  // namespace lrts::cli
