#include <gtest/gtest.h>

#include <algorithm>
#include <fstream>
#include <regex>
#include <sstream>

#include "cli_config.hpp"
#include "commands.hpp"
#include "lrts/csv.hpp"
#include "manifest.hpp"
#include "plots.hpp"

namespace lrts::cli {
namespace {

namespace fs = std::filesystem;

fs::path scratch(const std::string& name) {
  const auto dir = fs::temp_directory_path() / ("lrts_cli_test_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

TEST(ParseConfig, DocumentedDefaults) {
  const auto o = parse_config({});
  const auto& c = o.config;
  EXPECT_EQ(c.experiment, Experiment::kConvergence);
  EXPECT_EQ(c.domain, Domain::kPuzzle8);
  EXPECT_EQ(c.folds, 10);
  EXPECT_EQ(c.instances_per_fold, 100);
  EXPECT_EQ(c.move_limit, 500000u);
  EXPECT_EQ(c.memory_limit, 4000000u);
  EXPECT_EQ(c.lookaheads, (std::vector<int>{1, 2, 5, 10, 15}));
  std::vector<std::string> labels;
  for (const auto& a : c.agents) labels.push_back(a.label());
  EXPECT_EQ(labels, (std::vector<std::string>{"gTrap-BT-0.2", "gTrap-BT-0.5", "gTrap-BT-1.0",
                                              "gTrap-0.2", "gTrap-0.5", "gTrap-1.0", "LRTA",
                                              "eiLRTA-0.2", "eiLRTA-0.5"}));
}

TEST(ParseConfig, GammaZeroRejected) {
  EXPECT_THROW(parse_config({"--gamma", "0"}), ConfigError);
  EXPECT_THROW(parse_config({"--gamma", "1.01"}), ConfigError);
  EXPECT_NO_THROW(parse_config({"--gamma", "1"}));
}

TEST(ParseConfig, OtherErrors) {
  EXPECT_THROW(parse_config({"--no-such-flag"}), ConfigError);
  EXPECT_THROW(parse_config({"--lookahead", "0"}), ConfigError);
  EXPECT_THROW(parse_config({"--algorithms", "astar"}), ConfigError);
  EXPECT_THROW(parse_config({"--experiment", "speed"}), ConfigError);
  EXPECT_THROW(parse_config({"--domain", "puzzle15"}), ConfigError);
  EXPECT_THROW(parse_config({"--domain", "puzzle15", "--korf-file", "/nonexistent/korf.txt"}),
               ConfigError);
  EXPECT_THROW(parse_config({"--algorithms", "rta"}), ConfigError);
  EXPECT_THROW(parse_config({"--help"}), HelpRequested);
}

TEST(ParseConfig, FlagOverridesFile) {
  const auto dir = scratch("override");
  std::ofstream(dir / "run.conf") << "folds=3\ninstances=7\nlookahead=1,2\n";
  const auto o = parse_config({"--config", (dir / "run.conf").string(), "--folds", "5"});
  EXPECT_EQ(o.config.folds, 5);
  EXPECT_EQ(o.config.instances_per_fold, 7);
  EXPECT_EQ(o.config.lookaheads, (std::vector<int>{1, 2}));
}

TEST(ParseConfig, UnknownKeyInFileRejected) {
  const auto dir = scratch("badkey");
  std::ofstream(dir / "run.conf") << "fold=3\n";
  EXPECT_THROW(parse_config({"--config", (dir / "run.conf").string()}), ConfigError);
}

TEST(ParseConfig, ListsAndParameters) {
  const auto o = parse_config({"--algorithms", "gtrap-bt,ilrta", "--gamma", "0.3",
                               "--epsilon", "0,0.2", "--lookahead", "1", "--lookahead", "5"});
  std::vector<std::string> labels;
  for (const auto& a : o.config.agents) labels.push_back(a.label());
  EXPECT_EQ(labels, (std::vector<std::string>{"gTrap-BT-0.3", "iLRTA", "eiLRTA-0.2"}));
  EXPECT_EQ(o.config.lookaheads, (std::vector<int>{1, 5}));
}

TEST(ParseConfig, MemoryExperimentDefaults) {
  const auto dir = scratch("memory");
  std::ofstream k(dir / "korf.txt");
  generate_command(4, 4, 3, 1, k);
  k.close();
  const auto o = parse_config({"--experiment", "memory", "--korf-file", (dir / "korf.txt").string()});
  EXPECT_EQ(o.config.domain, Domain::kPuzzle15);
  EXPECT_EQ(o.config.folds, 1);
  EXPECT_EQ(o.config.move_limit, kUnlimitedMoves);
  const auto capped = parse_config({"--experiment", "memory", "--korf-file",
                                    (dir / "korf.txt").string(), "--move-limit", "1000"});
  EXPECT_EQ(capped.config.move_limit, 1000u);
}

TEST(ParseConfig, FirstTrialIncludesRta) {
  const auto o = parse_config({"--experiment", "first-trial"});
  EXPECT_EQ(o.config.agents.back().algorithm, Algorithm::kRta);
}

SummaryRow bar(Algorithm alg, double cost, int folds, double stddev) {
  SummaryRow r;
  r.algorithm = alg;
  r.gamma = alg == Algorithm::kGammaTrapBacktrack ? std::optional(0.2) : std::nullopt;
  r.folds = folds;
  r.convergence_cost = {cost, stddev, folds};
  return r;
}

std::vector<double> bar_heights(const std::string& svg) {
  std::vector<double> out;
  const std::regex re(R"re(<rect class="bar"[^>]*height="([0-9.]+)")re");
  for (auto it = std::sregex_iterator(svg.begin(), svg.end(), re); it != std::sregex_iterator(); ++it) {
    out.push_back(std::stod((*it)[1]));
  }
  return out;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

TEST(Plots, SingleBarNoErrorBar) {
  const auto dir = scratch("single");
  const auto files = emit_plots({bar(Algorithm::kLrta, 1000, 1, 0)}, dir);
  ASSERT_EQ(files.size(), 1u);
  const auto svg = slurp(files[0]);
  EXPECT_EQ(bar_heights(svg).size(), 1u);
  EXPECT_EQ(svg.find("class=\"error\""), std::string::npos);
}

TEST(Plots, ErrorBarsWithSeveralFolds) {
  const auto dir = scratch("errors");
  const auto files = emit_plots({bar(Algorithm::kLrta, 1000, 3, 100)}, dir);
  ASSERT_EQ(files.size(), 1u);
  EXPECT_NE(slurp(files[0]).find("class=\"error\""), std::string::npos);
}

TEST(Plots, LinearScale) {
  const auto dir = scratch("linear");
  const auto files = emit_plots(
      {bar(Algorithm::kGammaTrapBacktrack, 1000, 1, 0), bar(Algorithm::kLrta, 31000, 1, 0)}, dir);
  ASSERT_EQ(files.size(), 1u);
  const auto h = bar_heights(slurp(files[0]));
  ASSERT_EQ(h.size(), 2u);
  // Heights are written with 6 decimals.
  EXPECT_NEAR(h[1] / h[0], 31.0, 31.0 * 2 * 5e-7 / h[0]);
  // Numeric labels are embedded.
  EXPECT_NE(slurp(files[0]).find(">31000.0<"), std::string::npos);
}

TEST(Plots, EmptyInputWritesNothing) {
  const auto dir = scratch("empty") / "plots";
  EXPECT_TRUE(emit_plots({}, dir).empty());
  EXPECT_FALSE(fs::exists(dir));
}

TEST(Plots, RegeneratedFromCsvIsByteIdentical) {
  const auto dir = scratch("regen");
  const std::vector<SummaryRow> rows = {bar(Algorithm::kGammaTrapBacktrack, 1234.5, 3, 10.25),
                                        bar(Algorithm::kLrta, 40000, 3, 900)};
  {
    std::ofstream out(dir / "summary.csv");
    write_summary_csv(out, rows);
  }
  std::ostringstream log;
  const auto a = plot_command(dir / "summary.csv", dir / "a", log);
  const auto b = plot_command(dir / "summary.csv", dir / "b", log);
  ASSERT_EQ(a.size(), b.size());
  ASSERT_FALSE(a.empty());
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(slurp(a[i]), slurp(b[i]));
}

TEST(Commands, EndToEndAndReplay) {
  const auto dir = scratch("e2e");
  auto o = parse_config({"--folds", "2", "--instances", "3", "--lookahead", "1",
                         "--algorithms", "gtrap-bt,lrta", "--gamma", "0.5",
                         "--out-dir", (dir / "first").string()});
  std::ostringstream log;
  run_command(o, log);
  for (const char* f : {"convergence_runs.csv", "convergence_summary.csv", "manifest.json",
                        "plots/convergence_cost.svg"}) {
    EXPECT_TRUE(fs::exists(dir / "first" / f)) << f;
  }
  const auto args = merge_replay_args(read_replay_args(dir / "first" / "manifest.json"),
                                      {"--out-dir", (dir / "second").string(), "--jobs", "3"});
  EXPECT_EQ(std::count(args.begin(), args.end(), "--jobs"), 1);
  run_command(parse_config(args), log);
  EXPECT_EQ(slurp(dir / "first" / "convergence_runs.csv"),
            slurp(dir / "second" / "convergence_runs.csv"));
  EXPECT_EQ(slurp(dir / "first" / "convergence_summary.csv"),
            slurp(dir / "second" / "convergence_summary.csv"));
}

TEST(Commands, EasiestSelection) {
  const auto dir = scratch("easiest");
  {
    std::ofstream k(dir / "set.txt");
    generate_command(4, 4, 20, 3, k);
  }
  auto o = parse_config({"--experiment", "memory", "--korf-file", (dir / "set.txt").string(),
                         "--instances", "5", "--easiest"});
  const auto folds = select_folds(o);
  ASSERT_EQ(folds.size(), 1u);
  ASSERT_EQ(folds[0].instances.size(), 5u);
  const auto all = load_instances(dir / "set.txt", 4, 4);
  int max_selected = 0;
  for (const auto& i : folds[0].instances) max_selected = std::max(max_selected, manhattan(i.start));
  int below = 0;
  for (const auto& i : all) below += manhattan(i.start) < max_selected;
  EXPECT_LE(below, 5);
  o.config.instances_per_fold = 21;
  EXPECT_THROW(select_folds(o), ConfigError);
}

TEST(Manifest, RecordsSeedRuleAndConfig) {
  RunManifest m{parse_config({"--seed", "17"}), {}, {}, {}, {}};
  m.replay_args = replay_arguments(m.options);
  const auto json = manifest_json(m);
  EXPECT_NE(json.find("\"master_seed\": 17"), std::string::npos);
  EXPECT_NE(json.find("seed_derivation"), std::string::npos);
  EXPECT_NE(json.find("index_definitions"), std::string::npos);
  const auto again = parse_config(m.replay_args);
  EXPECT_EQ(replay_arguments(again), m.replay_args);
}

}  // namespace
}  // namespace lrts::cli
