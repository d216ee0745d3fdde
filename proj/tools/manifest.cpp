#include "manifest.hpp"

#include <algorithm>
#include <ctime>
#include <fstream>
#include <set>

#include <json.hpp>

#include "lrts/csv.hpp"

#ifndef LRTS_VERSION
#define LRTS_VERSION "0.0.0"
#endif

namespace lrts::cli {

namespace {

using nlohmann::ordered_json;

std::string iso8601(std::chrono::system_clock::time_point t) {
  const std::time_t tt = std::chrono::system_clock::to_time_t(t);
  std::tm tm{};
  gmtime_r(&tt, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::string join_numbers(const std::vector<double>& values) {
  std::string out;
  for (double v : values) {
    if (!out.empty()) out += ',';
    out += format_number(v);
  }
  return out;
}

}  // namespace

std::string_view tool_version() noexcept { return LRTS_VERSION; }

std::vector<std::string> replay_arguments(const RunOptions& options) {
  const ExperimentConfig& c = options.config;
  std::vector<std::string> args = {
      "--experiment", std::string(to_string(c.experiment)),
      "--domain", std::string(to_string(c.domain)),
      "--folds", std::to_string(c.folds),
      "--instances", std::to_string(c.instances_per_fold),
      "--seed", std::to_string(c.master_seed),
      "--move-limit", std::to_string(c.move_limit),
      "--memory-limit", std::to_string(c.memory_limit),
      "--ida-budget", std::to_string(c.ida_budget),
      "--jobs", std::to_string(c.jobs),
  };

  // Agents were expanded from algorithm x parameter lists; fold them back.
  std::vector<std::string> names;
  std::vector<double> gammas, epsilons;
  std::set<double> seen_gamma, seen_epsilon;
  for (const AgentConfig& a : c.agents) {
    const std::string name(to_string(a.algorithm));
    if (std::find(names.begin(), names.end(), name) == names.end()) names.push_back(name);
    if (a.algorithm == Algorithm::kGammaTrapBacktrack || a.algorithm == Algorithm::kGammaTrap) {
      if (seen_gamma.insert(a.gamma).second) gammas.push_back(a.gamma);
    }
    if (a.algorithm == Algorithm::kIlrta && seen_epsilon.insert(a.epsilon).second) {
      epsilons.push_back(a.epsilon);
    }
  }
  std::string algorithms;
  for (const std::string& n : names) algorithms += (algorithms.empty() ? "" : ",") + n;
  args.insert(args.end(), {"--algorithms", algorithms});
  if (!gammas.empty()) args.insert(args.end(), {"--gamma", join_numbers(gammas)});
  if (!epsilons.empty()) args.insert(args.end(), {"--epsilon", join_numbers(epsilons)});
  std::string lookaheads;
  for (int d : c.lookaheads) lookaheads += (lookaheads.empty() ? "" : ",") + std::to_string(d);
  args.insert(args.end(), {"--lookahead", lookaheads});

  if (!c.korf_file.empty()) args.insert(args.end(), {"--korf-file", c.korf_file.string()});
  if (c.optimal_cache) args.insert(args.end(), {"--optimal-cache", c.optimal_cache->string()});
  if (options.easiest) args.push_back("--easiest");
  if (!options.plots) args.push_back("--no-plots");
  return args;
}

std::string manifest_json(const RunManifest& m) {
  const ExperimentConfig& c = m.options.config;
  ordered_json agents = ordered_json::array();
  for (const AgentConfig& a : c.agents) {
    agents.push_back({{"algorithm", to_string(a.algorithm)},
                      {"label", a.label()},
                      {"gamma", a.gamma},
                      {"epsilon", a.epsilon}});
  }
  ordered_json config = {
      {"experiment", to_string(c.experiment)},
      {"domain", to_string(c.domain)},
      {"folds", c.folds},
      {"instances_per_fold", c.instances_per_fold},
      {"lookaheads", c.lookaheads},
      {"agents", agents},
      {"move_limit", c.move_limit},
      {"memory_limit", c.memory_limit},
      {"korf_file", c.korf_file.empty() ? ordered_json(nullptr) : ordered_json(c.korf_file.string())},
      {"easiest", m.options.easiest},
      {"optimal_cache",
       c.optimal_cache ? ordered_json(c.optimal_cache->string()) : ordered_json(nullptr)},
      {"jobs", c.jobs},
  };

  ordered_json doc = {
      {"tool", "lrts"},
      {"version", tool_version()},
      {"master_seed", c.master_seed},
      {"started", iso8601(m.started)},
      {"finished", iso8601(m.finished)},
      {"config", config},
      {"replay_args", m.replay_args},
      {"outputs", m.outputs},
      {"budgets",
       {{"move_limit_per_trial", c.move_limit},
        {"memory_limit_stored_values", c.memory_limit},
        {"ida_node_budget", c.ida_budget}}},
      {"seed_derivation",
       {{"generator", "mt19937_64"},
        {"rule", "master ^ mix64(mix64(mix64(fold) ^ instance) ^ fnv1a(tag))"},
        {"instance_tag", kInstanceSeedTag},
        {"agent_tag", "<label>@<lookahead>"},
        {"mix64", "splitmix64 finalizer"},
        {"fnv1a", "64-bit FNV-1a over the tag bytes"}}},
      {"index_definitions",
       {{"error", "e_i = cost_i - h*(s0) for trial i = 1..N (N = convergence trial)"},
        {"iae", "sum |e_i|"},
        {"ise", "sum e_i^2"},
        {"itae", "sum i*|e_i|"},
        {"itse", "sum i*e_i^2"},
        {"sod", "sum_{i<N} max(0, cost_{i+1} - cost_i)"}}},
      {"decisions",
       {{"convergence_cost", "actions of trials 1..N inclusive, N = first trial without updates"},
        {"rta_lookahead", "mini-min over the depth-d ball grouped by first action; "
                          "second-best stored, table cleared each trial"},
        {"aggregation", "per-fold means, then mean and sample std across folds"}}},
  };
  return doc.dump(2) + "\n";
}

void write_manifest(const RunManifest& manifest, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << manifest_json(manifest);
}

std::vector<std::string> merge_replay_args(const std::vector<std::string>& recorded,
                                           const std::vector<std::string>& overrides) {
  auto is_flag = [](const std::string& a) { return a == "--easiest" || a == "--no-plots"; };
  std::vector<std::string> merged;
  for (std::size_t i = 0; i < recorded.size(); ++i) {
    const bool has_value = !is_flag(recorded[i]) && i + 1 < recorded.size();
    if (std::find(overrides.begin(), overrides.end(), recorded[i]) == overrides.end()) {
      merged.push_back(recorded[i]);
      if (has_value) merged.push_back(recorded[i + 1]);
    }
    if (has_value) ++i;
  }
  merged.insert(merged.end(), overrides.begin(), overrides.end());
  return merged;
}

std::vector<std::string> read_replay_args(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open manifest " + path.string());
  try {
    const auto doc = nlohmann::json::parse(in);
    return doc.at("replay_args").get<std::vector<std::string>>();
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError("malformed manifest " + path.string() + ": " + e.what());
  }
}

}  // namespace lrts::cli
