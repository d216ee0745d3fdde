#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "commands.hpp"

namespace {

using namespace lrts::cli;

constexpr const char* kUsage =
    "usage: lrts [run] [options]        run an experiment (see lrts run --help)\n"
    "       lrts replay MANIFEST [--out-dir DIR]\n"
    "       lrts plot --summary CSV [--out-dir DIR]\n"
    "       lrts oracle --instances FILE --cache FILE [--width W --height H --budget N]\n"
    "       lrts generate --count N [--seed S --width W --height H] [--output FILE]\n"
    "       lrts --version\n";

int parse_sub(CLI::App& app, std::vector<std::string> args) {
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }
  return -1;
}

int run(const std::vector<std::string>& args) {
  RunOptions options = parse_config(args);
  run_command(options, std::cerr);
  return 0;
}

int replay(std::vector<std::string> args) {
  if (args.empty() || args[0].starts_with("-")) throw ConfigError("replay needs a manifest path");
  const std::vector<std::string> overrides(args.begin() + 1, args.end());
  return run(merge_replay_args(read_replay_args(args[0]), overrides));
}

int plot(const std::vector<std::string>& args) {
  CLI::App app{"Render SVG charts from a summary CSV", "lrts plot"};
  std::string summary, out_dir = "plots";
  app.add_option("--summary", summary, "summary CSV written by lrts run")->required();
  app.add_option("--out-dir", out_dir, "output directory")->capture_default_str();
  if (int rc = parse_sub(app, args); rc >= 0) return rc;
  for (const auto& p : plot_command(summary, out_dir, std::cerr)) std::cout << p.string() << "\n";
  return 0;
}

int oracle(const std::vector<std::string>& args) {
  CLI::App app{"Fill an optimal-cost cache with IDA*", "lrts oracle"};
  OracleOptions options;
  std::string instances, cache;
  app.add_option("--instances,--korf-file", instances, "instance file")->required();
  app.add_option("--cache", cache, "cache file (read and updated)")->required();
  app.add_option("--width", options.width)->capture_default_str();
  app.add_option("--height", options.height)->capture_default_str();
  app.add_option("--budget", options.budget, "IDA* node budget per instance")->capture_default_str();
  if (int rc = parse_sub(app, args); rc >= 0) return rc;
  options.instance_file = instances;
  options.cache = cache;
  const std::size_t missing = oracle_command(options, std::cerr);
  return missing == 0 ? 0 : 3;
}

int generate(const std::vector<std::string>& args) {
  CLI::App app{"Write random solvable boards in the instance file format", "lrts generate"};
  int count = 100, width = 4, height = 4;
  std::uint64_t seed = 1;
  std::string output;
  app.add_option("--count", count)->capture_default_str();
  app.add_option("--seed", seed)->capture_default_str();
  app.add_option("--width", width)->capture_default_str();
  app.add_option("--height", height)->capture_default_str();
  app.add_option("--output", output, "file (default stdout)");
  if (int rc = parse_sub(app, args); rc >= 0) return rc;
  if (output.empty()) {
    generate_command(width, height, count, seed, std::cout);
  } else {
    std::ofstream out(output);
    if (!out) throw ConfigError("cannot write " + output);
    generate_command(width, height, count, seed, out);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  std::string command = "run";
  if (!args.empty() && !args[0].starts_with("-")) {
    command = args[0];
    args.erase(args.begin());
  }
  try {
    if (command == "run") {
      if (!args.empty() && args[0] == "--version") {
        std::cout << "lrts " << tool_version() << "\n";
        return 0;
      }
      return run(args);
    }
    if (command == "replay") return replay(args);
    if (command == "plot") return plot(args);
    if (command == "oracle") return oracle(args);
    if (command == "generate") return generate(args);
    std::cerr << "lrts: unknown command '" << command << "'\n" << kUsage;
    return 2;
  } catch (const HelpRequested& help) {
    std::cout << kUsage << "\n" << help.what();
    return 0;
  } catch (const ConfigError& e) {
    std::cerr << "lrts: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "lrts: error: " << e.what() << "\n";
    return 1;
  }
}
