#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include "lrts/experiment.hpp"

namespace lrts::cli {

/// Invalid command line or config file; the message is user-facing.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// --help was requested; what() carries the help text.
class HelpRequested : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr const char* kOutDirEnv = "LRTS_OUT_DIR";

struct RunOptions {
  ExperimentConfig config;
  std::filesystem::path out_dir = "lrts-out";
  bool plots = true;
  // Keep only the N lowest-Manhattan instances of a loaded instance file.
  bool easiest = false;
};

/// Parses `lrts run` arguments (without the program or subcommand name).
/// `--config FILE` reads flat key=value lines using the long flag names;
/// explicit flags win over the file.
RunOptions parse_config(const std::vector<std::string>& args);

}  // namespace lrts::cli
