#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "cli_config.hpp"
#include "manifest.hpp"

namespace lrts::cli {

/// Instance folds for a run: random boards for the 8-puzzle, the instance
/// file split into consecutive folds for the 15-puzzle.
std::vector<InstanceFold> select_folds(const RunOptions& options);

/// Output file stem of an experiment family ("first-trial" -> "first_trial").
std::string family_stem(Experiment experiment);

/// Runs the configured experiment and writes CSVs, plots and manifest.json
/// under options.out_dir. Progress goes to `log`.
RunManifest run_command(const RunOptions& options, std::ostream& log);

/// Re-renders plots from a summary CSV.
std::vector<std::filesystem::path> plot_command(const std::filesystem::path& summary_csv,
                                                const std::filesystem::path& out_dir,
                                                std::ostream& log);

struct OracleOptions {
  std::filesystem::path instance_file;
  int width = 4;
  int height = 4;
  std::uint64_t budget = kDefaultIdaBudget;
  std::filesystem::path cache;
};

/// Fills an optimal-cost cache for every instance in a file using IDA*.
/// Returns the number of instances left without a cost.
std::size_t oracle_command(const OracleOptions& options, std::ostream& log);

/// Writes `count` random solvable boards in the instance file format.
void generate_command(int width, int height, int count, std::uint64_t seed, std::ostream& out);

}  // namespace lrts::cli
