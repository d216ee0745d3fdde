#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "lrts/tile_board.hpp"

namespace lrts {

struct PuzzleInstance {
  int id = 0;
  TileBoard start;
  std::optional<int> known_optimal_cost;
};

class InstanceFileError : public std::runtime_error {
 public:
  InstanceFileError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

inline constexpr std::size_t kKorfInstanceCount = 100;

/// Parses the Korf instance format: one instance per line, an instance index
/// followed by width*height tile values (blank = 0) and optionally the
/// instance's known optimal cost. Blank lines and lines
/// starting with '#' are skipped. Every board must be a solvable permutation.
/// With `expected_count`, a different number of instances is an error
/// (reported against the last line read).
std::vector<PuzzleInstance> parse_instances(
    std::istream& in, int width, int height,
    std::optional<std::size_t> expected_count = std::nullopt);

/// Korf's 15-puzzle set: exactly 100 4x4 instances.
std::vector<PuzzleInstance> load_korf(const std::filesystem::path& path);

/// Any instance set in the Korf format.
std::vector<PuzzleInstance> load_instances(const std::filesystem::path& path,
                                           int width, int height);

void write_instances(std::ostream& out,
                     const std::vector<PuzzleInstance>& instances);

}  // namespace lrts
