#include "lrts/instances.hpp"

#include <fstream>
#include <sstream>

namespace lrts {

std::vector<PuzzleInstance> parse_instances(
    std::istream& in, int width, int height,
    std::optional<std::size_t> expected_count) {
  const int cells = width * height;
  std::vector<PuzzleInstance> instances;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;

    std::istringstream fields(line);
    long long id = 0;
    if (!(fields >> id)) throw InstanceFileError(line_no, "missing instance index");
    std::vector<int> tiles;
    std::string token;
    while (fields >> token) {
      std::size_t used = 0;
      int value = 0;
      try {
        value = std::stoi(token, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != token.size()) {
        throw InstanceFileError(line_no, "not an integer: '" + token + "'");
      }
      tiles.push_back(value);
    }
    std::optional<int> known;
    if (static_cast<int>(tiles.size()) == cells + 1) {
      known = tiles.back();
      tiles.pop_back();
      if (*known < 0) throw InstanceFileError(line_no, "negative optimal cost");
    }
    if (static_cast<int>(tiles.size()) != cells) {
      throw InstanceFileError(line_no, "expected " + std::to_string(cells) +
                                           " tile values, found " +
                                           std::to_string(tiles.size()));
    }
    std::optional<TileBoard> board;
    try {
      board.emplace(width, height, tiles);
    } catch (const std::invalid_argument& e) {
      throw InstanceFileError(line_no, e.what());
    }
    if (!is_solvable(*board)) {
      throw InstanceFileError(line_no, "board is not solvable");
    }
    instances.push_back({static_cast<int>(id), *board, known});
  }
  if (expected_count && instances.size() != *expected_count) {
    throw InstanceFileError(line_no, "expected " + std::to_string(*expected_count) +
                                         " instances, found " +
                                         std::to_string(instances.size()));
  }
  return instances;
}

std::vector<PuzzleInstance> load_instances(const std::filesystem::path& path,
                                           int width, int height) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open instance file " + path.string());
  return parse_instances(in, width, height);
}

std::vector<PuzzleInstance> load_korf(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open Korf file " + path.string());
  return parse_instances(in, 4, 4, kKorfInstanceCount);
}

void write_instances(std::ostream& out,
                     const std::vector<PuzzleInstance>& instances) {
  for (const auto& inst : instances) {
    out << inst.id << ' ' << inst.start.to_string();
    if (inst.known_optimal_cost) out << ' ' << *inst.known_optimal_cost;
    out << '\n';
  }
}

}  // namespace lrts
