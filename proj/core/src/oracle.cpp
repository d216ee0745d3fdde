#include "lrts/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "lrts/tile_puzzle.hpp"

namespace lrts {

BfsOracle::BfsOracle(const SearchProblem& problem,
                     std::span<const StateId> goals) {
  std::vector<StateId> frontier(goals.begin(), goals.end());
  for (StateId g : goals) distance_.emplace(g, 0);
  std::vector<StateId> next;
  std::vector<Successor> succ;
  int depth = 0;
  while (!frontier.empty()) {
    next.clear();
    for (StateId s : frontier) {
      problem.successors(s, succ);
      for (const Successor& x : succ) {
        if (distance_.try_emplace(x.next, static_cast<std::uint8_t>(depth + 1)).second) {
          next.push_back(x.next);
        }
      }
    }
    if (!next.empty()) {
      ++depth;
      if (depth > 255) throw std::length_error("BFS depth exceeds 255");
    }
    frontier.swap(next);
  }
  max_distance_ = depth;
}

std::optional<int> BfsOracle::find(StateId s) const {
  if (auto it = distance_.find(s); it != distance_.end()) return it->second;
  return std::nullopt;
}

int BfsOracle::optimal(StateId s) const {
  if (auto d = find(s)) return *d;
  throw std::out_of_range("state unreachable from goal (unsolvable input)");
}

BfsOracle make_tile_oracle(int width, int height) {
  const TileBoard goal = TileBoard::goal(width, height);
  TilePuzzle puzzle(goal);
  const StateId g = goal.pack();
  return BfsOracle(puzzle, std::span<const StateId>(&g, 1));
}

int bfs_optimal(const BfsOracle& oracle, StateId s) { return oracle.optimal(s); }

namespace {

class IdaSearch {
 public:
  IdaSearch(const TileBoard& board, std::uint64_t budget)
      : width_(board.width()), cells_(board.cells()), budget_(budget) {
    for (int c = 0; c < cells_; ++c) tiles_[c] = board.tile(c);
    blank_ = board.blank_index();
    for (int t = 0; t < cells_; ++t) {
      for (int c = 0; c < cells_; ++c) {
        dist_[t][c] = t == 0 ? 0 : std::abs(t / width_ - c / width_) + std::abs(t % width_ - c % width_);
      }
    }
  }

  IdaResult run() {
    int h = 0;
    for (int c = 0; c < cells_; ++c) h += dist_[tiles_[c]][c];
    int bound = h;
    for (;;) {
      next_bound_ = kInf;
      switch (dfs(0, h, -1, bound)) {
        case Status::kFound: return {bound, generated_};
        case Status::kBudget: return {std::nullopt, generated_};
        case Status::kNotFound: break;
      }
      if (next_bound_ == kInf) return {std::nullopt, generated_};
      bound = next_bound_;
    }
  }

 private:
  enum class Status { kFound, kNotFound, kBudget };
  static constexpr int kInf = 1 << 30;

  Status dfs(int g, int h, int previous_blank, int bound) {
    const int f = g + h;
    if (f > bound) {
      next_bound_ = std::min(next_bound_, f);
      return Status::kNotFound;
    }
    if (h == 0) return Status::kFound;
    const int row = blank_ / width_;
    const int col = blank_ % width_;
    const int rows = cells_ / width_;
    const int targets[4] = {row > 0 ? blank_ - width_ : -1,
                            row < rows - 1 ? blank_ + width_ : -1,
                            col > 0 ? blank_ - 1 : -1,
                            col < width_ - 1 ? blank_ + 1 : -1};
    for (int target : targets) {
      if (target < 0 || target == previous_blank) continue;
      if (++generated_ > budget_) return Status::kBudget;
      const int blank = blank_;
      const int tile = tiles_[target];
      const int child_h = h - dist_[tile][target] + dist_[tile][blank];
      tiles_[blank] = tile;
      tiles_[target] = 0;
      blank_ = target;
      const Status s = dfs(g + 1, child_h, blank, bound);
      blank_ = blank;
      tiles_[target] = tile;
      tiles_[blank] = 0;
      if (s != Status::kNotFound) return s;
    }
    return Status::kNotFound;
  }

  int width_;
  int cells_;
  int blank_ = 0;
  int tiles_[16] = {};
  int dist_[16][16] = {};
  std::uint64_t budget_;
  std::uint64_t generated_ = 0;
  int next_bound_ = kInf;
};

}  // namespace

IdaResult ida_star_optimal(const TileBoard& board, std::uint64_t node_budget) {
  if (!is_solvable(board)) {
    throw std::invalid_argument("IDA*: board is not solvable: " + board.to_string());
  }
  return IdaSearch(board, node_budget).run();
}

std::string_view to_string(Provenance p) noexcept {
  return p == Provenance::kBfs ? "BFS" : "IDA_STAR";
}

std::string OptimalCostCache::key(const TileBoard& board) {
  std::string k = std::to_string(board.width()) + "x" +
                  std::to_string(board.height()) + ":";
  for (int c = 0; c < board.cells(); ++c) {
    if (c) k += ',';
    k += std::to_string(board.tile(c));
  }
  return k;
}

void OptimalCostCache::insert(const TileBoard& board, int cost,
                              Provenance provenance) {
  auto [it, inserted] = entries_.try_emplace(key(board), Entry{cost, provenance});
  if (!inserted && it->second.cost != cost) {
    throw std::logic_error("optimal-cost disagreement for " + it->first + ": " +
                           std::to_string(it->second.cost) + " (" +
                           std::string(to_string(it->second.provenance)) +
                           ") vs " + std::to_string(cost) + " (" +
                           std::string(to_string(provenance)) + ")");
  }
}

std::optional<int> OptimalCostCache::find(const TileBoard& board) const {
  if (auto it = entries_.find(key(board)); it != entries_.end()) {
    return it->second.cost;
  }
  return std::nullopt;
}

void OptimalCostCache::save(std::ostream& out) const {
  // Sorted for byte-stable files.
  std::map<std::string, Entry> sorted(entries_.begin(), entries_.end());
  for (const auto& [k, e] : sorted) {
    out << k << ' ' << e.cost << ' ' << to_string(e.provenance) << '\n';
  }
}

void OptimalCostCache::save(const std::filesystem::path& path) const {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  save(out);
}

namespace {

// "WxH:t0,t1,..." naming a valid tile permutation.
bool valid_key(const std::string& key) {
  int w = 0, h = 0;
  char x = 0, colon = 0;
  std::istringstream in(key);
  if (!(in >> w >> x >> h >> colon) || x != 'x' || colon != ':') return false;
  std::vector<int> tiles;
  std::string token;
  while (std::getline(in, token, ',')) {
    std::size_t used = 0;
    try {
      tiles.push_back(std::stoi(token, &used));
    } catch (const std::exception&) {
      return false;
    }
    if (used != token.size()) return false;
  }
  try {
    TileBoard board(w, h, tiles);
    return OptimalCostCache::key(board) == key;
  } catch (const std::invalid_argument&) {
    return false;
  }
}

}  // namespace

OptimalCostCache OptimalCostCache::load(std::istream& in) {
  OptimalCostCache cache;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream fields(line);
    std::string board_key, provenance;
    int cost = -1;
    if (!(fields >> board_key >> cost >> provenance) || cost < 0) {
      throw std::runtime_error("optimal-cost cache line " + std::to_string(line_no) +
                               ": malformed entry");
    }
    if (!valid_key(board_key)) {
      throw std::runtime_error("optimal-cost cache line " + std::to_string(line_no) +
                               ": invalid board '" + board_key + "'");
    }
    Provenance p;
    if (provenance == "BFS") {
      p = Provenance::kBfs;
    } else if (provenance == "IDA_STAR") {
      p = Provenance::kIdaStar;
    } else {
      throw std::runtime_error("optimal-cost cache line " + std::to_string(line_no) +
                               ": unknown provenance '" + provenance + "'");
    }
    auto [it, inserted] = cache.entries_.try_emplace(board_key, Entry{cost, p});
    if (!inserted && it->second.cost != cost) {
      throw std::runtime_error("optimal-cost cache line " + std::to_string(line_no) +
                               ": conflicting cost for " + board_key);
    }
  }
  return cache;
}

OptimalCostCache OptimalCostCache::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  return load(in);
}

}  // namespace lrts
