#pragma once

// Best-first AND/OR search: PUCT selection with proof backup, relevance-zone
// pruning at loser-to-move nodes, and a choice of memoization backend.

#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "rz/board.hpp"
#include "rz/evaluator.hpp"
#include "rz/problem.hpp"
#include "rz/tables.hpp"
#include "rz/zone.hpp"

namespace rz {

enum class Backend { TT, PT };

std::string backend_name(Backend b);
std::optional<Backend> parse_backend(std::string_view text);

struct SolverConfig {
  Backend backend = Backend::PT;
  std::uint64_t max_nodes = 500'000;
  std::uint64_t time_limit_ms = 0;  // 0 = no wall-clock limit
  std::uint64_t seed = 1;
  double c_puct = 1.5;
  int depth_cap = 0;  // 0 = 2 * (empty points at root) + 20
  std::size_t tt_capacity = TranspositionTable::kDefaultCapacity;
  std::size_t pt_capacity = PatternTable::kDefaultCapacity;
  bool null_first = true;  // visit the pass child first at AND nodes
};

struct SolverStats {
  std::uint64_t nodes = 0;  // expansions
  std::uint64_t iterations = 0;
  std::uint64_t table_hits = 0;
  std::uint64_t pattern_reuses = 0;  // hits on a position other than the stored one
  std::uint64_t wall_ms = 0;
  int max_depth = 0;
  std::uint64_t proven_nodes = 0;
};

// Proof DAG. Table hits are resolved to the node that produced the entry, so
// every internal node carries its own edges.
struct SolutionTree {
  enum class Kind { Terminal, Winner, Loser };
  struct Edge {
    Move move;
    int child = -1;
  };
  struct Node {
    Kind kind = Kind::Terminal;
    Color to_move = Color::Black;
    Color winner = Color::Black;
    Zone zone;
    int proven_depth = 0;
    std::vector<Edge> edges;  // Loser: refutations in move order, pass last
  };
  std::vector<Node> nodes;  // nodes[0] is the root
  int root = 0;

  bool empty() const { return nodes.empty(); }
};

struct Solution {
  std::optional<Color> winner;  // nullopt = unsolved within budget
  Zone zone;
  std::optional<Move> winning_move;
  int proven_depth = 0;
  SolutionTree tree;
  SolverStats stats;

  bool solved() const { return winner.has_value(); }
};

Solution solve(const Problem& problem, const SolverConfig& config, const Evaluator& evaluator);
Solution solve(const Problem& problem, const SolverConfig& config);

struct VerifyOptions {
  // Out-of-zone loser moves tried per loser node (sampled deterministically).
  int deviation_samples = 3;
  // Out-of-zone deviations allowed along one line.
  int max_deviations = 2;
  std::uint64_t seed = 7;
  std::uint64_t max_visits = 2'000'000;
};

// Replays the tree on real positions. Throws MalformedTree on structural
// defects (dangling edges, winner nodes without exactly one edge).
bool verify_solution(const Solution& solution, const Problem& problem, const VerifyOptions& options = {});

// Throws UnverifiedSolution unless verify_solution accepts the solution.
std::string export_solution_sgf(const Solution& solution, const Problem& problem, std::size_t node_cap = 20'000);

}  // namespace rz
