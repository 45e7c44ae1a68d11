#pragma once

// Exhaustive reference solver and out-of-zone perturbations.

#include <cstdint>
#include <random>
#include <vector>

#include "rz/board.hpp"
#include "rz/problem.hpp"

namespace rz {

struct OracleResult {
  Color winner = Color::Empty;
  bool or_wins = false;
  std::uint64_t nodes_visited = 0;
  std::vector<Move> principal_line;
};

// Minimax over moves restricted to region plus pass. A result is cached only
// when no superko rejection below the node refers to a position above it.
// Cache hits ignore the prefix of the current line, which is the usual
// graph-history approximation. Throws ResourceExceeded.
OracleResult brute_force_solve(const Problem& problem, const PointSet& region, std::uint64_t max_nodes = 20'000'000);
OracleResult brute_force_solve(const Problem& problem);

// k random edits strictly outside zone (and never on a crucial point); every
// block keeps a liberty; k = 0 returns the position unchanged. Throws
// NoLegalPerturbation after bounded retries.
Position perturb_outside(const Position& position, const PointSet& zone, std::mt19937_64& rng, int k,
                         const PointSet& protect = {});

}  // namespace rz
