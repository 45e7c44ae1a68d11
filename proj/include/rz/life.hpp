#pragma once

// Unconditional life (Benson, 1976).
//
// For a color C:
//  - a region is a maximal 4-connected set of points not holding C stones;
//    it may contain empty points and opponent stones.
//  - a region is vital to a C block when every empty point of the region is a
//    liberty of that block (and the region has at least one empty point).
//  - starting from all C blocks X and all regions R, repeatedly drop blocks with
//    fewer than two vital regions in R, and regions bordered by a block not in X.
// The surviving blocks are exactly the blocks the opponent cannot capture even
// when allowed unlimited consecutive moves (suicide forbidden).

#include <cstddef>
#include <vector>

#include "rz/board.hpp"
#include "rz/errors.hpp"

namespace rz {

struct UcaProof {
  Color color = Color::Empty;
  std::vector<Block> alive_blocks;
  std::vector<PointSet> regions;                // surviving vital regions
  std::vector<std::vector<int>> vital_regions;  // per alive block, indices into regions
  std::vector<std::vector<int>> region_blocks;  // per region, bordering alive blocks

  bool empty() const { return alive_blocks.empty(); }
  // Index of the alive block holding point, or -1.
  int block_containing(int point) const;
  PointSet alive_stones() const;
};

UcaProof benson_uca(const Position& position, Color color);

// Brute-force reference: true iff the block at block_point survives every line in
// which only the opponent moves (the owner always passes). Explores every
// reachable grid; throws ResourceExceeded past max_states.
bool uca_oracle(const Position& position, Color color, int block_point, std::size_t max_states = 200000);

}  // namespace rz
