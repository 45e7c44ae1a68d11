#include "rz/life.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

namespace rz {

int UcaProof::block_containing(int point) const {
  for (std::size_t b = 0; b < alive_blocks.size(); ++b)
    if (alive_blocks[b].stones.test(point)) return static_cast<int>(b);
  return -1;
}

PointSet UcaProof::alive_stones() const {
  PointSet s;
  for (const auto& b : alive_blocks) s |= b.stones;
  return s;
}

UcaProof benson_uca(const Position& position, Color color) {
  const Geometry& geo = position.geometry();
  const auto& grid = position.grid();
  const int area = position.area();

  std::vector<Block> blocks;
  std::vector<int> block_of(area, -1);
  for (int i = 0; i < area; ++i) {
    if (grid[i] != color || block_of[i] >= 0) continue;
    Block b = position.block_at(i);
    b.stones.for_each([&](int s) { block_of[s] = static_cast<int>(blocks.size()); });
    blocks.push_back(std::move(b));
  }

  struct Region {
    PointSet points;
    PointSet empties;
    std::vector<int> bordering;  // block ids
    std::vector<int> vital_to;   // block ids
  };
  std::vector<Region> regions;
  std::vector<int> region_of(area, -1);
  for (int i = 0; i < area; ++i) {
    if (grid[i] == color || region_of[i] >= 0) continue;
    Region r;
    const int id = static_cast<int>(regions.size());
    std::vector<int> stack{i};
    region_of[i] = id;
    while (!stack.empty()) {
      const int p = stack.back();
      stack.pop_back();
      r.points.set(p);
      if (grid[p] == Color::Empty) r.empties.set(p);
      for (int n : geo.neighbors(p)) {
        if (grid[n] == color) {
          const int b = block_of[n];
          if (std::find(r.bordering.begin(), r.bordering.end(), b) == r.bordering.end()) r.bordering.push_back(b);
        } else if (region_of[n] < 0) {
          region_of[n] = id;
          stack.push_back(n);
        }
      }
    }
    if (!r.empties.empty()) {
      for (int b : r.bordering)
        if (r.empties.is_subset_of(blocks[b].liberties)) r.vital_to.push_back(b);
    }
    regions.push_back(std::move(r));
  }

  std::vector<bool> block_alive(blocks.size(), true);
  std::vector<bool> region_alive(regions.size(), true);
  for (bool changed = true; changed;) {
    changed = false;
    std::vector<int> vital_count(blocks.size(), 0);
    for (std::size_t r = 0; r < regions.size(); ++r) {
      if (!region_alive[r]) continue;
      for (int b : regions[r].vital_to) ++vital_count[b];
    }
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      if (block_alive[b] && vital_count[b] < 2) {
        block_alive[b] = false;
        changed = true;
      }
    }
    for (std::size_t r = 0; r < regions.size(); ++r) {
      if (!region_alive[r]) continue;
      for (int b : regions[r].bordering) {
        if (!block_alive[b]) {
          region_alive[r] = false;
          changed = true;
          break;
        }
      }
    }
  }

  UcaProof proof;
  proof.color = color;
  std::vector<int> new_block_id(blocks.size(), -1);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (!block_alive[b]) continue;
    new_block_id[b] = static_cast<int>(proof.alive_blocks.size());
    proof.alive_blocks.push_back(blocks[b]);
  }
  proof.vital_regions.resize(proof.alive_blocks.size());
  for (std::size_t r = 0; r < regions.size(); ++r) {
    if (!region_alive[r] || regions[r].vital_to.empty()) continue;
    // A surviving region must be vital to some surviving block to be part of the proof.
    bool used = false;
    for (int b : regions[r].vital_to) used = used || block_alive[b];
    if (!used) continue;
    const int rid = static_cast<int>(proof.regions.size());
    proof.regions.push_back(regions[r].points);
    std::vector<int> border;
    for (int b : regions[r].bordering) border.push_back(new_block_id[b]);
    proof.region_blocks.push_back(std::move(border));
    for (int b : regions[r].vital_to)
      if (block_alive[b]) proof.vital_regions[new_block_id[b]].push_back(rid);
  }
  return proof;
}

bool uca_oracle(const Position& position, Color color, int block_point, std::size_t max_states) {
  if (position.at(block_point) != color) throw InvariantViolation("uca_oracle: no block of that color at point");
  const Color attacker = opponent(color);
  const Position start = position.with_to_move(attacker);

  // Only the attacker moves, so any capturing line can be shortened to one with
  // no repeated grid; plain reachability over grids is exact.
  std::unordered_set<std::uint64_t> seen{start.hash()};
  std::deque<Position> frontier{start};
  while (!frontier.empty()) {
    const Position cur = std::move(frontier.front());
    frontier.pop_front();
    for (int i = 0; i < cur.area(); ++i) {
      if (cur.at(i) != Color::Empty) continue;
      const Move m = Move::at(i);
      if (!cur.is_legal(m)) continue;
      const Position next = cur.play(m).with_to_move(attacker);
      if (next.at(block_point) != color) return false;
      if (!seen.insert(next.hash()).second) continue;
      if (seen.size() > max_states) throw ResourceExceeded("uca_oracle state budget exhausted");
      frontier.push_back(next);
    }
  }
  return true;
}

}  // namespace rz
