#pragma once

// Relevance-zone algebra.
//
// A zone Z proven for a winner W at position p means: every legal position that
// agrees with p on Z (same side to move) is also a win for W. The propagation
// rules below over-approximate; they add points until the following hold:
//  - winner to move: the winning move stays legal and produces the same stones
//    on the child's zone;
//  - loser to move: no loser move outside Z can capture a stone in Z, and every
//    loser move inside Z is legal in the perturbed position only if it was
//    legal here, with the same captures;
//  - no perturbed position can already be a terminal win for the loser.

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "rz/board.hpp"
#include "rz/errors.hpp"
#include "rz/life.hpp"

namespace rz {

using Zone = PointSet;

// What the zone rules need to know about the goal.
struct GoalContext {
  Color defender = Color::Empty;  // color of the crucial stones
  PointSet crucial;
};

struct RZPattern {
  Zone zone;
  PointSet black;  // black stones inside zone
  PointSet white;  // white stones inside zone
  Color to_move = Color::Black;
  Color winner = Color::Black;
  int goal_id = 0;
  int passes = 0;  // consecutive passes preceding the position
  std::optional<Move> winning_move;
  int proven_depth = 0;

  Color state_at(int index) const {
    return black.test(index) ? Color::Black : white.test(index) ? Color::White : Color::Empty;
  }
  // (index, state) pairs in ascending index order.
  std::vector<std::pair<int, Color>> cells() const;
  bool same_key(const RZPattern& o) const {
    return zone == o.zone && black == o.black && white == o.white && to_move == o.to_move && goal_id == o.goal_id &&
           passes == o.passes;
  }
};

RZPattern make_pattern(const Position& position, const Zone& zone, Color winner, int goal_id,
                       std::optional<Move> winning_move, int proven_depth);

// Zone of a terminal UCA win: the smallest Benson dependency closure (blocks
// bordering shared vital regions) containing a crucial block, plus its regions.
// Throws NoProof when no alive block holds a crucial point.
Zone terminal_zone(const Position& position, const UcaProof& proof, const PointSet& crucial);

// Winner's move from parent into a child proven with child_zone.
Zone or_propagate(const Zone& child_zone, Move move, const Position& parent, const Position& child);

// Union of refutation zones and the refuted moves themselves.
Zone and_propagate(std::span<const std::pair<Move, Zone>> children);

bool matches(const Position& position, const RZPattern& pattern);

struct ClosedZone {
  Zone zone;
  bool full_board = false;
  // A superko-rejected loser move lies in the zone; the result depends on history.
  bool history_sensitive = false;
};

// Adds points until no position agreeing on the zone can be a terminal win for
// the loser. Applied at every proven non-terminal node.
ClosedZone certify_goal(const Zone& zone, const Position& position, Color winner, const GoalContext& goal);

// Closure for a node where the loser is to move: winner blocks meeting the zone
// are pulled in whole with two liberties (whole boundary when in atari), in-zone
// suicide points pull in their surroundings, and the goal certificate is
// applied. Iterates to a fixpoint.
ClosedZone close_loser_zone(const Zone& zone, const Position& position, Color winner, const GoalContext& goal);

// Sorted index list; used by SGF export and table persistence.
std::vector<int> serialize_zone(const Zone& zone);
Zone deserialize_zone(std::span<const int> indices);

}  // namespace rz
