#include "rz/zone.hpp"

#include <algorithm>
#include <deque>

namespace rz {

std::vector<std::pair<int, Color>> RZPattern::cells() const {
  std::vector<std::pair<int, Color>> out;
  out.reserve(zone.count());
  zone.for_each([&](int i) { out.emplace_back(i, state_at(i)); });
  return out;
}

RZPattern make_pattern(const Position& position, const Zone& zone, Color winner, int goal_id,
                       std::optional<Move> winning_move, int proven_depth) {
  RZPattern p;
  p.zone = zone;
  zone.for_each([&](int i) {
    if (position.at(i) == Color::Black) p.black.set(i);
    if (position.at(i) == Color::White) p.white.set(i);
  });
  p.to_move = position.to_move();
  p.winner = winner;
  p.goal_id = goal_id;
  p.passes = position.consecutive_passes();
  if (winner == position.to_move()) p.winning_move = winning_move;
  p.proven_depth = proven_depth;
  return p;
}

Zone terminal_zone(const Position& position, const UcaProof& proof, const PointSet& crucial) {
  (void)position;
  if (proof.empty()) throw NoProof("terminal_zone: empty UCA proof");
  std::optional<Zone> best;
  for (std::size_t start = 0; start < proof.alive_blocks.size(); ++start) {
    if (!proof.alive_blocks[start].stones.intersects(crucial)) continue;
    std::vector<bool> in_blocks(proof.alive_blocks.size(), false);
    std::vector<bool> in_regions(proof.regions.size(), false);
    std::vector<int> todo{static_cast<int>(start)};
    in_blocks[start] = true;
    Zone z;
    while (!todo.empty()) {
      const int b = todo.back();
      todo.pop_back();
      z |= proof.alive_blocks[b].stones;
      for (int r : proof.vital_regions[b]) {
        if (in_regions[r]) continue;
        in_regions[r] = true;
        z |= proof.regions[r];
        for (int nb : proof.region_blocks[r]) {
          if (nb >= 0 && !in_blocks[nb]) {
            in_blocks[nb] = true;
            todo.push_back(nb);
          }
        }
      }
    }
    if (!best || z.count() < best->count() || (z.count() == best->count() && z.first() < best->first())) best = z;
  }
  if (!best) throw NoProof("terminal_zone: no alive block contains a crucial point");
  return *best;
}

namespace {

// Own-colored stones from a neighbor of move to some liberty other than move.
// Returns the connecting stones plus that liberty, or empty if none exists.
PointSet liberty_path(const Position& parent, int move, Color me) {
  const Geometry& geo = parent.geometry();
  std::vector<int> prev(parent.area(), -2);
  std::deque<int> q;
  for (int n : geo.neighbors(move)) {
    if (parent.at(n) == me && prev[n] == -2) {
      prev[n] = -1;
      q.push_back(n);
    }
  }
  while (!q.empty()) {
    const int p = q.front();
    q.pop_front();
    for (int n : geo.neighbors(p)) {
      if (n != move && parent.at(n) == Color::Empty) {
        PointSet out;
        out.set(n);
        for (int s = p; s >= 0; s = prev[s]) out.set(s);
        return out;
      }
    }
    for (int n : geo.neighbors(p)) {
      if (parent.at(n) == me && prev[n] == -2) {
        prev[n] = p;
        q.push_back(n);
      }
    }
  }
  return {};
}

}  // namespace

Zone or_propagate(const Zone& child_zone, Move move, const Position& parent, const Position& child) {
  (void)child;
  Zone z = child_zone;
  if (move.is_pass()) return z;
  const int m = move.index();
  const Geometry& geo = parent.geometry();
  const Color me = parent.to_move();
  const Color them = opponent(me);
  z.set(m);
  bool has_empty_neighbor = false;
  bool captures = false;
  PointSet done;
  for (int n : geo.neighbors(m)) {
    z.set(n);
    if (parent.at(n) == Color::Empty) has_empty_neighbor = true;
    if (parent.at(n) != them || done.test(n)) continue;
    const Block b = parent.block_at(n);
    done |= b.stones;
    z |= b.stones;
    PointSet other_libs = b.liberties;
    other_libs.reset(m);
    if (other_libs.empty()) {
      // Captured: pin the whole block and its surroundings so it is captured identically.
      captures = true;
      z |= boundary_of(geo, b.stones);
    } else {
      z.set(other_libs.first());
    }
  }
  if (!has_empty_neighbor && !captures) z |= liberty_path(parent, m, me);
  return z;
}

Zone and_propagate(std::span<const std::pair<Move, Zone>> children) {
  Zone z;
  for (const auto& [move, zone] : children) {
    z |= zone;
    if (!move.is_pass()) z.set(move.index());
  }
  return z;
}

bool matches(const Position& position, const RZPattern& pattern) {
  if (position.to_move() != pattern.to_move) return false;
  bool ok = true;
  pattern.zone.for_each([&](int i) {
    if (ok && position.at(i) != pattern.state_at(i)) ok = false;
  });
  return ok;
}

namespace {

// Crucial blocks must stay below two potentially vital regions for any
// completion of the points outside the zone. Returns false if the zone had to
// be widened (caller loops) and sets full_board when no finite widening helps.
bool attacker_certificate(Zone& z, const Position& pos, const GoalContext& goal, bool& full_board) {
  const Geometry& geo = pos.geometry();
  const Zone before = z;
  z |= goal.crucial;
  PointSet done;
  std::vector<Block> crucial_blocks;
  goal.crucial.for_each([&](int c) {
    if (pos.at(c) != goal.defender || done.test(c)) return;
    Block b = pos.block_at(c);
    done |= b.stones;
    z |= b.stones;
    z |= boundary_of(geo, b.stones);
    crucial_blocks.push_back(std::move(b));
  });
  for (const Block& k : crucial_blocks) {
    PointSet visited;
    std::vector<PointSet> uncertified;
    k.liberties.for_each([&](int l) {
      if (visited.test(l)) return;
      PointSet flood;
      std::vector<int> stack{l};
      flood.set(l);
      bool certified = false;
      while (!stack.empty()) {
        const int p = stack.back();
        stack.pop_back();
        if (pos.at(p) == Color::Empty && !k.liberties.test(p)) certified = true;
        for (int n : geo.neighbors(p)) {
          if (!z.test(n) || flood.test(n) || pos.at(n) == goal.defender) continue;
          flood.set(n);
          stack.push_back(n);
        }
      }
      visited |= flood;
      if (!certified) uncertified.push_back(flood);
    });
    if (uncertified.size() < 2) continue;
    bool grew = false;
    for (const PointSet& f : uncertified) {
      const PointSet outside = boundary_of(geo, f) - z;
      if (!outside.empty()) {
        z |= outside;
        grew = true;
      }
    }
    if (!grew) {
      full_board = true;
      z = geo.all();
      return false;
    }
  }
  return z == before;
}

}  // namespace

ClosedZone certify_goal(const Zone& zone, const Position& position, Color winner, const GoalContext& goal) {
  ClosedZone out;
  out.zone = zone;
  if (winner == goal.defender) {
    bool has = false;
    (zone & goal.crucial).for_each([&](int c) { has = has || position.at(c) == goal.defender; });
    if (!has) {
      const PointSet occupied = goal.crucial & position.stones_of(goal.defender);
      if (!occupied.empty()) out.zone.set(occupied.first());
    }
    return out;
  }
  while (!attacker_certificate(out.zone, position, goal, out.full_board)) {
    if (out.full_board) break;
  }
  return out;
}

ClosedZone close_loser_zone(const Zone& zone, const Position& position, Color winner, const GoalContext& goal) {
  const Geometry& geo = position.geometry();
  const Color loser = opponent(winner);
  ClosedZone out;
  out.zone = zone;
  // The position to test loser legality on: the loser is to move here.
  const Position& pos = position;
  for (;;) {
    const Zone before = out.zone;

    PointSet done;
    (out.zone & pos.stones_of(winner)).for_each([&](int s) {
      if (done.test(s)) return;
      const PointSet stones = flood_block(pos.grid(), geo, s);
      done |= stones;
      out.zone |= stones;
      // Two in-zone liberties keep the block uncapturable by any single loser
      // move; a block in atari needs its whole boundary so capture is identical.
      const PointSet libs = block_liberties(pos.grid(), geo, stones);
      if (libs.count() < 2) {
        out.zone |= boundary_of(geo, stones);
        return;
      }
      int have = (libs & out.zone).count();
      libs.for_each([&](int l) {
        if (have < 2 && !out.zone.test(l)) {
          out.zone.set(l);
          ++have;
        }
      });
    });

    (out.zone & pos.empty_points()).for_each([&](int q) {
      const MoveCheck mc = pos.check(Move::at(q));
      if (mc == MoveCheck::Suicide) {
        for (int n : geo.neighbors(q)) {
          out.zone.set(n);
          if (pos.at(n) == loser) {
            const PointSet stones = flood_block(pos.grid(), geo, n);
            out.zone |= stones;
            out.zone |= boundary_of(geo, stones);
          }
        }
      } else if (mc == MoveCheck::Superko) {
        out.history_sensitive = true;
        out.full_board = true;
      }
    });
    if (out.full_board) {
      out.zone = geo.all();
      break;
    }

    const ClosedZone cert = certify_goal(out.zone, pos, winner, goal);
    out.zone = cert.zone;
    if (cert.full_board) {
      out.full_board = true;
      out.zone = geo.all();
    }
    if (out.zone == before) break;
  }
  if (out.zone == geo.all()) {
    out.full_board = true;
    pos.empty_points().for_each([&](int q) {
      if (pos.check(Move::at(q)) == MoveCheck::Superko) out.history_sensitive = true;
    });
  }
  return out;
}

std::vector<int> serialize_zone(const Zone& zone) { return zone.to_vector(); }

Zone deserialize_zone(std::span<const int> indices) {
  Zone z;
  for (int i : indices) {
    if (i < 0 || i >= PointSet::kMaxPoints) throw InvariantViolation("zone index out of range");
    z.set(i);
  }
  return z;
}

}  // namespace rz
