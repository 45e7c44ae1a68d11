#include "rz/oracle.hpp"

#include <algorithm>
#include <limits>
#include <unordered_map>

#include "rz/errors.hpp"

namespace rz {

namespace {

class Minimax {
 public:
  Minimax(const Problem& p, const PointSet& region, std::uint64_t budget) : problem_(p), region_(region), budget_(budget) {}

  struct Value {
    Color winner;
    // Smallest line index of a position whose presence made a move illegal.
    std::size_t min_ref;
  };

  Value search(const Position& pos) {
    if (++visited_ > budget_) throw ResourceExceeded("oracle node budget exhausted");
    const std::size_t here = pos.history().size();
    const Terminal t = classify_terminal(problem_, pos);
    if (t.status != TerminalStatus::Ongoing) return {t.winner, kNone};

    const Key key = key_of(pos);
    if (const auto it = cache_.find(key); it != cache_.end()) return {it->second.winner, kNone};

    const Color me = pos.to_move();
    std::size_t min_ref = kNone;
    std::optional<Move> best;
    std::vector<Move> moves;
    for (int i = 0; i < pos.area(); ++i)
      if (region_.test(i) && pos.at(i) == Color::Empty) moves.push_back(Move::at(i));
    moves.push_back(Move::pass());

    // Cheap pass first: a child already known (terminal or cached) to be won.
    std::vector<std::pair<Move, Position>> open;
    bool won = false;
    for (Move m : moves) {
      const MoveCheck mc = pos.check(m);
      if (mc == MoveCheck::Superko) {
        min_ref = std::min(min_ref, repeat_index(pos, m));
        continue;
      }
      if (mc != MoveCheck::Ok) continue;
      Position child = pos.play(m);
      const Terminal ct = classify_terminal(problem_, child);
      if (ct.status != TerminalStatus::Ongoing) {
        if (ct.winner == me) {
          best = m;
          won = true;
          break;
        }
        continue;
      }
      if (const auto it = cache_.find(key_of(child)); it != cache_.end()) {
        if (it->second.winner == me) {
          best = m;
          won = true;
          break;
        }
        continue;
      }
      open.emplace_back(m, std::move(child));
    }
    for (std::size_t k = 0; !won && k < open.size(); ++k) {
      const Value v = search(open[k].second);
      min_ref = std::min(min_ref, v.min_ref);
      if (v.winner == me) {
        best = open[k].first;
        won = true;
      }
    }

    const Color winner = won ? me : opponent(me);
    if (min_ref >= here) {
      cache_.emplace(key, Entry{winner, best});
      min_ref = kNone;
    }
    return {winner, min_ref};
  }

  std::vector<Move> principal_line(Position pos, std::size_t max_len) const {
    std::vector<Move> line;
    while (line.size() < max_len) {
      if (classify_terminal(problem_, pos).status != TerminalStatus::Ongoing) break;
      const auto it = cache_.find(key_of(pos));
      if (it == cache_.end()) break;
      // A losing side has no recorded move; show its pass.
      const Move m = it->second.best.value_or(Move::pass());
      if (!pos.is_legal(m)) break;
      line.push_back(m);
      pos = pos.play(m);
    }
    return line;
  }

  std::uint64_t visited() const { return visited_; }

 private:
  static constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

  struct Key {
    std::uint64_t hash, verify;
    int passes;
    friend bool operator==(const Key&, const Key&) = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const { return static_cast<std::size_t>(k.hash); }
  };
  struct Entry {
    Color winner;
    std::optional<Move> best;
  };

  static Key key_of(const Position& pos) {
    return {pos.hash() ^ zobrist::pass_count(pos.consecutive_passes()), pos.verification_hash(), pos.consecutive_passes()};
  }

  static std::size_t repeat_index(const Position& pos, Move m) {
    // Recover which earlier position the move would recreate.
    Position copy = pos.with_to_move(pos.to_move());
    const std::uint64_t h = copy.play(m).hash();
    const auto& hist = pos.history();
    for (std::size_t i = 0; i < hist.size(); ++i)
      if (hist[i] == h) return i;
    return hist.size();
  }

  const Problem& problem_;
  PointSet region_;
  std::uint64_t budget_;
  std::uint64_t visited_ = 0;
  std::unordered_map<Key, Entry, KeyHash> cache_;
};

}  // namespace

OracleResult brute_force_solve(const Problem& problem, const PointSet& region, std::uint64_t max_nodes) {
  Minimax mm(problem, region, max_nodes);
  const auto v = mm.search(problem.position);
  OracleResult r;
  r.winner = v.winner;
  r.or_wins = v.winner == problem.or_color();
  r.nodes_visited = mm.visited();
  r.principal_line = mm.principal_line(problem.position, 64);
  return r;
}

OracleResult brute_force_solve(const Problem& problem) {
  return brute_force_solve(problem, problem.position.geometry().all());
}

Position perturb_outside(const Position& position, const PointSet& zone, std::mt19937_64& rng, int k,
                         const PointSet& protect) {
  if (k < 0) throw InvariantViolation("perturbation count must not be negative");
  if (k == 0) return position;
  std::vector<int> free;
  for (int i = 0; i < position.area(); ++i)
    if (!zone.test(i) && !protect.test(i)) free.push_back(i);
  if (free.empty()) throw NoLegalPerturbation("no intersection outside the zone");

  const Geometry& geo = position.geometry();
  Position::Grid grid = position.grid();
  auto all_blocks_breathe = [&](const Position::Grid& g, int changed) {
    // Only blocks touching the edited point can have lost their last liberty.
    auto ok_at = [&](int p) {
      if (g[p] == Color::Empty) return true;
      return !block_liberties(g, geo, flood_block(g, geo, p)).empty();
    };
    if (!ok_at(changed)) return false;
    for (int n : geo.neighbors(changed))
      if (!ok_at(n)) return false;
    return true;
  };

  int applied = 0;
  const int max_tries = 200 * k;
  std::uniform_int_distribution<std::size_t> pick(0, free.size() - 1);
  std::uniform_int_distribution<int> state(0, 2);
  for (int tries = 0; applied < k && tries < max_tries; ++tries) {
    const int p = free[pick(rng)];
    const auto c = static_cast<Color>(state(rng));
    if (grid[p] == c) continue;
    const Color old = grid[p];
    grid[p] = c;
    if (all_blocks_breathe(grid, p)) {
      ++applied;
    } else {
      grid[p] = old;
    }
  }
  if (applied < k) throw NoLegalPerturbation("could not place " + std::to_string(k) + " edits outside the zone");
  return Position::setup(position.size(), std::span<const Color>(grid.data(), static_cast<std::size_t>(position.area())),
                         position.to_move());
}

}  // namespace rz
