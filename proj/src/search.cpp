#include "rz/search.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <set>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "rz/sgf.hpp"

namespace rz {

std::string backend_name(Backend b) { return b == Backend::TT ? "tt" : "pt"; }

std::optional<Backend> parse_backend(std::string_view text) {
  if (text == "tt") return Backend::TT;
  if (text == "pt") return Backend::PT;
  return std::nullopt;
}

namespace {

// Children live in a shared edge pool; the child node is created on first visit.
struct Edge {
  Move move;
  float prior = 0.0f;
  std::int32_t child = -1;
};

struct Node {
  std::int32_t first_edge = -1;
  std::int32_t num_edges = 0;
  Move move;
  std::uint32_t visits = 0;
  double value_sum = 0.0;  // from to_move's perspective
  std::uint64_t hash = 0;
  Color to_move = Color::Black;
  Color proven = Color::Empty;
  bool expanded = false;
  bool dead = false;
  bool terminal = false;
  bool history_sensitive = false;
  std::int32_t zone = -1;       // index into the zone pool, set iff proven
  std::int32_t work_zone = -1;  // loser-to-move: closed null-move zone
  std::int32_t best = -1;       // winning child when the winner is to move
  std::int32_t source = -1;     // table hit: node that produced the entry
  int proven_depth = 0;
  int depth = 0;

  bool resolved() const { return proven != Color::Empty || dead; }
};

class Solver {
 public:
  Solver(const Problem& problem, const SolverConfig& config, const Evaluator& evaluator)
      : problem_(problem),
        config_(config),
        evaluator_(evaluator),
        goal_(problem.context()),
        goal_id_(problem.goal_id()),
        tt_(config.backend == Backend::TT ? config.tt_capacity : 0),
        pt_(problem.position.size(), config.backend == Backend::PT ? config.pt_capacity : 0),
        rng_(config.seed) {
    depth_cap_ = config.depth_cap > 0 ? config.depth_cap : 2 * problem.position.empty_points().count() + 20;
  }

  Solution run();

 private:
  const Zone& zone_of(const Node& n) const { return zones_[n.zone]; }
  // Only AND-to-move nodes carry a pass edge; it is always the last one.
  std::int32_t pass_edge(const Node& n) const {
    if (n.num_edges == 0) return -1;
    const std::int32_t last = n.first_edge + n.num_edges - 1;
    return edges_[last].move.is_pass() ? last : -1;
  }
  std::int32_t edge_end(const Node& n) const { return n.first_edge + n.num_edges; }
  // Proven winner behind an edge, Empty while unknown or unvisited.
  Color edge_proven(std::int32_t e) const { return edges_[e].child >= 0 ? nodes_[edges_[e].child].proven : Color::Empty; }
  std::int32_t materialize(std::int32_t parent, std::int32_t e);
  std::int32_t add_zone(const Zone& z) {
    zones_.push_back(z);
    return static_cast<std::int32_t>(zones_.size() - 1);
  }

  void expand(std::int32_t id, const Position& pos);
  std::int32_t select(std::int32_t id) const;
  bool try_prove(std::int32_t id, const Position& pos);
  bool prove_as_winner(std::int32_t id, const Position& pos);
  bool prove_as_loser(std::int32_t id, const Position& pos);
  void store(std::int32_t id, const Position& pos);
  bool selectable_in(const Node& n, std::int32_t e) const;
  SolutionTree extract() const;

  const Problem& problem_;
  const SolverConfig& config_;
  const Evaluator& evaluator_;
  GoalContext goal_;
  int goal_id_;
  TranspositionTable tt_;
  PatternTable pt_;
  std::mt19937_64 rng_;
  int depth_cap_ = 0;
  std::vector<Node> nodes_;
  std::vector<Edge> edges_;
  std::vector<Zone> zones_;
  SolverStats stats_;
};

void Solver::expand(std::int32_t id, const Position& pos) {
  ++stats_.nodes;
  nodes_[id].expanded = true;
  nodes_[id].hash = pos.hash();
  stats_.max_depth = std::max(stats_.max_depth, nodes_[id].depth);

  const Terminal t = classify_terminal(problem_, pos);
  if (t.status != TerminalStatus::Ongoing) {
    Node& n = nodes_[id];
    n.terminal = true;
    n.proven = t.winner;
    n.zone = add_zone(t.zone);
    ++stats_.proven_nodes;
    return;
  }
  if (nodes_[id].depth >= depth_cap_) {
    nodes_[id].dead = true;
    return;
  }

  if (config_.backend == Backend::TT) {
    if (const auto e = tt_.lookup(pos, goal_id_)) {
      Node& n = nodes_[id];
      n.proven = e->winner;
      n.zone = add_zone(e->zone);
      n.proven_depth = e->proven_depth;
      n.source = static_cast<std::int32_t>(e->source);
      ++stats_.table_hits;
      ++stats_.proven_nodes;
      return;
    }
  } else if (const auto h = pt_.lookup(pos, goal_id_)) {
    Node& n = nodes_[id];
    n.proven = h->pattern.winner;
    n.zone = add_zone(h->pattern.zone);
    n.proven_depth = h->pattern.proven_depth;
    n.source = static_cast<std::int32_t>(h->source);
    ++stats_.table_hits;
    if (nodes_[n.source].hash != pos.hash()) ++stats_.pattern_reuses;
    ++stats_.proven_nodes;
    return;
  }

  // The OR player never passes: the AND player could pass back and reach the
  // same position closer to the pass limit, so an OR pass is never better.
  const std::vector<Move> moves = pos.legal_moves(pos.to_move() == problem_.and_color());
  const Evaluation ev = evaluator_.evaluate(pos, problem_, moves);
  const auto first = static_cast<std::int32_t>(edges_.size());
  std::uniform_real_distribution<double> jitter(-1e-6, 1e-6);
  for (std::size_t i = 0; i < moves.size(); ++i) {
    Edge e;
    e.move = moves[i];
    e.prior = static_cast<float>(ev.priors[i] * (config_.seed != 0 ? 1.0 + jitter(rng_) : 1.0));
    edges_.push_back(e);
  }
  Node& n = nodes_[id];
  n.first_edge = first;
  n.num_edges = static_cast<std::int32_t>(moves.size());
  n.value_sum = ev.value;
  // OR to move: the working zone is known before any child is searched.
  if (n.to_move == problem_.or_color()) try_prove(id, pos);
}

std::int32_t Solver::materialize(std::int32_t parent, std::int32_t e) {
  if (edges_[e].child >= 0) return edges_[e].child;
  Node c;
  c.move = edges_[e].move;
  c.to_move = opponent(nodes_[parent].to_move);
  c.depth = nodes_[parent].depth + 1;
  nodes_.push_back(c);
  edges_[e].child = static_cast<std::int32_t>(nodes_.size() - 1);
  return edges_[e].child;
}

bool Solver::selectable_in(const Node& n, std::int32_t e) const {
  const Edge& ed = edges_[e];
  if (ed.child >= 0 && nodes_[ed.child].resolved()) return false;
  if (n.work_zone >= 0 && !ed.move.is_pass() && !zones_[n.work_zone].test(ed.move.index())) return false;
  return true;
}

std::int32_t Solver::select(std::int32_t id) const {
  const Node& n = nodes_[id];
  if (config_.null_first) {
    const std::int32_t pass = pass_edge(n);
    if (pass >= 0 && edges_[pass].child < 0) return pass;
  }
  const double sqrt_n = std::sqrt(static_cast<double>(std::max<std::uint32_t>(n.visits, 1)));
  std::int32_t best = -1;
  double best_score = 0.0;
  for (std::int32_t e = n.first_edge; e < edge_end(n); ++e) {
    if (!selectable_in(n, e)) continue;
    const std::int32_t c = edges_[e].child;
    const std::uint32_t visits = c >= 0 ? nodes_[c].visits : 0;
    const double q = visits > 0 ? -nodes_[c].value_sum / visits : 0.0;
    const double score = q + config_.c_puct * edges_[e].prior * sqrt_n / (1.0 + visits);
    if (best < 0 || score > best_score) {
      best = e;
      best_score = score;
    }
  }
  return best;
}

bool Solver::prove_as_winner(std::int32_t id, const Position& pos) {
  const Node& n = nodes_[id];
  const Color me = n.to_move;
  std::int32_t best = -1;
  for (std::int32_t e = n.first_edge; e < edge_end(n); ++e) {
    if (edge_proven(e) != me) continue;
    const std::int32_t c = edges_[e].child;
    const Node& ch = nodes_[c];
    if (best < 0) {
      best = c;
      continue;
    }
    const Node& b = nodes_[best];
    const int cz = zone_of(ch).count();
    const int bz = zone_of(b).count();
    if (ch.proven_depth != b.proven_depth ? ch.proven_depth < b.proven_depth
        : cz != bz                        ? cz < bz
                                          : ch.move.order_key() < b.move.order_key())
      best = c;
  }
  if (best < 0) return false;
  const Node& b = nodes_[best];
  const Zone z = or_propagate(zone_of(b), b.move, pos, pos);
  const ClosedZone cz = certify_goal(z, pos, me, goal_);
  Node& w = nodes_[id];
  w.proven = me;
  w.best = best;
  w.proven_depth = b.proven_depth + 1;
  w.history_sensitive = b.history_sensitive;
  w.zone = add_zone(cz.full_board ? pos.geometry().all() : cz.zone);
  return true;
}

bool Solver::prove_as_loser(std::int32_t id, const Position& pos) {
  const Node& n = nodes_[id];
  const Color winner = opponent(n.to_move);
  const std::int32_t pass_e = pass_edge(n);
  const std::int32_t pass = pass_e >= 0 ? edges_[pass_e].child : -1;
  // An AND loser must see its pass refuted. An OR loser's pass is answered by
  // a pass back, which returns to this position, so it contributes nothing.
  std::vector<std::pair<Move, Zone>> base;
  Zone seed;
  int base_depth = 0;
  bool sensitive = false;
  if (n.to_move == problem_.and_color()) {
    if (pass < 0 || nodes_[pass].proven != winner) return false;
    const Node& p = nodes_[pass];
    base.emplace_back(p.move, zone_of(p));
    seed = zone_of(p);
    base_depth = p.proven_depth;
    sensitive = p.history_sensitive;
  }
  const std::int32_t end = pass_e >= 0 ? pass_e : edge_end(n);

  ClosedZone closed = close_loser_zone(seed, pos, winner, goal_);
  sensitive = sensitive || closed.history_sensitive;
  Zone z = closed.zone;
  for (;;) {
    std::vector<std::pair<Move, Zone>> used = base;
    int depth = base_depth;
    bool complete = true;
    for (std::int32_t e = n.first_edge; e < end; ++e) {
      if (!z.test(edges_[e].move.index())) continue;
      if (edge_proven(e) != winner) {
        complete = false;
        continue;
      }
      const Node& ch = nodes_[edges_[e].child];
      used.emplace_back(ch.move, zone_of(ch));
      depth = std::max(depth, ch.proven_depth);
      sensitive = sensitive || ch.history_sensitive;
    }
    if (!complete) {
      if (nodes_[id].work_zone < 0 || zones_[nodes_[id].work_zone] != z) nodes_[id].work_zone = add_zone(z);
      return false;
    }
    Zone grown = and_propagate(used);
    grown |= z;
    closed = close_loser_zone(grown, pos, winner, goal_);
    sensitive = sensitive || closed.history_sensitive;
    if (closed.zone == z) {
      Node& w = nodes_[id];
      w.proven = winner;
      w.proven_depth = depth + 1;
      w.history_sensitive = sensitive;
      w.zone = add_zone(z);
      w.work_zone = w.zone;
      return true;
    }
    z = closed.zone;
  }
}

bool Solver::try_prove(std::int32_t id, const Position& pos) {
  if (nodes_[id].resolved() || !nodes_[id].expanded) return false;
  if (prove_as_winner(id, pos) || prove_as_loser(id, pos)) {
    ++stats_.proven_nodes;
    store(id, pos);
    return true;
  }
  const Node& n = nodes_[id];
  for (std::int32_t e = n.first_edge; e < edge_end(n); ++e)
    if (selectable_in(n, e)) return false;
  nodes_[id].dead = true;
  return true;
}

void Solver::store(std::int32_t id, const Position& pos) {
  const Node& n = nodes_[id];
  if (n.history_sensitive) return;
  std::optional<Move> wm;
  if (n.proven == n.to_move) wm = nodes_[n.best].move;
  if (config_.backend == Backend::TT) {
    TTEntry e = TranspositionTable::make_entry(pos, goal_id_);
    e.winner = n.proven;
    e.zone = zone_of(n);
    e.winning_move = wm;
    e.proven_depth = n.proven_depth;
    e.source = static_cast<std::uint32_t>(id);
    tt_.store(e);
  } else {
    pt_.insert(make_pattern(pos, zone_of(n), n.proven, goal_id_, wm, n.proven_depth), static_cast<std::uint32_t>(id));
  }
}

SolutionTree Solver::extract() const {
  SolutionTree tree;
  std::unordered_map<std::int32_t, int> memo;
  std::function<int(std::int32_t)> build = [&](std::int32_t id) -> int {
    while (nodes_[id].source >= 0) id = nodes_[id].source;
    if (const auto it = memo.find(id); it != memo.end()) return it->second;
    const Node& n = nodes_[id];
    const int out = static_cast<int>(tree.nodes.size());
    memo.emplace(id, out);
    tree.nodes.emplace_back();
    SolutionTree::Node tn;
    tn.to_move = n.to_move;
    tn.winner = n.proven;
    tn.zone = zone_of(n);
    tn.proven_depth = n.proven_depth;
    if (n.terminal) {
      tn.kind = SolutionTree::Kind::Terminal;
    } else if (n.proven == n.to_move) {
      tn.kind = SolutionTree::Kind::Winner;
      tn.edges.push_back({nodes_[n.best].move, build(n.best)});
    } else {
      tn.kind = SolutionTree::Kind::Loser;
      const std::int32_t pass = pass_edge(n);
      const std::int32_t end = pass >= 0 ? pass : edge_end(n);
      for (std::int32_t e = n.first_edge; e < end; ++e)
        if (tn.zone.test(edges_[e].move.index())) tn.edges.push_back({edges_[e].move, build(edges_[e].child)});
      if (pass >= 0) tn.edges.push_back({Move::pass(), build(edges_[pass].child)});
    }
    tree.nodes[out] = std::move(tn);
    return out;
  };
  build(0);
  return tree;
}

Solution Solver::run() {
  const auto start = std::chrono::steady_clock::now();
  auto elapsed_ms = [&] {
    return static_cast<std::uint64_t>(
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count());
  };
  nodes_.reserve(1024);
  edges_.reserve(4096);
  Node root;
  root.to_move = problem_.position.to_move();
  nodes_.push_back(root);

  std::vector<std::int32_t> path;
  std::vector<Position> positions;
  while (!nodes_[0].resolved() && stats_.nodes < config_.max_nodes) {
    if (config_.time_limit_ms > 0 && elapsed_ms() >= config_.time_limit_ms) break;
    ++stats_.iterations;
    path.assign(1, 0);
    positions.assign(1, problem_.position);
    bool changed = false;
    for (;;) {
      const std::int32_t id = path.back();
      if (!nodes_[id].expanded) {
        expand(id, positions.back());
        changed = nodes_[id].resolved();
        break;
      }
      const std::int32_t e = select(id);
      if (e < 0) {
        changed = try_prove(id, positions.back());
        if (!changed) nodes_[id].dead = changed = true;
        break;
      }
      const std::int32_t c = materialize(id, e);
      positions.push_back(positions.back().play(nodes_[c].move));
      path.push_back(c);
    }

    // Value backup.
    const Node& leaf = nodes_[path.back()];
    double v = leaf.proven != Color::Empty ? (leaf.proven == leaf.to_move ? 1.0 : -1.0)
               : leaf.dead                 ? 0.0
               : leaf.visits == 0          ? leaf.value_sum
                                           : leaf.value_sum / leaf.visits;
    const bool fresh = leaf.visits == 0;
    for (auto it = path.rbegin(); it != path.rend(); ++it) {
      Node& n = nodes_[*it];
      if (fresh && *it == path.back()) {
        n.value_sum = v;
      } else {
        n.value_sum += v;
      }
      ++n.visits;
      v = -v;
    }

    // Proof backup: walk up while statuses keep changing.
    for (std::size_t i = path.size() - 1; changed && i-- > 0;) changed = try_prove(path[i], positions[i]);
  }

  Solution s;
  s.stats = stats_;
  s.stats.wall_ms = config_.time_limit_ms > 0 ? elapsed_ms() : 0;
  const Node& r = nodes_[0];
  if (r.proven != Color::Empty) {
    s.winner = r.proven;
    s.zone = zone_of(r);
    s.proven_depth = r.proven_depth;
    if (r.best >= 0) s.winning_move = nodes_[r.best].move;
    s.tree = extract();
  }
  return s;
}

}  // namespace

Solution solve(const Problem& problem, const SolverConfig& config, const Evaluator& evaluator) {
  try {
    problem.validate();
  } catch (const InvariantViolation& e) {
    throw InvalidProblem(e.what());
  }
  Solver solver(problem, config, evaluator);
  return solver.run();
}

Solution solve(const Problem& problem, const SolverConfig& config) {
  const HeuristicEvaluator ev;
  return solve(problem, config, ev);
}

// ---------------------------------------------------------------------------
// Verification

namespace {

class Walker {
 public:
  Walker(const Solution& s, const Problem& p, const VerifyOptions& o) : sol_(s), problem_(p), opt_(o) {}

  bool walk(int id, const Position& pos, int deviations_left) {
    if (id < 0 || id >= static_cast<int>(sol_.tree.nodes.size())) throw MalformedTree("edge to missing node");
    if (++visits_ > opt_.max_visits) throw ResourceExceeded("verification visit budget exhausted");
    const auto& tn = sol_.tree.nodes[id];
    const Color winner = *sol_.winner;
    if (tn.to_move != pos.to_move()) throw MalformedTree("side to move disagrees with tree");

    const Terminal t = classify_terminal(problem_, pos);
    if (t.status != TerminalStatus::Ongoing) return t.winner == winner;
    if (tn.kind == SolutionTree::Kind::Terminal) return false;

    const Key key{id, pos.hash(), pos.verification_hash(), pos.consecutive_passes(), deviations_left};
    if (done_.count(key)) return true;

    bool ok = true;
    if (pos.to_move() == winner) {
      if (tn.kind != SolutionTree::Kind::Winner || tn.edges.size() != 1) throw MalformedTree("winner node needs one edge");
      const auto& e = tn.edges.front();
      ok = pos.is_legal(e.move) && walk(e.child, pos.play(e.move), deviations_left);
    } else {
      if (tn.kind != SolutionTree::Kind::Loser) throw MalformedTree("loser node of wrong kind");
      const SolutionTree::Edge* pass = nullptr;
      std::vector<const SolutionTree::Edge*> by_move(pos.area(), nullptr);
      for (const auto& e : tn.edges) {
        if (e.move.is_pass()) {
          pass = &e;
        } else if (e.move.index() < pos.area()) {
          by_move[e.move.index()] = &e;
        }
      }
      // An AND loser must have its pass covered, and its out-of-zone moves map
      // onto that branch. An OR loser's pass or out-of-zone move is answered by
      // a pass, which leads back to this same node.
      const bool and_loser = pos.to_move() == problem_.and_color();
      if (and_loser && !pass) return false;
      auto reply = [&](Move m, int devs) {
        const Position next = pos.play(m);
        if (and_loser) return walk(pass->child, next, devs);
        if (classify_terminal(problem_, next).status != TerminalStatus::Ongoing)
          return classify_terminal(problem_, next).winner == winner;
        return walk(id, next.play(Move::pass()), devs);
      };
      std::vector<Move> outside;
      for (Move m : pos.legal_moves(false)) {
        if (!ok) break;
        if (const auto* e = by_move[m.index()]) {
          ok = walk(e->child, pos.play(m), deviations_left);
        } else if (tn.zone.test(m.index())) {
          ok = false;
        } else {
          outside.push_back(m);
        }
      }
      if (ok) ok = reply(Move::pass(), deviations_left);
      if (ok && deviations_left > 0 && !outside.empty()) {
        std::mt19937_64 rng(opt_.seed ^ pos.hash());
        std::shuffle(outside.begin(), outside.end(), rng);
        const auto n = std::min<std::size_t>(outside.size(), static_cast<std::size_t>(opt_.deviation_samples));
        for (std::size_t i = 0; ok && i < n; ++i) ok = reply(outside[i], deviations_left - 1);
      }
    }
    if (ok) done_.insert(key);
    return ok;
  }

 private:
  struct Key {
    int id;
    std::uint64_t hash, verify;
    int passes, deviations;
    bool operator<(const Key& o) const {
      return std::tie(id, hash, verify, passes, deviations) < std::tie(o.id, o.hash, o.verify, o.passes, o.deviations);
    }
  };

  const Solution& sol_;
  const Problem& problem_;
  const VerifyOptions& opt_;
  std::set<Key> done_;
  std::uint64_t visits_ = 0;
};

}  // namespace

bool verify_solution(const Solution& solution, const Problem& problem, const VerifyOptions& options) {
  if (!solution.winner) return false;
  if (solution.tree.empty()) throw MalformedTree("solved but no tree");
  Walker w(solution, problem, options);
  return w.walk(solution.tree.root, problem.position, options.max_deviations);
}

std::string export_solution_sgf(const Solution& solution, const Problem& problem, std::size_t node_cap) {
  if (!verify_solution(solution, problem)) throw UnverifiedSolution("solution failed verification");
  const int n = problem.position.size();
  std::ostringstream out;
  out << "(;" << problem_root_properties(problem);
  out << "C[goal: " << goal_name(problem.goal) << "\nwinner: " << color_name(*solution.winner) << "]";
  const auto zone = serialize_zone(solution.zone);
  if (!zone.empty()) {
    out << "TR";
    for (int i : zone) out << "[" << sgf::encode_point(i, n) << "]";
  }
  std::size_t emitted = 0;
  std::function<void(int)> emit = [&](int id) {
    const auto& tn = solution.tree.nodes[id];
    if (tn.edges.empty()) return;
    if (emitted >= node_cap) {
      out << "C[truncated]";
      return;
    }
    const char* who = tn.to_move == Color::Black ? "B" : "W";
    auto move_text = [&](Move m) { return m.is_pass() ? std::string() : sgf::encode_point(m.index(), n); };
    if (tn.edges.size() == 1) {
      ++emitted;
      out << ";" << who << "[" << move_text(tn.edges[0].move) << "]";
      emit(tn.edges[0].child);
      return;
    }
    for (const auto& e : tn.edges) {
      ++emitted;
      out << "(;" << who << "[" << move_text(e.move) << "]";
      emit(e.child);
      out << ")";
    }
  };
  emit(solution.tree.root);
  out << ")\n";
  return out.str();
}

}  // namespace rz
