#include "rz/tables.hpp"

#include <algorithm>
#include <istream>
#include <ostream>

namespace rz {

bool replay_guard(const Position& position, Color winner, const std::optional<Move>& winning_move) {
  if (winner != position.to_move()) return true;
  if (!winning_move) return false;
  return position.is_legal(*winning_move);
}

// ---------------------------------------------------------------------------
// TranspositionTable

std::uint64_t TranspositionTable::key(const Position& position) {
  return position.hash() ^ zobrist::pass_count(position.consecutive_passes());
}

std::uint64_t TranspositionTable::verify_key(const Position& position) {
  return position.verification_hash() ^ (static_cast<std::uint64_t>(position.consecutive_passes()) << 56);
}

TTEntry TranspositionTable::make_entry(const Position& position, int goal_id) {
  TTEntry e;
  e.hash = key(position);
  e.verify = verify_key(position);
  e.goal_id = goal_id;
  return e;
}

void TranspositionTable::store(const TTEntry& entry) {
  if (capacity_ == 0) return;
  const Key k{entry.hash, entry.goal_id};
  auto it = map_.find(k);
  if (it != map_.end()) {
    if (entry.proven_depth < it->second.proven_depth || it->second.verify != entry.verify) it->second = entry;
    return;
  }
  while (map_.size() >= capacity_ && !order_.empty()) {
    map_.erase(order_.front());
    order_.pop_front();
  }
  map_.emplace(k, entry);
  order_.push_back(k);
}

std::optional<TTEntry> TranspositionTable::lookup(const Position& position, int goal_id) const {
  lookups_.add();
  const auto it = map_.find(Key{key(position), goal_id});
  if (it == map_.end() || it->second.verify != verify_key(position)) return std::nullopt;
  if (!replay_guard(position, it->second.winner, it->second.winning_move)) return std::nullopt;
  hits_.add();
  return it->second;
}

TableStats TranspositionTable::stats() const {
  TableStats s;
  s.entries = map_.size();
  s.nodes = map_.size();
  s.lookups = lookups_.get();
  s.hits = hits_.get();
  s.misses = s.lookups - s.hits;
  s.memory_bytes = map_.size() * (sizeof(TTEntry) + sizeof(Key) + 2 * sizeof(void*)) + order_.size() * sizeof(Key);
  return s;
}

// ---------------------------------------------------------------------------
// PatternTable

PatternTable::PatternTable(int board_size, std::size_t capacity) : board_size_(board_size), capacity_(capacity) {}

std::int32_t PatternTable::find_root(Color to_move, int goal_id, int passes) const {
  const auto it = roots_.find(root_key(to_move, goal_id, passes));
  return it == roots_.end() ? -1 : it->second;
}

std::int32_t PatternTable::root_for(const RZPattern& p) {
  const auto k = root_key(p.to_move, p.goal_id, p.passes);
  const auto it = roots_.find(k);
  if (it != roots_.end()) return it->second;
  const auto id = static_cast<std::int32_t>(nodes_.size());
  nodes_.emplace_back();
  roots_.emplace(k, id);
  return id;
}

bool PatternTable::better(const Leaf& a, const Leaf& b) const {
  const int ca = a.pattern.zone.count();
  const int cb = b.pattern.zone.count();
  if (ca != cb) return ca < cb;
  if (a.pattern.proven_depth != b.pattern.proven_depth) return a.pattern.proven_depth < b.pattern.proven_depth;
  return a.seq < b.seq;
}

void PatternTable::evict_oldest() {
  while (!fifo_.empty()) {
    const std::int32_t leaf = fifo_.front();
    fifo_.pop_front();
    if (!leaves_[leaf].live) continue;
    leaves_[leaf].live = false;
    --live_;
    // Interior nodes stay; only the payload is detached.
    nodes_[leaves_[leaf].node].leaf = -1;
    return;
  }
}

void PatternTable::insert(const RZPattern& pattern, std::uint32_t source) {
  if (capacity_ == 0) return;
  std::int32_t node = root_for(pattern);
  for (const auto& [index, state] : pattern.cells()) {
    auto& edges = nodes_[node].edges;
    const auto pos = std::lower_bound(edges.begin(), edges.end(), std::pair{index, state}, [](const Edge& e, const auto& key) {
      return e.index != key.first ? e.index < key.first : e.state < key.second;
    });
    if (pos != edges.end() && pos->index == index && pos->state == state) {
      node = pos->child;
      continue;
    }
    const auto child = static_cast<std::int32_t>(nodes_.size());
    edges.insert(pos, Edge{static_cast<std::int16_t>(index), state, child});
    nodes_.emplace_back();
    node = child;
  }
  Leaf fresh{pattern, next_seq_++, source, true, node};
  const std::int32_t existing = nodes_[node].leaf;
  if (existing >= 0 && leaves_[existing].live) {
    if (fresh.pattern.proven_depth < leaves_[existing].pattern.proven_depth) {
      // Keep the original insertion rank so preference order stays stable.
      fresh.seq = leaves_[existing].seq;
      leaves_[existing].pattern = fresh.pattern;
      leaves_[existing].source = source;
    }
    return;
  }
  if (live_ >= capacity_) evict_oldest();
  const auto id = static_cast<std::int32_t>(leaves_.size());
  leaves_.push_back(std::move(fresh));
  nodes_[node].leaf = id;
  fifo_.push_back(id);
  ++live_;
}

std::optional<PatternHit> PatternTable::lookup(const Position& position, int goal_id) const {
  lookups_.add();
  const std::int32_t root = find_root(position.to_move(), goal_id, position.consecutive_passes());
  if (root < 0) return std::nullopt;

  // Level-order walk: depth equals zone size, so the first level holding a
  // guarded candidate contains the preferred match.
  std::vector<std::int32_t> frontier{root};
  std::vector<std::int32_t> next;
  std::vector<const Leaf*> candidates;
  while (!frontier.empty()) {
    candidates.clear();
    for (std::int32_t n : frontier) {
      const std::int32_t leaf = nodes_[n].leaf;
      if (leaf >= 0 && leaves_[leaf].live) candidates.push_back(&leaves_[leaf]);
    }
    std::sort(candidates.begin(), candidates.end(), [this](const Leaf* a, const Leaf* b) { return better(*a, *b); });
    for (const Leaf* c : candidates) {
      if (replay_guard(position, c->pattern.winner, c->pattern.winning_move)) {
        hits_.add();
        return PatternHit{c->pattern, c->source};
      }
    }
    next.clear();
    for (std::int32_t n : frontier) {
      for (const Edge& e : nodes_[n].edges)
        if (e.index < position.area() && position.at(e.index) == e.state) next.push_back(e.child);
    }
    frontier.swap(next);
  }
  return std::nullopt;
}

std::optional<PatternHit> PatternTable::lookup_linear(const Position& position, int goal_id) const {
  const Leaf* best = nullptr;
  for (const Leaf& l : leaves_) {
    if (!l.live || l.pattern.goal_id != goal_id || l.pattern.passes != position.consecutive_passes()) continue;
    if (!matches(position, l.pattern)) continue;
    if (!replay_guard(position, l.pattern.winner, l.pattern.winning_move)) continue;
    if (!best || better(l, *best)) best = &l;
  }
  if (!best) return std::nullopt;
  return PatternHit{best->pattern, best->source};
}

std::vector<RZPattern> PatternTable::patterns() const {
  std::vector<const Leaf*> live;
  for (const Leaf& l : leaves_)
    if (l.live) live.push_back(&l);
  std::sort(live.begin(), live.end(), [](const Leaf* a, const Leaf* b) { return a->seq < b->seq; });
  std::vector<RZPattern> out;
  out.reserve(live.size());
  for (const Leaf* l : live) out.push_back(l->pattern);
  return out;
}

TableStats PatternTable::stats() const {
  TableStats s;
  s.entries = live_;
  s.nodes = nodes_.size();
  s.lookups = lookups_.get();
  s.hits = hits_.get();
  s.misses = s.lookups - s.hits;
  std::size_t edges = 0;
  for (const auto& n : nodes_) edges += n.edges.capacity();
  s.memory_bytes = nodes_.size() * sizeof(TrieNode) + edges * sizeof(Edge) + leaves_.size() * sizeof(Leaf);
  return s;
}

bool PatternTable::audit() const {
  struct Frame {
    std::int32_t node;
    int last_index;
    std::vector<std::pair<int, Color>> path;
  };
  std::size_t reached = 0;
  for (const auto& [key, root] : roots_) {
    std::vector<Frame> stack{{root, -1, {}}};
    while (!stack.empty()) {
      Frame f = std::move(stack.back());
      stack.pop_back();
      const TrieNode& n = nodes_[f.node];
      if (n.leaf >= 0) {
        const Leaf& l = leaves_[n.leaf];
        if (!l.live || l.pattern.cells() != f.path) return false;
        if (root_key(l.pattern.to_move, l.pattern.goal_id, l.pattern.passes) != key) return false;
        ++reached;
      }
      for (std::size_t i = 0; i < n.edges.size(); ++i) {
        const Edge& e = n.edges[i];
        if (e.index <= f.last_index) return false;
        if (i > 0 && (n.edges[i - 1].index > e.index ||
                      (n.edges[i - 1].index == e.index && n.edges[i - 1].state >= e.state)))
          return false;
        Frame child{e.child, e.index, f.path};
        child.path.emplace_back(e.index, e.state);
        stack.push_back(std::move(child));
      }
    }
  }
  return reached == live_;
}

namespace {

void put_u8(std::ostream& o, std::uint8_t v) { o.put(static_cast<char>(v)); }
void put_u16(std::ostream& o, std::uint16_t v) {
  put_u8(o, static_cast<std::uint8_t>(v & 0xFF));
  put_u8(o, static_cast<std::uint8_t>(v >> 8));
}
void put_u32(std::ostream& o, std::uint32_t v) {
  put_u16(o, static_cast<std::uint16_t>(v & 0xFFFF));
  put_u16(o, static_cast<std::uint16_t>(v >> 16));
}
std::uint8_t get_u8(std::istream& in) {
  const int c = in.get();
  if (c == std::char_traits<char>::eof()) throw InvariantViolation("pattern file truncated");
  return static_cast<std::uint8_t>(c);
}
std::uint16_t get_u16(std::istream& in) {
  const std::uint16_t lo = get_u8(in);
  return static_cast<std::uint16_t>(lo | (get_u8(in) << 8));
}
std::uint32_t get_u32(std::istream& in) {
  const std::uint32_t lo = get_u16(in);
  return lo | (static_cast<std::uint32_t>(get_u16(in)) << 16);
}

constexpr std::uint16_t kNoMove = 0xFFFF;
constexpr std::uint16_t kPassMove = 0xFFFE;

Color color_from_byte(std::uint8_t b) {
  if (b > 2) throw InvariantViolation("pattern file: bad color byte");
  return static_cast<Color>(b);
}

}  // namespace

void PatternTable::save(std::ostream& out) const {
  out.write("RZPT", 4);
  put_u16(out, 1);
  put_u16(out, static_cast<std::uint16_t>(board_size_));
  const auto pats = patterns();
  put_u32(out, static_cast<std::uint32_t>(pats.size()));
  for (const RZPattern& p : pats) {
    const auto cells = p.cells();
    put_u16(out, static_cast<std::uint16_t>(cells.size()));
    for (const auto& [index, state] : cells) {
      put_u16(out, static_cast<std::uint16_t>(index));
      put_u8(out, static_cast<std::uint8_t>(state));
    }
    put_u8(out, static_cast<std::uint8_t>(p.to_move));
    put_u8(out, static_cast<std::uint8_t>(p.winner));
    put_u8(out, static_cast<std::uint8_t>(p.goal_id));
    put_u8(out, static_cast<std::uint8_t>(p.passes));
    std::uint16_t mv = kNoMove;
    if (p.winning_move) mv = p.winning_move->is_pass() ? kPassMove : static_cast<std::uint16_t>(p.winning_move->index());
    put_u16(out, mv);
    put_u32(out, static_cast<std::uint32_t>(p.proven_depth));
  }
}

PatternTable PatternTable::load(std::istream& in, std::size_t capacity) {
  char magic[4] = {};
  in.read(magic, 4);
  if (in.gcount() != 4 || std::string(magic, 4) != "RZPT") throw InvariantViolation("not a pattern table file");
  if (get_u16(in) != 1) throw InvariantViolation("unsupported pattern table version");
  const int size = get_u16(in);
  const Geometry& geo = Geometry::get(size);
  PatternTable table(size, capacity);
  const std::uint32_t count = get_u32(in);
  for (std::uint32_t r = 0; r < count; ++r) {
    RZPattern p;
    const int cells = get_u16(in);
    int last = -1;
    for (int c = 0; c < cells; ++c) {
      const int index = get_u16(in);
      const Color state = color_from_byte(get_u8(in));
      if (index <= last || index >= geo.area()) throw InvariantViolation("pattern file: cells out of order");
      last = index;
      p.zone.set(index);
      if (state == Color::Black) p.black.set(index);
      if (state == Color::White) p.white.set(index);
    }
    p.to_move = color_from_byte(get_u8(in));
    p.winner = color_from_byte(get_u8(in));
    p.goal_id = get_u8(in);
    p.passes = get_u8(in);
    const std::uint16_t mv = get_u16(in);
    if (mv == kPassMove) {
      p.winning_move = Move::pass();
    } else if (mv != kNoMove) {
      p.winning_move = Move::at(mv);
    }
    p.proven_depth = static_cast<int>(get_u32(in));
    table.insert(p);
  }
  return table;
}

}  // namespace rz
