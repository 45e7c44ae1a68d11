#include "rz/board.hpp"

#include <algorithm>
#include <mutex>
#include <random>

namespace rz {

char color_char(Color c) {
  switch (c) {
    case Color::Black: return 'X';
    case Color::White: return 'O';
    default: return '.';
  }
}

std::string color_name(Color c) {
  switch (c) {
    case Color::Black: return "black";
    case Color::White: return "white";
    default: return "empty";
  }
}

Geometry::Geometry(int size) : size_(size) {
  for (int r = 0; r < size; ++r) {
    for (int c = 0; c < size; ++c) {
      const int i = index(c, r);
      int n = 0;
      if (r > 0) adj_[i][n++] = static_cast<std::int16_t>(index(c, r - 1));
      if (c > 0) adj_[i][n++] = static_cast<std::int16_t>(index(c - 1, r));
      if (c + 1 < size) adj_[i][n++] = static_cast<std::int16_t>(index(c + 1, r));
      if (r + 1 < size) adj_[i][n++] = static_cast<std::int16_t>(index(c, r + 1));
      adj_count_[i] = static_cast<std::uint8_t>(n);
      all_.set(i);
    }
  }
}

const Geometry& Geometry::get(int size) {
  if (size < kMinSize || size > kMaxSize) throw InvariantViolation("board size out of range: " + std::to_string(size));
  static const auto table = [] {
    std::vector<Geometry> g;
    g.reserve(kMaxSize + 1);
    for (int s = 0; s <= kMaxSize; ++s) g.emplace_back(std::max(s, 1));
    return g;
  }();
  return table[size];
}

namespace zobrist {
namespace {

struct Keys {
  std::array<std::array<std::uint64_t, 2>, PointSet::kMaxPoints> stone{};
  std::array<std::uint64_t, 2> to_move{};
  std::array<std::uint64_t, 8> passes{};

  explicit Keys(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    for (auto& k : stone) {
      k[0] = rng();
      k[1] = rng();
    }
    to_move[0] = rng();
    to_move[1] = rng();
    for (auto& p : passes) p = rng();
  }
};

// Fixed seeds; changing them invalidates persisted tables and golden hashes.
const Keys& primary() {
  static const Keys k(0x52A5'1D0E'5EED'0001ULL);
  return k;
}
const Keys& verification() {
  static const Keys k(0x52A5'1D0E'5EED'0002ULL);
  return k;
}

int slot(Color c) { return c == Color::Black ? 0 : 1; }

}  // namespace

std::uint64_t stone(int index, Color c) { return primary().stone[index][slot(c)]; }
std::uint64_t to_move(Color c) { return primary().to_move[slot(c)]; }
std::uint64_t verify_stone(int index, Color c) { return verification().stone[index][slot(c)]; }
std::uint64_t verify_to_move(Color c) { return verification().to_move[slot(c)]; }
std::uint64_t pass_count(int n) { return n == 0 ? 0 : primary().passes[std::min(n, 7)]; }

}  // namespace zobrist

PointSet flood_block(const Position::Grid& grid, const Geometry& geo, int index) {
  PointSet block;
  const Color c = grid[index];
  std::array<std::int16_t, PointSet::kMaxPoints> stack{};
  int top = 0;
  stack[top++] = static_cast<std::int16_t>(index);
  block.set(index);
  while (top > 0) {
    const int p = stack[--top];
    for (int n : geo.neighbors(p)) {
      if (grid[n] == c && !block.test(n)) {
        block.set(n);
        stack[top++] = static_cast<std::int16_t>(n);
      }
    }
  }
  return block;
}

PointSet block_liberties(const Position::Grid& grid, const Geometry& geo, const PointSet& stones) {
  PointSet libs;
  stones.for_each([&](int p) {
    for (int n : geo.neighbors(p))
      if (grid[n] == Color::Empty) libs.set(n);
  });
  return libs;
}

PointSet boundary_of(const Geometry& geo, const PointSet& points) {
  PointSet out;
  points.for_each([&](int p) {
    for (int n : geo.neighbors(p)) out.set(n);
  });
  return out - points;
}

std::string point_name(const Geometry& geo, int index) {
  // Column letters skip 'I' as on a real goban; row 1 is the bottom line.
  static constexpr char kCols[] = "ABCDEFGHJKLMNOPQRST";
  return std::string(1, kCols[geo.col(index)]) + std::to_string(geo.size() - geo.row(index));
}

namespace {

bool has_liberty(const Position::Grid& grid, const Geometry& geo, int index) {
  const PointSet block = flood_block(grid, geo, index);
  bool found = false;
  block.for_each([&](int p) {
    if (found) return;
    for (int n : geo.neighbors(p))
      if (grid[n] == Color::Empty) {
        found = true;
        return;
      }
  });
  return found;
}

}  // namespace

Position::Position(int size, Color to_move) : geo_(&Geometry::get(size)), to_move_(to_move) {
  grid_.fill(Color::Empty);
  hash_ = zobrist::to_move(to_move_);
  verify_hash_ = zobrist::verify_to_move(to_move_);
}

Position Position::setup(int size, std::span<const Color> grid, Color to_move) {
  if (to_move != Color::Black && to_move != Color::White) throw InvariantViolation("side to move must be a color");
  Position p(size, to_move);
  if (static_cast<int>(grid.size()) < p.area()) throw InvariantViolation("grid smaller than board");
  std::copy_n(grid.begin(), p.area(), p.grid_.begin());
  for (int i = 0; i < p.area(); ++i) {
    if (p.grid_[i] != Color::Empty && !has_liberty(p.grid_, *p.geo_, i))
      throw InvariantViolation("block without liberties at " + point_name(*p.geo_, i));
  }
  p.hash_ = p.recompute_hash();
  std::uint64_t v = zobrist::verify_to_move(to_move);
  for (int i = 0; i < p.area(); ++i)
    if (p.grid_[i] != Color::Empty) v ^= zobrist::verify_stone(i, p.grid_[i]);
  p.verify_hash_ = v;
  return p;
}

bool Position::seen_before(std::uint64_t h) const {
  return h == hash_ || std::find(history_.begin(), history_.end(), h) != history_.end();
}

std::uint64_t Position::recompute_hash() const {
  std::uint64_t h = zobrist::to_move(to_move_);
  for (int i = 0; i < area(); ++i)
    if (grid_[i] != Color::Empty) h ^= zobrist::stone(i, grid_[i]);
  return h;
}

Position::Outcome Position::simulate(Move m, Grid* out) const {
  Outcome r;
  const Color me = to_move_;
  const Color them = opponent(me);
  r.hash = hash_ ^ zobrist::to_move(me) ^ zobrist::to_move(them);
  r.verify_hash = verify_hash_ ^ zobrist::verify_to_move(me) ^ zobrist::verify_to_move(them);
  if (m.is_pass()) {
    if (out) *out = grid_;
    return r;
  }
  const int p = m.index();
  if (p >= area()) {
    r.check = MoveCheck::OffBoard;
    return r;
  }
  if (grid_[p] != Color::Empty) {
    r.check = MoveCheck::Occupied;
    return r;
  }
  Grid g = grid_;
  g[p] = me;
  r.hash ^= zobrist::stone(p, me);
  r.verify_hash ^= zobrist::verify_stone(p, me);
  bool captured_any = false;
  for (int n : geo_->neighbors(p)) {
    if (g[n] != them) continue;
    const PointSet blk = flood_block(g, *geo_, n);
    if (!block_liberties(g, *geo_, blk).empty()) continue;
    captured_any = true;
    blk.for_each([&](int s) {
      g[s] = Color::Empty;
      r.hash ^= zobrist::stone(s, them);
      r.verify_hash ^= zobrist::verify_stone(s, them);
    });
  }
  if (!captured_any && !has_liberty(g, *geo_, p)) {
    r.check = MoveCheck::Suicide;
    return r;
  }
  if (seen_before(r.hash)) {
    r.check = MoveCheck::Superko;
    return r;
  }
  if (out) *out = g;
  return r;
}

MoveCheck Position::check(Move m) const { return simulate(m, nullptr).check; }

Position Position::play(Move m) const {
  Position next(*this);
  const Outcome r = simulate(m, &next.grid_);
  switch (r.check) {
    case MoveCheck::Ok: break;
    case MoveCheck::Occupied: throw IllegalMove(IllegalMove::Reason::Occupied, "occupied point " + point_name(*geo_, m.index()));
    case MoveCheck::Suicide: throw IllegalMove(IllegalMove::Reason::Suicide, "suicide at " + point_name(*geo_, m.index()));
    case MoveCheck::Superko: throw IllegalMove(IllegalMove::Reason::Superko, "superko violation at " + point_name(*geo_, m.index()));
    case MoveCheck::OffBoard: throw IllegalMove(IllegalMove::Reason::OffBoard, "move off board");
  }
  next.history_.push_back(hash_);
  next.hash_ = r.hash;
  next.verify_hash_ = r.verify_hash;
  next.to_move_ = opponent(to_move_);
  next.last_move_ = m;
  next.consecutive_passes_ = m.is_pass() ? consecutive_passes_ + 1 : 0;
  return next;
}

std::vector<Move> Position::legal_moves(bool include_pass) const {
  std::vector<Move> out;
  for (int i = 0; i < area(); ++i)
    if (grid_[i] == Color::Empty && is_legal(Move::at(i))) out.push_back(Move::at(i));
  if (include_pass) out.push_back(Move::pass());
  return out;
}

Block Position::block_at(int index) const {
  Block b;
  b.color = grid_[index];
  if (b.color == Color::Empty) return b;
  b.stones = flood_block(grid_, *geo_, index);
  b.liberties = block_liberties(grid_, *geo_, b.stones);
  return b;
}

std::vector<Block> Position::blocks() const {
  std::vector<Block> out;
  PointSet seen;
  for (int i = 0; i < area(); ++i) {
    if (grid_[i] == Color::Empty || seen.test(i)) continue;
    out.push_back(block_at(i));
    seen |= out.back().stones;
  }
  return out;
}

PointSet Position::stones_of(Color c) const {
  PointSet s;
  for (int i = 0; i < area(); ++i)
    if (grid_[i] == c) s.set(i);
  return s;
}

PointSet Position::empty_points() const { return stones_of(Color::Empty); }

Position Position::with_to_move(Color c) const {
  return setup(size(), std::span<const Color>(grid_.data(), static_cast<std::size_t>(area())), c);
}

}  // namespace rz
