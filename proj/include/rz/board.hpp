#pragma once

// Go rules kernel: stones, captures, suicide and positional superko, Zobrist hashing.

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "rz/point_set.hpp"

namespace rz {

enum class Color : std::uint8_t { Empty = 0, Black = 1, White = 2 };

constexpr Color opponent(Color c) {
  return c == Color::Black ? Color::White : c == Color::White ? Color::Black : Color::Empty;
}

char color_char(Color c);
std::string color_name(Color c);

class Move {
 public:
  constexpr Move() = default;
  static constexpr Move pass() { return Move(); }
  static constexpr Move at(int index) { return Move(index); }

  constexpr bool is_pass() const { return index_ < 0; }
  constexpr int index() const { return index_; }
  // Sort key with Pass ordered last.
  constexpr int order_key() const { return is_pass() ? PointSet::kMaxPoints : index_; }

  friend constexpr bool operator==(Move, Move) = default;

 private:
  constexpr explicit Move(int index) : index_(index) {}
  int index_ = -1;
};

class IllegalMove : public std::runtime_error {
 public:
  enum class Reason { Occupied, Suicide, Superko, OffBoard };
  IllegalMove(Reason reason, const std::string& what) : std::runtime_error(what), reason_(reason) {}
  Reason reason() const { return reason_; }

 private:
  Reason reason_;
};

class InvariantViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Static adjacency for one board size.
class Geometry {
 public:
  static constexpr int kMinSize = 2;
  static constexpr int kMaxSize = 19;

  static const Geometry& get(int size);

  int size() const { return size_; }
  int area() const { return size_ * size_; }
  int index(int col, int row) const { return row * size_ + col; }
  int col(int index) const { return index % size_; }
  int row(int index) const { return index / size_; }
  std::span<const std::int16_t> neighbors(int index) const {
    return {adj_[index].data(), static_cast<std::size_t>(adj_count_[index])};
  }
  const PointSet& all() const { return all_; }

  explicit Geometry(int size);

 private:
  int size_;
  std::array<std::array<std::int16_t, 4>, PointSet::kMaxPoints> adj_{};
  std::array<std::uint8_t, PointSet::kMaxPoints> adj_count_{};
  PointSet all_;
};

namespace zobrist {
// Keys come from fixed-seed mt19937_64 streams so hashes are stable across runs.
std::uint64_t stone(int index, Color c);
std::uint64_t to_move(Color c);
std::uint64_t verify_stone(int index, Color c);
std::uint64_t verify_to_move(Color c);
std::uint64_t pass_count(int n);
}  // namespace zobrist

struct Block {
  Color color = Color::Empty;
  PointSet stones;
  PointSet liberties;
};

enum class MoveCheck { Ok, Occupied, Suicide, Superko, OffBoard };

class Position {
 public:
  using Grid = std::array<Color, PointSet::kMaxPoints>;

  explicit Position(int size, Color to_move = Color::Black);

  // Builds a position from a raw grid. Throws InvariantViolation if any block lacks liberties.
  static Position setup(int size, std::span<const Color> grid, Color to_move);

  int size() const { return geo_->size(); }
  int area() const { return geo_->area(); }
  const Geometry& geometry() const { return *geo_; }
  std::span<const std::int16_t> neighbors(int index) const { return geo_->neighbors(index); }

  Color at(int index) const { return grid_[index]; }
  const Grid& grid() const { return grid_; }
  Color to_move() const { return to_move_; }
  std::uint64_t hash() const { return hash_; }
  std::uint64_t verification_hash() const { return verify_hash_; }
  std::optional<Move> last_move() const { return last_move_; }
  int consecutive_passes() const { return consecutive_passes_; }
  // Hashes of every earlier position in the current line (the current one excluded).
  const std::vector<std::uint64_t>& history() const { return history_; }
  bool seen_before(std::uint64_t h) const;

  MoveCheck check(Move m) const;
  bool is_legal(Move m) const { return check(m) == MoveCheck::Ok; }
  // Throws IllegalMove.
  Position play(Move m) const;
  std::vector<Move> legal_moves(bool include_pass = true) const;

  Block block_at(int index) const;
  std::vector<Block> blocks() const;
  PointSet stones_of(Color c) const;
  PointSet empty_points() const;

  // Full recomputation; equals hash() for every reachable position.
  std::uint64_t recompute_hash() const;

  // Same grid, new side to move, history cleared.
  Position with_to_move(Color c) const;

  bool same_state(const Position& o) const { return size() == o.size() && to_move_ == o.to_move_ && grid_ == o.grid_; }

 private:
  struct Outcome {
    MoveCheck check = MoveCheck::Ok;
    std::uint64_t hash = 0;
    std::uint64_t verify_hash = 0;
  };
  Outcome simulate(Move m, Grid* out_grid) const;

  const Geometry* geo_;
  Grid grid_{};
  Color to_move_;
  std::uint64_t hash_ = 0;
  std::uint64_t verify_hash_ = 0;
  std::optional<Move> last_move_;
  int consecutive_passes_ = 0;
  std::vector<std::uint64_t> history_;
};

// Flood-fills the 4-connected same-colored block containing index.
PointSet flood_block(const Position::Grid& grid, const Geometry& geo, int index);
PointSet block_liberties(const Position::Grid& grid, const Geometry& geo, const PointSet& stones);
// Points adjacent to the set but outside it.
PointSet boundary_of(const Geometry& geo, const PointSet& points);

std::string point_name(const Geometry& geo, int index);

}  // namespace rz
