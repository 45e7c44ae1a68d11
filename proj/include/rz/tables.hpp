#pragma once

// Memoization backends for proven results.
//
// TranspositionTable matches whole positions by Zobrist key. PatternTable is a
// trie over (intersection, state) edges with strictly increasing intersection
// indices along every path; a stored pattern matches any position that agrees
// with it on its zone, so lookup follows every edge consistent with the query.
//
// Both tables are single-writer / multi-reader: concurrent lookups are safe,
// inserts need exclusive access.

#include <atomic>
#include <cstdint>
#include <deque>
#include <iosfwd>
#include <optional>
#include <unordered_map>
#include <vector>

#include "rz/board.hpp"
#include "rz/zone.hpp"

namespace rz {

// Copyable relaxed atomic counter for lookup statistics.
class Counter {
 public:
  Counter() = default;
  Counter(const Counter& o) : v_(o.get()) {}
  Counter& operator=(const Counter& o) {
    v_.store(o.get(), std::memory_order_relaxed);
    return *this;
  }
  void add() const { v_.fetch_add(1, std::memory_order_relaxed); }
  std::uint64_t get() const { return v_.load(std::memory_order_relaxed); }

 private:
  mutable std::atomic<std::uint64_t> v_{0};
};

struct TableStats {
  std::size_t entries = 0;
  std::size_t nodes = 0;
  std::uint64_t lookups = 0;
  std::uint64_t hits = 0;
  std::uint64_t misses = 0;
  std::size_t memory_bytes = 0;
};

// Reuse of a winner-to-move result requires its stored winning move to be
// legal under the querying position's own history.
bool replay_guard(const Position& position, Color winner, const std::optional<Move>& winning_move);

struct TTEntry {
  std::uint64_t hash = 0;    // primary key (includes pass count)
  std::uint64_t verify = 0;  // independent key set, checked on every hit
  int goal_id = 0;
  Color winner = Color::Empty;
  Zone zone;
  std::optional<Move> winning_move;
  int proven_depth = 0;
  std::uint32_t source = 0;  // caller-defined tag (search node id)
};

class TranspositionTable {
 public:
  static constexpr std::size_t kDefaultCapacity = std::size_t{1} << 22;

  explicit TranspositionTable(std::size_t capacity = kDefaultCapacity) : capacity_(capacity) {}

  static std::uint64_t key(const Position& position);
  static std::uint64_t verify_key(const Position& position);
  static TTEntry make_entry(const Position& position, int goal_id);

  // Oldest-insertion eviction once capacity is reached.
  void store(const TTEntry& entry);
  std::optional<TTEntry> lookup(const Position& position, int goal_id) const;

  TableStats stats() const;
  std::size_t size() const { return map_.size(); }

 private:
  struct Key {
    std::uint64_t hash;
    int goal_id;
    friend bool operator==(const Key&, const Key&) = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const { return static_cast<std::size_t>(k.hash ^ (k.goal_id * 0x9E3779B97F4A7C15ULL)); }
  };

  std::size_t capacity_;
  std::unordered_map<Key, TTEntry, KeyHash> map_;
  std::deque<Key> order_;
  Counter lookups_;
  Counter hits_;
};

struct PatternHit {
  RZPattern pattern;
  std::uint32_t source = 0;
};

class PatternTable {
 public:
  static constexpr std::size_t kDefaultCapacity = 1'000'000;

  explicit PatternTable(int board_size, std::size_t capacity = kDefaultCapacity);

  // Duplicates of an existing (zone, stones, key) keep the smaller proven depth.
  void insert(const RZPattern& pattern, std::uint32_t source = 0);

  // Best matching pattern for the position's side to move, by (zone size,
  // proven depth, insertion order), skipping candidates that fail the replay guard.
  std::optional<PatternHit> lookup(const Position& position, int goal_id) const;
  // Reference implementation: linear scan over every live pattern.
  std::optional<PatternHit> lookup_linear(const Position& position, int goal_id) const;

  // Live patterns in insertion order.
  std::vector<RZPattern> patterns() const;
  TableStats stats() const;
  int board_size() const { return board_size_; }

  // Structural check: strictly increasing indices along every path, and every
  // leaf's path reconstructs its pattern.
  bool audit() const;

  // Binary format, all integers little-endian:
  //   magic "RZPT", u16 version (1), u16 board size, u32 record count
  //   per record: u16 cell count, cells as (u16 index, u8 state 0/1/2),
  //               u8 to_move, u8 winner, u8 goal_id, u8 passes,
  //               u16 winning move (0xFFFF none, 0xFFFE pass), u32 proven depth
  void save(std::ostream& out) const;
  static PatternTable load(std::istream& in, std::size_t capacity = kDefaultCapacity);

 private:
  struct Edge {
    std::int16_t index;
    Color state;
    std::int32_t child;
  };
  struct TrieNode {
    std::vector<Edge> edges;  // sorted by (index, state)
    std::int32_t leaf = -1;
  };
  struct Leaf {
    RZPattern pattern;
    std::uint64_t seq = 0;
    std::uint32_t source = 0;
    bool live = true;
    std::int32_t node = -1;
  };

  std::int32_t root_for(const RZPattern& p);
  std::int32_t find_root(Color to_move, int goal_id, int passes) const;
  static std::uint32_t root_key(Color to_move, int goal_id, int passes) {
    return (static_cast<std::uint32_t>(to_move) << 16) | (static_cast<std::uint32_t>(goal_id) << 8) |
           static_cast<std::uint32_t>(passes);
  }
  bool better(const Leaf& a, const Leaf& b) const;
  void evict_oldest();

  int board_size_;
  std::size_t capacity_;
  std::vector<TrieNode> nodes_;
  std::vector<Leaf> leaves_;
  std::unordered_map<std::uint32_t, std::int32_t> roots_;
  std::deque<std::int32_t> fifo_;
  std::size_t live_ = 0;
  std::uint64_t next_seq_ = 0;
  Counter lookups_;
  Counter hits_;
};

}  // namespace rz
