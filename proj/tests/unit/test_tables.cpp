#include <random>
#include <sstream>

#include "doctest.h"
#include "rz/errors.hpp"
#include "rz/tables.hpp"
#include "../support/boards.hpp"

using namespace rz;
using rz::testing::at;
using rz::testing::from_rows;

namespace {

Zone points(const Position& p, std::initializer_list<std::pair<int, int>> cells) {
  Zone z;
  for (auto [c, r] : cells) z.set(at(p, c, r));
  return z;
}

TTEntry entry_for(const Position& p, Color winner) {
  TTEntry e = TranspositionTable::make_entry(p, 0);
  e.winner = winner;
  return e;
}

}  // namespace

TEST_CASE("transposition table") {
  TranspositionTable tt;
  const Position start(5);
  const Position x = start.play(Move::at(0)).play(Move::at(6)).play(Move::at(12));
  tt.store(entry_for(x, Color::Black));
  SUBCASE("same position hits") {
    const auto e = tt.lookup(x, 0);
    REQUIRE(e);
    CHECK(e->winner == Color::Black);
  }
  SUBCASE("transposition hits") {
    const Position y = start.play(Move::at(12)).play(Move::at(6)).play(Move::at(0));
    CHECK(tt.lookup(y, 0).has_value());
  }
  SUBCASE("one stone difference misses") {
    const Position y = start.play(Move::at(0)).play(Move::at(6)).play(Move::at(13));
    CHECK_FALSE(tt.lookup(y, 0).has_value());
  }
  SUBCASE("other goal misses") { CHECK_FALSE(tt.lookup(x, 1).has_value()); }
  SUBCASE("pass count is part of the key") { CHECK_FALSE(tt.lookup(x.play(Move::pass()).play(Move::pass()), 0)); }
  SUBCASE("counters") {
    tt.lookup(x, 0);
    tt.lookup(start, 0);
    const TableStats s = tt.stats();
    CHECK(s.entries == 1);
    CHECK(s.lookups == 2);
    CHECK(s.hits + s.misses == s.lookups);
  }
}

TEST_CASE("transposition table evicts the oldest entry at capacity") {
  TranspositionTable tt(2);
  const Position a = Position(5).play(Move::at(0));
  const Position b = Position(5).play(Move::at(1));
  const Position c = Position(5).play(Move::at(2));
  tt.store(entry_for(a, Color::Black));
  tt.store(entry_for(b, Color::Black));
  tt.store(entry_for(c, Color::Black));
  CHECK(tt.size() == 2);
  CHECK_FALSE(tt.lookup(a, 0));
  CHECK(tt.lookup(c, 0));
}

TEST_CASE("pattern table basics") {
  const Position p = from_rows({"XO...", ".X...", ".....", ".....", "....."}, Color::White);
  const Zone z = points(p, {{0, 0}, {1, 0}, {0, 1}});
  const RZPattern pat = make_pattern(p, z, Color::Black, 0, std::nullopt, 2);
  PatternTable pt(5);
  CHECK(pt.stats().entries == 0);
  CHECK(pt.stats().lookups == 0);
  pt.insert(pat, 7);
  CHECK(pt.stats().entries == 1);
  CHECK(pt.stats().nodes == 4);  // root plus one node per zone point
  CHECK(pt.audit());

  SUBCASE("exact position") {
    const auto hit = pt.lookup(p, 0);
    REQUIRE(hit);
    CHECK(hit->source == 7);
    CHECK(hit->pattern.same_key(pat));
  }
  SUBCASE("extra stones outside the zone") {
    const Position q = from_rows({"XO...", ".XXX.", "..OO.", ".....", "...XO"}, Color::White);
    CHECK(pt.lookup(q, 0).has_value());
  }
  SUBCASE("in-zone difference") {
    const Position q = from_rows({"XO...", "XX...", ".....", ".....", "....."}, Color::White);
    CHECK_FALSE(pt.lookup(q, 0).has_value());
  }
  SUBCASE("wrong side to move") { CHECK_FALSE(pt.lookup(p.with_to_move(Color::Black), 0).has_value()); }
  SUBCASE("duplicate insert keeps one leaf") {
    pt.insert(pat, 9);
    CHECK(pt.stats().entries == 1);
    CHECK(pt.patterns().size() == 1);
  }
  SUBCASE("shared prefix") {
    const Zone z2 = points(p, {{0, 0}, {1, 0}, {2, 2}});
    pt.insert(make_pattern(p, z2, Color::Black, 0, std::nullopt, 2));
    CHECK(pt.stats().entries == 2);
    CHECK(pt.stats().nodes == 5);
    CHECK(pt.audit());
  }
  SUBCASE("counters are conserved") {
    pt.lookup(p, 0);
    pt.lookup(p.with_to_move(Color::Black), 0);
    const TableStats s = pt.stats();
    CHECK(s.lookups == 2);
    CHECK(s.hits == 1);
    CHECK(s.hits + s.misses == s.lookups);
  }
}

TEST_CASE("pattern lookup prefers the smallest zone") {
  const Position p = from_rows({"XO...", ".X...", ".....", ".....", "....."}, Color::White);
  PatternTable pt(5);
  pt.insert(make_pattern(p, points(p, {{0, 0}, {1, 0}, {0, 1}, {4, 4}}), Color::Black, 0, std::nullopt, 1), 1);
  pt.insert(make_pattern(p, points(p, {{0, 0}, {1, 0}}), Color::Black, 0, std::nullopt, 5), 2);
  const auto hit = pt.lookup(p, 0);
  REQUIRE(hit);
  CHECK(hit->source == 2);
  CHECK(pt.lookup_linear(p, 0)->source == 2);
}

TEST_CASE("replay guard rejects a stored move that is illegal here") {
  const Position p = from_rows({"XO...", ".X...", ".....", ".....", "....."}, Color::Black);
  PatternTable pt(5);
  const Zone z = points(p, {{0, 0}, {1, 0}, {0, 1}});
  pt.insert(make_pattern(p, z, Color::Black, 0, Move::at(at(p, 3, 3)), 1));
  CHECK(pt.lookup(p, 0).has_value());
  // Same zone contents, but the stored move's point is now occupied.
  const Position q = from_rows({"XO...", ".X...", ".....", "...O.", "....."}, Color::Black);
  CHECK_FALSE(pt.lookup(q, 0).has_value());
  CHECK_FALSE(pt.lookup_linear(q, 0).has_value());
  CHECK(replay_guard(p, Color::Black, Move::at(at(p, 3, 3))));
  CHECK_FALSE(replay_guard(q, Color::Black, Move::at(at(p, 3, 3))));
}

TEST_CASE("pattern table capacity evicts oldest") {
  const Position p(5);
  PatternTable pt(5, 2);
  for (int i = 0; i < 3; ++i) {
    Zone z;
    z.set(i);
    pt.insert(make_pattern(p, z, Color::White, 0, std::nullopt, 0), static_cast<std::uint32_t>(i));
  }
  const auto pats = pt.patterns();
  REQUIRE(pats.size() == 2);
  CHECK(pats[0].zone.test(1));
  CHECK(pats[1].zone.test(2));
  CHECK(pt.audit());
}

TEST_CASE("pattern table save and load") {
  std::mt19937_64 rng(3);
  PatternTable pt(7);
  const Position base(7);
  for (int k = 0; k < 40; ++k) {
    std::vector<Color> grid(49);
    for (auto& c : grid) c = static_cast<Color>(rng() % 3);
    Position pos(7);
    try {
      pos = Position::setup(7, grid, k % 2 ? Color::Black : Color::White);
    } catch (const InvariantViolation&) {
      continue;
    }
    Zone z;
    for (int i = 0; i < 49; ++i)
      if (rng() % 4 == 0) z.set(i);
    pt.insert(make_pattern(pos, z, Color::Black, static_cast<int>(k % 3), std::nullopt, k));
  }
  std::stringstream buf;
  pt.save(buf);
  const PatternTable back = PatternTable::load(buf);
  const auto a = pt.patterns();
  const auto b = back.patterns();
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].same_key(b[i]));
    CHECK(a[i].proven_depth == b[i].proven_depth);
  }
  CHECK(back.audit());
  std::stringstream bad("NOPE");
  CHECK_THROWS(PatternTable::load(bad));
}
