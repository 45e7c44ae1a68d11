#include <array>

#include "doctest.h"
#include "rz/life.hpp"
#include "rz/zone.hpp"
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

}  // namespace

TEST_CASE("or_propagate adds only the move when its surroundings are covered") {
  const Position parent = from_rows({".....", ".....", ".....", ".....", "....."});
  const int m = at(parent, 2, 2);
  const Zone child = points(parent, {{2, 1}, {1, 2}, {3, 2}, {2, 3}});
  const Zone z = or_propagate(child, Move::at(m), parent, parent.play(Move::at(m)));
  Zone expect = child;
  expect.set(m);
  CHECK(z == expect);
}

TEST_CASE("or_propagate pins a captured block and its liberties") {
  const Position p2 = from_rows({"OOO.X", "XXX..", ".....", ".....", "....."});
  const int cap = at(p2, 3, 0);
  const Position after = p2.play(Move::at(cap));
  REQUIRE(after.stones_of(Color::White).empty());
  const Zone z = or_propagate(Zone{}, Move::at(cap), p2, after);
  for (int c = 0; c < 3; ++c) CHECK(z.test(at(p2, c, 0)));
  CHECK(z.test(cap));
  // Every point adjacent to the captured stones.
  CHECK(z.test(at(p2, 0, 1)));
  CHECK(z.test(at(p2, 1, 1)));
  CHECK(z.test(at(p2, 2, 1)));
}

TEST_CASE("or_propagate of a pass keeps the child zone") {
  const Position p(5);
  const Zone child = points(p, {{0, 0}});
  CHECK(or_propagate(child, Move::pass(), p, p.play(Move::pass())) == child);
}

TEST_CASE("and_propagate") {
  const Position p(7);
  SUBCASE("single null child") {
    const Zone z = points(p, {{1, 1}, {2, 2}});
    const std::array<std::pair<Move, Zone>, 1> kids{{{Move::pass(), z}}};
    CHECK(and_propagate(kids) == z);
  }
  SUBCASE("union of three refutations with the refuted moves") {
    const Zone zb = points(p, {{0, 0}, {1, 0}});
    const Zone zc = points(p, {{1, 0}, {2, 0}});
    const Zone zd = points(p, {{3, 3}});
    const std::array<std::pair<Move, Zone>, 3> kids{
        {{Move::at(at(p, 0, 0)), zb}, {Move::at(at(p, 2, 0)), zc}, {Move::at(at(p, 3, 3)), zd}}};
    CHECK(and_propagate(kids) == (zb | zc | zd));
  }
  SUBCASE("disjoint zones add up") {
    const Zone a = points(p, {{0, 0}, {0, 1}, {0, 2}});
    const Zone b = points(p, {{5, 5}, {6, 6}});
    const std::array<std::pair<Move, Zone>, 2> kids{{{Move::pass(), a}, {Move::pass(), b}}};
    CHECK(and_propagate(kids).count() == a.count() + b.count());
  }
}

TEST_CASE("pattern matching is restricted to the zone") {
  const Position p = from_rows({"XO...", ".X...", "..O..", ".....", "....."});
  const Zone z = points(p, {{0, 0}, {1, 0}, {0, 1}, {1, 1}});
  const RZPattern pat = make_pattern(p, z, Color::Black, 0, std::nullopt, 3);
  CHECK(matches(p, pat));
  SUBCASE("in-zone change") {
    const Position q = from_rows({"XO...", "XX...", "..O..", ".....", "....."});
    CHECK_FALSE(matches(q, pat));
  }
  SUBCASE("out-of-zone changes") {
    const Position q = from_rows({"XO...", ".X...", ".....", "...XX", "O...."});
    CHECK(matches(q, pat));
  }
  SUBCASE("side to move is part of the pattern") { CHECK_FALSE(matches(p.with_to_move(Color::White), pat)); }
}

TEST_CASE("pattern cells are sorted by index") {
  const Position p = from_rows({"XO...", ".....", ".....", ".....", "....O"});
  const Zone z = points(p, {{4, 4}, {0, 0}, {1, 0}});
  const auto cells = make_pattern(p, z, Color::Black, 0, std::nullopt, 0).cells();
  REQUIRE(cells.size() == 3);
  CHECK(cells[0] == std::pair{0, Color::Black});
  CHECK(cells[1] == std::pair{1, Color::White});
  CHECK(cells[2] == std::pair{24, Color::White});
}

TEST_CASE("terminal zone covers the living block and its eyes") {
  const Position p = from_rows({".X.XO", "XXXXO", "OOOOO", ".....", "....."}, Color::White);
  const UcaProof proof = benson_uca(p, Color::Black);
  const Zone z = terminal_zone(p, proof, p.stones_of(Color::Black));
  CHECK(p.stones_of(Color::Black).is_subset_of(z));
  CHECK(z.test(at(p, 0, 0)));
  CHECK(z.test(at(p, 2, 0)));
  CHECK_FALSE(z.test(at(p, 2, 4)));
  CHECK_THROWS(terminal_zone(p, proof, p.stones_of(Color::White)));
}

TEST_CASE("loser zone closure pulls in whole winner blocks with two liberties") {
  const Position p = from_rows({"...XO", "XXXXO", "OOOOO", ".....", "....."}, Color::Black);
  const GoalContext goal{Color::Black, p.stones_of(Color::Black)};
  const ClosedZone cz = close_loser_zone(points(p, {{4, 0}}), p, Color::White, goal);
  CHECK(p.stones_of(Color::White).is_subset_of(cz.zone));
  int libs = 0;
  for (int c = 0; c < 5; ++c) libs += cz.zone.test(at(p, c, 3));
  CHECK(libs >= 2);
  CHECK_FALSE(cz.full_board);
}

TEST_CASE("zone serialization round trip") {
  Zone z;
  for (int i : {3, 17, 64, 65, 200, 360}) z.set(i);
  const auto v = serialize_zone(z);
  CHECK(v == std::vector<int>{3, 17, 64, 65, 200, 360});
  CHECK(deserialize_zone(v) == z);
}
