#include "doctest.h"
#include "rz/board.hpp"
#include "../support/boards.hpp"

using namespace rz;
using rz::testing::at;
using rz::testing::from_rows;

TEST_CASE("single stone on an open board has four liberties") {
  Position p(5);
  p = p.play(Move::at(at(p, 2, 2)));
  const auto bs = p.blocks();
  REQUIRE(bs.size() == 1);
  CHECK(bs[0].color == Color::Black);
  CHECK(bs[0].liberties.count() == 4);
  CHECK(p.to_move() == Color::White);
}

TEST_CASE("filling the last liberty captures") {
  Position p = from_rows({"O....", "X....", ".....", ".....", "....."});
  p = p.play(Move::at(at(p, 1, 0)));
  CHECK(p.at(at(p, 0, 0)) == Color::Empty);
  CHECK(p.stones_of(Color::White).empty());
}

TEST_CASE("immediate ko recapture is a superko violation") {
  Position p = from_rows({".XO..", "XO.O.", ".XO..", ".....", "....."});
  p = p.play(Move::at(at(p, 2, 1)));
  CHECK(p.at(at(p, 1, 1)) == Color::Empty);
  CHECK(p.check(Move::at(at(p, 1, 1))) == MoveCheck::Superko);
  CHECK_FALSE(p.is_legal(Move::at(at(p, 1, 1))));
  CHECK_THROWS_AS(p.play(Move::at(at(p, 1, 1))), IllegalMove);
}

TEST_CASE("legality basics") {
  Position p = from_rows({".O...", "O....", ".....", ".....", "..X.."});
  CHECK(p.is_legal(Move::pass()));
  CHECK(p.check(Move::at(at(p, 2, 4))) == MoveCheck::Occupied);
  CHECK(p.check(Move::at(at(p, 0, 0))) == MoveCheck::Suicide);
  CHECK(p.check(Move::at(99)) == MoveCheck::OffBoard);
}

TEST_CASE("suicide check does not fire when the move captures") {
  Position p = from_rows({".OX..", "OX...", "X....", ".....", "....."});
  CHECK(p.is_legal(Move::at(at(p, 0, 0))));
}

TEST_CASE("block enumeration") {
  SUBCASE("diagonal stones are separate blocks") {
    Position p = from_rows({"X....", ".X...", ".....", ".....", "....."});
    CHECK(p.blocks().size() == 2);
  }
  SUBCASE("L-shaped corner chain") {
    Position p = from_rows({"X....", "XX...", ".....", ".....", "....."});
    const auto bs = p.blocks();
    REQUIRE(bs.size() == 1);
    CHECK(bs[0].stones.count() == 3);
    CHECK(bs[0].liberties.count() == 4);
  }
  SUBCASE("empty board") { CHECK(Position(5).blocks().empty()); }
}

TEST_CASE("zobrist hashing") {
  const Position start(7);
  const int a = at(start, 1, 1), b = at(start, 5, 5), c = at(start, 3, 2);
  const Position x = start.play(Move::at(a)).play(Move::at(b)).play(Move::at(c));
  const Position y = start.play(Move::at(c)).play(Move::at(b)).play(Move::at(a));
  CHECK(x.hash() == y.hash());
  CHECK(x.verification_hash() == y.verification_hash());
  CHECK(x.with_to_move(Color::Black).hash() != x.hash());
  CHECK(x.hash() == x.recompute_hash());
  // Rebuilding from the grid gives the same key.
  const Position rebuilt =
      Position::setup(7, std::span<const Color>(x.grid().data(), static_cast<std::size_t>(x.area())), x.to_move());
  CHECK(rebuilt.hash() == x.hash());
}

TEST_CASE("passes are counted and always legal") {
  Position p(5);
  p = p.play(Move::pass());
  CHECK(p.consecutive_passes() == 1);
  p = p.play(Move::pass());
  CHECK(p.consecutive_passes() == 2);
  p = p.play(Move::at(0));
  CHECK(p.consecutive_passes() == 0);
}

TEST_CASE("setup rejects blocks without liberties") {
  CHECK_THROWS_AS(from_rows({"XO", "OO"}), InvariantViolation);
}

TEST_CASE("point names skip the letter I") {
  const Geometry& g = Geometry::get(19);
  CHECK(point_name(g, g.index(0, 18)) == "A1");
  CHECK(point_name(g, g.index(8, 0)) == "J19");
}
