#include "doctest.h"
#include "rz/errors.hpp"
#include "rz/problem.hpp"
#include "../support/boards.hpp"

using namespace rz;
using rz::testing::at;
using rz::testing::from_rows;
using rz::testing::make_problem;

TEST_CASE("minimal problem loads") {
  const Problem p = load_sgf("(;FF[4]SZ[5]AB[cc]MA[cc]PL[W])");
  CHECK(p.position.size() == 5);
  CHECK(p.defender == Color::Black);
  CHECK(p.goal == Goal::LiveAnyCrucial);
  CHECK(p.or_color() == Color::Black);
  CHECK(p.position.to_move() == Color::White);
  CHECK(p.crucial.count() == 1);
}

TEST_CASE("goal comes from the comment unless overridden") {
  const std::string text = "(;SZ[5]AW[aa]MA[aa]C[Black to play.\nGoal: kill])";
  CHECK(load_sgf(text).goal == Goal::KillAllCrucial);
  CHECK(load_sgf(text).or_color() == Color::Black);
  CHECK(load_sgf(text, Goal::LiveAnyCrucial).goal == Goal::LiveAnyCrucial);
  CHECK(parse_goal("live") == Goal::LiveAnyCrucial);
  CHECK_FALSE(parse_goal("seki").has_value());
}

TEST_CASE("invalid problems are rejected") {
  CHECK_THROWS_AS(load_sgf("(;SZ[5]AB[cc]MA[dd])"), InvariantViolation);
  CHECK_THROWS_AS(load_sgf("(;SZ[5]AB[cc])"), InvariantViolation);
  CHECK_THROWS_AS(load_sgf("(;SZ[5]AB[cc]AW[dd]MA[cc][dd])"), InvariantViolation);
  CHECK_THROWS_AS(load_sgf("(;SZ[5]AB[cc]MA[cc]"), ParseError);
  CHECK_THROWS_AS(load_sgf("(;SZ[99]AB[cc]MA[cc])"), InvariantViolation);
  CHECK_THROWS_AS(load_sgf("(;SZ[5]AB[cc]MA[cc]PL[Q])"), ParseError);
}

TEST_CASE("write then load returns the same problem") {
  const Position pos = from_rows({".X.XO", "XXXXO", "OOOOO", ".....", "....."}, Color::White);
  Problem p = make_problem(pos, Color::White, Goal::KillAllCrucial);
  p.label = "round trip";
  const Problem q = load_sgf(write_problem_sgf(p));
  CHECK(q.position.same_state(p.position));
  CHECK(q.crucial == p.crucial);
  CHECK(q.goal == p.goal);
  CHECK(q.defender == p.defender);
  CHECK(q.label == p.label);
}

TEST_CASE("terminal status") {
  const Position alive = from_rows({".X.XO", "XXXXO", "OOOOO", ".....", "....."}, Color::White);
  SUBCASE("two-eyed crucial block") {
    const Problem p = make_problem(alive, Color::Black, Goal::LiveAnyCrucial);
    CHECK(terminal_status(p, alive) == TerminalStatus::OrWins);
    const Terminal t = classify_terminal(p, alive);
    CHECK(t.winner == Color::Black);
    CHECK(p.crucial.is_subset_of(t.zone));
  }
  SUBCASE("killer facing a living group loses") {
    const Problem p = make_problem(alive, Color::Black, Goal::KillAllCrucial);
    CHECK(terminal_status(p, alive) == TerminalStatus::AndWins);
  }
  SUBCASE("all crucial stones captured") {
    const Position start = from_rows({"O....", "X....", ".....", ".....", "....."}, Color::Black);
    Problem p = make_problem(start, Color::White, Goal::LiveAnyCrucial);
    CHECK(terminal_status(p, start) == TerminalStatus::Ongoing);
    // The same board after the capture.
    const Position dead = from_rows({".....", "X....", ".....", ".....", "....."}, Color::White);
    CHECK(terminal_status(p, dead) == TerminalStatus::AndWins);
    p.goal = Goal::KillAllCrucial;
    CHECK(terminal_status(p, dead) == TerminalStatus::OrWins);
  }
  SUBCASE("open fight") {
    const Position open = from_rows({".....", ".XO..", ".OX..", ".....", "....."});
    const Problem p = make_problem(open, Color::White, Goal::LiveAnyCrucial);
    CHECK(terminal_status(p, open) == TerminalStatus::Ongoing);
  }
}

TEST_CASE("four consecutive passes end the game for the OR player") {
  const Position open = from_rows({".....", ".XO..", ".OX..", ".....", "....."});
  const Problem p = make_problem(open, Color::White, Goal::LiveAnyCrucial);
  Position q = open;
  for (int i = 0; i < kPassesToEndGame; ++i) q = q.play(Move::pass());
  const Terminal t = classify_terminal(p, q);
  CHECK(t.status == TerminalStatus::AndWins);
  CHECK(t.by_passes);
}

TEST_CASE("goal ids distinguish goal and defender") {
  const Position pos = from_rows({"X....", ".....", "....O", ".....", "....."});
  const int a = make_problem(pos, Color::Black, Goal::LiveAnyCrucial).goal_id();
  const int b = make_problem(pos, Color::Black, Goal::KillAllCrucial).goal_id();
  const int c = make_problem(pos, Color::White, Goal::LiveAnyCrucial).goal_id();
  CHECK(a != b);
  CHECK(a != c);
  CHECK(b != c);
}
