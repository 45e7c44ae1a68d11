#include <random>

#include "doctest.h"
#include "rz/errors.hpp"
#include "rz/oracle.hpp"
#include "rz/search.hpp"
#include "../support/boards.hpp"

using namespace rz;
using rz::testing::at;
using rz::testing::from_rows;
using rz::testing::make_problem;

namespace {

Problem enclosed_kill() {
  const Position p = from_rows({"OOOOO", "O.X.O", "OOOOO", ".....", "....."}, Color::White);
  return make_problem(p, Color::Black, Goal::KillAllCrucial);
}

}  // namespace

TEST_CASE("enclosed kill by hand") {
  const OracleResult r = brute_force_solve(enclosed_kill());
  CHECK(r.winner == Color::White);
  CHECK(r.or_wins);
  CHECK_FALSE(r.principal_line.empty());
}

TEST_CASE("the defender to move in the same enclosure still dies") {
  Problem p = enclosed_kill();
  p.position = p.position.with_to_move(Color::Black);
  CHECK(brute_force_solve(p).winner == Color::White);
}

TEST_CASE("terminal root takes one node") {
  const Position pos = from_rows({".X.XO", "XXXXO", "OOOOO", ".....", "....."}, Color::White);
  const OracleResult r = brute_force_solve(make_problem(pos, Color::Black, Goal::LiveAnyCrucial));
  CHECK(r.winner == Color::Black);
  CHECK(r.nodes_visited == 1);
  CHECK(r.principal_line.empty());
}

TEST_CASE("restricting the oracle to the proven zone keeps the winner") {
  const Position pos = from_rows({"....X", "XXXXX", "OOOOO", "O.O.O", "OOOOO"}, Color::Black);
  const Problem p = make_problem(pos, Color::Black, Goal::LiveAnyCrucial);
  const Solution s = solve(p, SolverConfig{});
  REQUIRE(s.solved());
  CHECK(brute_force_solve(p, s.zone).winner == *s.winner);
  CHECK(brute_force_solve(p).winner == *s.winner);
}

TEST_CASE("node budget") { CHECK_THROWS_AS(brute_force_solve(enclosed_kill(), Geometry::get(5).all(), 3), ResourceExceeded); }

TEST_CASE("perturbations stay outside the zone") {
  const Position pos = from_rows({"....X", "XXXXX", "OOOOO", ".....", "....."}, Color::Black);
  Zone zone;
  for (int i = 0; i < 10; ++i) zone.set(i);
  Zone protect;
  protect.set(at(pos, 0, 2));
  std::mt19937_64 rng(5);
  CHECK(perturb_outside(pos, zone, rng, 0).same_state(pos));
  for (int t = 0; t < 50; ++t) {
    const Position q = perturb_outside(pos, zone, rng, 3, protect);
    for (int i = 0; i < pos.area(); ++i)
      if (zone.test(i) || protect.test(i)) CHECK(q.at(i) == pos.at(i));
    for (const Block& b : q.blocks()) CHECK_FALSE(b.liberties.empty());
    CHECK(q.to_move() == pos.to_move());
  }
  CHECK_THROWS_AS(perturb_outside(pos, pos.geometry().all(), rng, 1), NoLegalPerturbation);
  CHECK_THROWS(perturb_outside(pos, zone, rng, -1));
}

TEST_CASE("perturbed re-solves keep the winner") {
  const Position pos = from_rows({"....X", "XXXXX", "OOOOO", "O.O.O", "OOOOO"}, Color::Black);
  const Problem p = make_problem(pos, Color::Black, Goal::LiveAnyCrucial);
  const Solution s = solve(p, SolverConfig{});
  REQUIRE(s.solved());
  std::mt19937_64 rng(11);
  int tried = 0;
  for (int t = 0; t < 60; ++t) {
    Problem q = p;
    try {
      q.position = perturb_outside(pos, s.zone, rng, 1 + t % 3, p.crucial);
    } catch (const NoLegalPerturbation&) {
      continue;
    }
    ++tried;
    CHECK(brute_force_solve(q).winner == *s.winner);
  }
  CHECK(tried > 0);
}
