#include <cmath>
#include <filesystem>

#include "doctest.h"
#include "rz/bench.hpp"
#include "rz/errors.hpp"
#include "../support/toy_suite.hpp"

using namespace rz;

TEST_CASE("per-problem seeds") {
  CHECK(derive_seed(1, "a.sgf") == derive_seed(1, "a.sgf"));
  CHECK(derive_seed(1, "a.sgf") != derive_seed(1, "b.sgf"));
  CHECK(derive_seed(1, "a.sgf") != derive_seed(2, "a.sgf"));
}

TEST_CASE("empty suite") {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "rz_empty_suite";
  fs::remove_all(dir);
  fs::create_directories(dir);
  CHECK_THROWS_AS(list_suite(dir.string()), EmptySuite);
  CHECK_THROWS_AS(list_suite((dir / "missing").string()), EmptySuite);
}

TEST_CASE("toy suite report") {
  const std::string dir = rz::testing::write_toy_suite("rz_toy_suite_bench");
  BenchConfig cfg;
  cfg.max_nodes = 20'000;
  const BenchReport par = run_suite(dir, cfg);
  REQUIRE(par.rows.size() == 5);
  CHECK(par.rows[0].file == "a_straight3_live.sgf");
  CHECK(par.summary.problems == 5);
  CHECK(par.summary.disagreements == 0);
  CHECK(par.summary.common == 5);

  const std::string lines = par.jsonl();
  CHECK(std::count(lines.begin(), lines.end(), '\n') == 6);
  CHECK(lines.find("\"type\":\"summary\"") != std::string::npos);
  CHECK(par.table().find("TOTAL") != std::string::npos);

  SUBCASE("parallel and serial runs agree byte for byte") { CHECK(run_suite_serial(dir, cfg).jsonl() == lines); }
  SUBCASE("repeat runs agree byte for byte") { CHECK(run_suite(dir, cfg).jsonl() == lines); }
  SUBCASE("wall times stay zero without timing") {
    for (const auto& r : par.rows) CHECK(r.wall_ms_tt + r.wall_ms_pt == 0);
  }
}

TEST_CASE("summary rules") {
  BenchRow both;
  both.nodes_tt = 400;
  both.nodes_pt = 100;
  both.winner_tt = both.winner_pt = Color::White;
  BenchRow worse;
  worse.nodes_tt = 100;
  worse.nodes_pt = 200;
  worse.winner_tt = worse.winner_pt = Color::Black;
  BenchRow pt_only;
  pt_only.nodes_tt = 1000;
  pt_only.nodes_pt = 10;
  pt_only.winner_pt = Color::Black;
  const BenchSummary s = summarize({both, worse, pt_only});
  CHECK(s.problems == 3);
  CHECK(s.solved_tt == 2);
  CHECK(s.solved_pt == 3);
  CHECK(s.common == 2);
  CHECK(s.pt_not_worse == 1);
  CHECK(s.geo_mean_speedup == doctest::Approx(std::sqrt(4.0 * 0.5)));
  CHECK(pt_only.speedup() == 0.0);
  CHECK(summarize({}).geo_mean_speedup == 0.0);
}

TEST_CASE("solve records carry the documented fields") {
  const std::string dir = rz::testing::write_toy_suite("rz_toy_suite_record");
  const Problem p = load_sgf_file(list_suite(dir).front());
  SolverConfig c;
  const Solution s = solve(p, c);
  const auto j = solve_record(p, c, s);
  for (const char* k : {"problem", "backend", "winner", "nodes", "table_hits", "pattern_reuses", "zone_size", "wall_ms",
                        "seed"})
    CHECK(j.contains(k));
  CHECK(j["backend"] == "pt");
}
