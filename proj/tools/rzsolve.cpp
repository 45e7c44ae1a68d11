// rzsolve: solve one life-and-death problem, benchmark the two table
// backends over a suite, or draw a board.
//
// Exit codes: 0 solved, 2 unsolved within budget, 1 error.

#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "rz/bench.hpp"
#include "rz/problem.hpp"
#include "rz/render.hpp"
#include "rz/search.hpp"

namespace {

struct SolveArgs {
  std::string input;
  std::string backend = "pt";
  std::uint64_t max_nodes = 500'000;
  std::uint64_t time_limit_ms = 0;
  std::uint64_t seed = 1;
  std::string out;
  std::string stats;
  std::string goal;
  bool ascii = false;
};

struct BenchArgs {
  std::string dir;
  std::uint64_t max_nodes = 500'000;
  std::uint64_t seed = 1;
  std::string report;
  bool timing = false;
  bool serial = false;
  int threads = 0;
};

struct RenderArgs {
  std::string input;
  bool zone = false;
  std::uint64_t max_nodes = 100'000;
};

std::optional<rz::Goal> goal_arg(const std::string& g) {
  if (g.empty()) return std::nullopt;
  const auto parsed = rz::parse_goal(g);
  if (!parsed) throw std::runtime_error("unknown goal '" + g + "' (expected live or kill)");
  return parsed;
}

int run_solve(const SolveArgs& a) {
  const rz::Problem problem = rz::load_sgf_file(a.input, goal_arg(a.goal));
  rz::SolverConfig config;
  const auto backend = rz::parse_backend(a.backend);
  if (!backend) throw std::runtime_error("unknown backend '" + a.backend + "'");
  config.backend = *backend;
  config.max_nodes = a.max_nodes;
  config.time_limit_ms = a.time_limit_ms;
  config.seed = a.seed;

  const rz::Solution s = rz::solve(problem, config);
  std::cout << "problem: " << problem.label << "\n";
  std::cout << "goal: " << rz::goal_name(problem.goal) << " (" << rz::color_name(problem.or_color()) << " to achieve)\n";
  std::cout << "winner: " << (s.winner ? rz::color_name(*s.winner) : "unsolved") << "\n";
  std::cout << "nodes: " << s.stats.nodes << "\n";
  if (s.solved()) {
    std::cout << "zone size: " << s.zone.count() << "\n";
    if (s.winning_move)
      std::cout << "winning move: "
                << (s.winning_move->is_pass() ? std::string("pass")
                                              : rz::point_name(problem.position.geometry(), s.winning_move->index()))
                << "\n";
  }
  if (a.ascii) std::cout << rz::render_ascii(problem.position, s.solved() ? std::optional(s.zone) : std::nullopt);

  if (!a.stats.empty()) {
    std::ofstream st(a.stats, std::ios::app);
    if (!st) throw std::runtime_error("cannot write " + a.stats);
    st << rz::solve_record(problem, config, s).dump() << "\n";
  }
  if (!a.out.empty() && s.solved()) {
    const std::string sgf = rz::export_solution_sgf(s, problem);
    std::ofstream out(a.out, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + a.out);
    out << sgf;
  }
  return s.solved() ? 0 : 2;
}

int run_bench(const BenchArgs& a) {
  rz::BenchConfig config;
  config.max_nodes = a.max_nodes;
  config.seed = a.seed;
  config.timing = a.timing;
  config.threads = a.threads;
  const rz::BenchReport report = a.serial ? rz::run_suite_serial(a.dir, config) : rz::run_suite(a.dir, config);
  std::cout << report.table();
  if (!a.report.empty()) {
    std::ofstream out(a.report, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + a.report);
    out << report.jsonl();
  }
  return 0;
}

int run_render(const RenderArgs& a) {
  const rz::Problem problem = rz::load_sgf_file(a.input);
  std::optional<rz::PointSet> zone;
  if (a.zone) {
    rz::SolverConfig config;
    config.max_nodes = a.max_nodes;
    const rz::Solution s = rz::solve(problem, config);
    if (s.solved()) zone = s.zone;
  }
  std::cout << rz::render_ascii(problem.position, zone);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Relevance-zone life-and-death solver"};
  app.require_subcommand(1);

  SolveArgs sa;
  auto* solve = app.add_subcommand("solve", "Solve one SGF problem");
  solve->add_option("input", sa.input, "Problem SGF")->required();
  solve->add_option("--backend", sa.backend, "Memoization backend: tt or pt")->check(CLI::IsMember({"tt", "pt"}));
  solve->add_option("--max-nodes", sa.max_nodes, "Expansion budget");
  solve->add_option("--time-limit-ms", sa.time_limit_ms, "Wall-clock budget (0 = none)");
  solve->add_option("--seed", sa.seed, "Search seed");
  solve->add_option("--out", sa.out, "Write the verified solution tree as SGF");
  solve->add_option("--stats", sa.stats, "Append a JSON stats record");
  solve->add_option("--goal", sa.goal, "Override the goal: live or kill");
  solve->add_flag("--ascii", sa.ascii, "Draw the board with the proven zone");

  BenchArgs ba;
  auto* bench = app.add_subcommand("bench", "Compare tt and pt over a directory of problems");
  bench->add_option("dir", ba.dir, "Suite directory")->required();
  bench->add_option("--max-nodes", ba.max_nodes, "Expansion budget per solve");
  bench->add_option("--seed", ba.seed, "Master seed");
  bench->add_option("--report", ba.report, "Write per-problem JSON lines here");
  bench->add_option("--threads", ba.threads, "Worker threads (0 = default)");
  bench->add_flag("--timing", ba.timing, "Record wall times (reports stop being byte-identical)");
  bench->add_flag("--serial", ba.serial, "Solve problems one at a time");
  bench->add_flag("--both-backends", "Accepted for compatibility; both backends always run");

  RenderArgs ra;
  auto* render = app.add_subcommand("render", "Draw a problem as text");
  render->add_option("input", ra.input, "Problem SGF")->required();
  render->add_flag("--zone", ra.zone, "Solve first and overlay the proven zone");
  render->add_option("--max-nodes", ra.max_nodes, "Expansion budget for --zone");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*solve) return run_solve(sa);
    if (*bench) return run_bench(ba);
    if (*render) return run_render(ra);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
