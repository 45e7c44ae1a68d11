#pragma once

// Suite runner comparing the two memoization backends under equal budgets.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "rz/problem.hpp"
#include "rz/search.hpp"

namespace rz {

// One line-delimited JSON record for a single solve.
nlohmann::json solve_record(const Problem& problem, const SolverConfig& config, const Solution& solution);

struct BenchConfig {
  std::uint64_t max_nodes = 500'000;
  std::uint64_t seed = 1;
  bool timing = false;  // record wall time (breaks byte-identical reports)
  int threads = 0;      // 0 = OpenMP default
};

struct BenchRow {
  std::string label;
  std::string file;
  std::uint64_t seed = 0;
  std::uint64_t nodes_tt = 0;
  std::uint64_t nodes_pt = 0;
  std::optional<Color> winner_tt;
  std::optional<Color> winner_pt;
  std::uint64_t hits_tt = 0;
  std::uint64_t hits_pt = 0;
  std::uint64_t reuses_pt = 0;
  std::uint64_t wall_ms_tt = 0;
  std::uint64_t wall_ms_pt = 0;

  bool both_solved() const { return winner_tt && winner_pt; }
  // node_tt / node_pt; meaningful only when both solved.
  double speedup() const;
};

struct BenchSummary {
  std::size_t problems = 0;
  std::size_t solved_tt = 0;
  std::size_t solved_pt = 0;
  std::size_t common = 0;
  std::size_t pt_not_worse = 0;  // common problems with nodes_pt <= nodes_tt
  std::size_t disagreements = 0;
  std::uint64_t total_nodes_tt = 0;
  std::uint64_t total_nodes_pt = 0;
  double geo_mean_speedup = 0.0;  // over common problems; 0 when none
};

struct BenchReport {
  std::vector<BenchRow> rows;  // sorted by file name
  BenchSummary summary;

  std::string table() const;
  std::string jsonl() const;
};

// Per-problem seed: deterministic function of the master seed and file name.
std::uint64_t derive_seed(std::uint64_t master, const std::string& name);

// Sorted *.sgf paths in dir. Throws EmptySuite when there are none.
std::vector<std::string> list_suite(const std::string& dir);

BenchRow bench_problem(const Problem& problem, const std::string& file, const BenchConfig& config);
BenchSummary summarize(const std::vector<BenchRow>& rows);

// OpenMP-parallel over problems.
BenchReport run_suite(const std::string& dir, const BenchConfig& config);
// Same computation, one problem at a time; the parallel runner must match it.
BenchReport run_suite_serial(const std::string& dir, const BenchConfig& config);

}  // namespace rz
