#include "rz/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "rz/errors.hpp"

namespace rz {

namespace {

std::string winner_text(const std::optional<Color>& w) { return w ? color_name(*w) : "unsolved"; }

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

}  // namespace

nlohmann::json solve_record(const Problem& problem, const SolverConfig& config, const Solution& s) {
  nlohmann::json j;
  j["problem"] = problem.label;
  j["goal"] = goal_name(problem.goal);
  j["backend"] = backend_name(config.backend);
  j["seed"] = config.seed;
  j["max_nodes"] = config.max_nodes;
  j["solved"] = s.solved();
  j["winner"] = winner_text(s.winner);
  j["nodes"] = s.stats.nodes;
  j["iterations"] = s.stats.iterations;
  j["table_hits"] = s.stats.table_hits;
  j["pattern_reuses"] = s.stats.pattern_reuses;
  j["max_depth"] = s.stats.max_depth;
  j["proven_depth"] = s.proven_depth;
  j["zone_size"] = s.solved() ? s.zone.count() : 0;
  j["wall_ms"] = s.stats.wall_ms;
  return j;
}

double BenchRow::speedup() const {
  if (!both_solved() || nodes_pt == 0) return 0.0;
  return static_cast<double>(nodes_tt) / static_cast<double>(nodes_pt);
}

std::uint64_t derive_seed(std::uint64_t master, const std::string& name) {
  std::uint64_t h = 0xCBF29CE484222325ULL;  // FNV-1a
  for (unsigned char c : name) {
    h ^= c;
    h *= 0x100000001B3ULL;
  }
  return splitmix64(master ^ h);
}

std::vector<std::string> list_suite(const std::string& dir) {
  namespace fs = std::filesystem;
  std::vector<std::string> out;
  if (fs::is_directory(dir)) {
    for (const auto& e : fs::directory_iterator(dir))
      if (e.is_regular_file() && e.path().extension() == ".sgf") out.push_back(e.path().string());
  }
  std::sort(out.begin(), out.end());
  if (out.empty()) throw EmptySuite("no .sgf problems in " + dir);
  return out;
}

BenchRow bench_problem(const Problem& problem, const std::string& file, const BenchConfig& config) {
  BenchRow row;
  row.label = problem.label;
  row.file = std::filesystem::path(file).filename().string();
  row.seed = derive_seed(config.seed, row.file);
  SolverConfig sc;
  sc.max_nodes = config.max_nodes;
  sc.seed = row.seed;
  for (Backend b : {Backend::TT, Backend::PT}) {
    sc.backend = b;
    const auto start = std::chrono::steady_clock::now();
    const Solution s = solve(problem, sc);
    const auto ms = static_cast<std::uint64_t>(
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count());
    if (b == Backend::TT) {
      row.nodes_tt = s.stats.nodes;
      row.winner_tt = s.winner;
      row.hits_tt = s.stats.table_hits;
      row.wall_ms_tt = config.timing ? ms : 0;
    } else {
      row.nodes_pt = s.stats.nodes;
      row.winner_pt = s.winner;
      row.hits_pt = s.stats.table_hits;
      row.reuses_pt = s.stats.pattern_reuses;
      row.wall_ms_pt = config.timing ? ms : 0;
    }
  }
  return row;
}

BenchSummary summarize(const std::vector<BenchRow>& rows) {
  BenchSummary s;
  s.problems = rows.size();
  double log_sum = 0.0;
  for (const BenchRow& r : rows) {
    s.total_nodes_tt += r.nodes_tt;
    s.total_nodes_pt += r.nodes_pt;
    if (r.winner_tt) ++s.solved_tt;
    if (r.winner_pt) ++s.solved_pt;
    if (!r.both_solved()) continue;
    ++s.common;
    if (*r.winner_tt != *r.winner_pt) ++s.disagreements;
    if (r.nodes_pt <= r.nodes_tt) ++s.pt_not_worse;
    log_sum += std::log(r.speedup());
  }
  if (s.common > 0) s.geo_mean_speedup = std::exp(log_sum / static_cast<double>(s.common));
  return s;
}

namespace {

BenchReport run(const std::string& dir, const BenchConfig& config, bool parallel) {
  const auto files = list_suite(dir);
  std::vector<Problem> problems;
  problems.reserve(files.size());
  for (const auto& f : files) problems.push_back(load_sgf_file(f));
  BenchReport report;
  report.rows.resize(files.size());
  const auto n = static_cast<std::int64_t>(files.size());
  if (parallel) {
#ifdef _OPENMP
    if (config.threads > 0) omp_set_num_threads(config.threads);
#endif
#pragma omp parallel for schedule(dynamic, 1)
    for (std::int64_t i = 0; i < n; ++i) report.rows[i] = bench_problem(problems[i], files[i], config);
  } else {
    for (std::int64_t i = 0; i < n; ++i) report.rows[i] = bench_problem(problems[i], files[i], config);
  }
  report.summary = summarize(report.rows);
  return report;
}

}  // namespace

BenchReport run_suite(const std::string& dir, const BenchConfig& config) { return run(dir, config, true); }
BenchReport run_suite_serial(const std::string& dir, const BenchConfig& config) { return run(dir, config, false); }

std::string BenchReport::table() const {
  std::ostringstream out;
  char buf[256];
  std::snprintf(buf, sizeof buf, "%-28s %10s %10s %-9s %-9s %9s\n", "problem", "nodes_tt", "nodes_pt", "tt", "pt",
                "speedup");
  out << buf;
  for (const BenchRow& r : rows) {
    const std::string sp = r.both_solved() ? ([&] {
      char s[32];
      std::snprintf(s, sizeof s, "%.2fx", r.speedup());
      return std::string(s);
    })()
                                           : std::string("-");
    std::snprintf(buf, sizeof buf, "%-28s %10llu %10llu %-9s %-9s %9s\n", r.label.substr(0, 28).c_str(),
                  static_cast<unsigned long long>(r.nodes_tt), static_cast<unsigned long long>(r.nodes_pt),
                  winner_text(r.winner_tt).c_str(), winner_text(r.winner_pt).c_str(), sp.c_str());
    out << buf;
  }
  const BenchSummary& s = summary;
  std::snprintf(buf, sizeof buf, "%-28s %10llu %10llu %-9zu %-9zu %8.2fx\n", "TOTAL / geo-mean",
                static_cast<unsigned long long>(s.total_nodes_tt), static_cast<unsigned long long>(s.total_nodes_pt),
                s.solved_tt, s.solved_pt, s.geo_mean_speedup);
  out << buf;
  out << "commonly solved: " << s.common << "/" << s.problems << ", pt <= tt on " << s.pt_not_worse
      << ", winner disagreements: " << s.disagreements << "\n";
  out << "reference context (trained network, different suite; not expected values):"
         " mean 4.74x, 184990 vs 90649 nodes (2.04x), 373086 vs 12566 nodes (29.69x)\n";
  return out.str();
}

std::string BenchReport::jsonl() const {
  std::ostringstream out;
  for (const BenchRow& r : rows) {
    nlohmann::json j;
    j["type"] = "problem";
    j["problem"] = r.label;
    j["file"] = r.file;
    j["seed"] = r.seed;
    j["nodes_tt"] = r.nodes_tt;
    j["nodes_pt"] = r.nodes_pt;
    j["winner_tt"] = winner_text(r.winner_tt);
    j["winner_pt"] = winner_text(r.winner_pt);
    j["table_hits_tt"] = r.hits_tt;
    j["table_hits_pt"] = r.hits_pt;
    j["pattern_reuses_pt"] = r.reuses_pt;
    j["wall_ms_tt"] = r.wall_ms_tt;
    j["wall_ms_pt"] = r.wall_ms_pt;
    if (r.both_solved()) {
      j["speedup"] = r.speedup();
    } else {
      j["speedup"] = nullptr;
    }
    out << j.dump() << "\n";
  }
  const BenchSummary& s = summary;
  nlohmann::json j;
  j["type"] = "summary";
  j["problems"] = s.problems;
  j["solved_tt"] = s.solved_tt;
  j["solved_pt"] = s.solved_pt;
  j["common"] = s.common;
  j["pt_not_worse"] = s.pt_not_worse;
  j["disagreements"] = s.disagreements;
  j["total_nodes_tt"] = s.total_nodes_tt;
  j["total_nodes_pt"] = s.total_nodes_pt;
  j["geo_mean_speedup"] = s.geo_mean_speedup;
  out << j.dump() << "\n";
  return out.str();
}

}  // namespace rz
