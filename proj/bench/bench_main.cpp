// Micro and suite benchmarks: OpenMP suite runner against its serial
// reference, and table lookups for both backends.

#include <benchmark/benchmark.h>

#include <random>

#include "rz/bench.hpp"
#include "rz/tables.hpp"
#include "../tests/support/toy_suite.hpp"

namespace {

const std::string& toy_dir() {
  static const std::string dir = rz::testing::write_toy_suite("rz_toy_suite_benchmark");
  return dir;
}

void BM_SuiteParallel(benchmark::State& state) {
  rz::BenchConfig cfg;
  cfg.max_nodes = 20'000;
  for (auto _ : state) benchmark::DoNotOptimize(rz::run_suite(toy_dir(), cfg));
}
BENCHMARK(BM_SuiteParallel)->Unit(benchmark::kMillisecond);

void BM_SuiteSerial(benchmark::State& state) {
  rz::BenchConfig cfg;
  cfg.max_nodes = 20'000;
  for (auto _ : state) benchmark::DoNotOptimize(rz::run_suite_serial(toy_dir(), cfg));
}
BENCHMARK(BM_SuiteSerial)->Unit(benchmark::kMillisecond);

std::vector<rz::Position> random_positions(int n, int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<rz::Position> out;
  while (static_cast<int>(out.size()) < count) {
    std::vector<rz::Color> g(static_cast<std::size_t>(n * n));
    for (auto& c : g) c = static_cast<rz::Color>(rng() % 4 == 0 ? 1 + rng() % 2 : 0);
    try {
      out.push_back(rz::Position::setup(n, g, rz::Color::Black));
    } catch (const rz::InvariantViolation&) {
    }
  }
  return out;
}

void BM_TTLookup(benchmark::State& state) {
  const auto stored = random_positions(9, static_cast<int>(state.range(0)), 1);
  const auto queries = random_positions(9, 256, 2);
  rz::TranspositionTable tt;
  for (const auto& p : stored) {
    rz::TTEntry e = rz::TranspositionTable::make_entry(p, 0);
    e.winner = rz::Color::White;
    tt.store(e);
  }
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(tt.lookup(queries[i++ % queries.size()], 0));
}
BENCHMARK(BM_TTLookup)->Arg(1000)->Arg(10000);

void BM_PTLookup(benchmark::State& state) {
  const auto stored = random_positions(9, static_cast<int>(state.range(0)), 1);
  const auto queries = random_positions(9, 256, 2);
  std::mt19937_64 rng(3);
  rz::PatternTable pt(9);
  for (const auto& p : stored) {
    rz::Zone z;
    for (int k = 0; k < 6; ++k) z.set(static_cast<int>(rng() % 81));
    pt.insert(rz::make_pattern(p, z, rz::Color::White, 0, std::nullopt, 1));
  }
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(pt.lookup(queries[i++ % queries.size()], 0));
}
BENCHMARK(BM_PTLookup)->Arg(1000)->Arg(10000);

void BM_PTLookupLinear(benchmark::State& state) {
  const auto stored = random_positions(9, static_cast<int>(state.range(0)), 1);
  const auto queries = random_positions(9, 256, 2);
  std::mt19937_64 rng(3);
  rz::PatternTable pt(9);
  for (const auto& p : stored) {
    rz::Zone z;
    for (int k = 0; k < 6; ++k) z.set(static_cast<int>(rng() % 81));
    pt.insert(rz::make_pattern(p, z, rz::Color::White, 0, std::nullopt, 1));
  }
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(pt.lookup_linear(queries[i++ % queries.size()], 0));
}
BENCHMARK(BM_PTLookupLinear)->Arg(1000)->Arg(10000);

}  // namespace

BENCHMARK_MAIN();
