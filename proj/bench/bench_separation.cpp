// Serial versus OpenMP separation kernels.

#include "stpath/gen.hpp"
#include "stpath/separation.hpp"

#include <benchmark/benchmark.h>

#include <map>
#include <random>

namespace {

struct Fixture {
  stpath::Graph graph;
  stpath::FractionalSolution x;
};

// Dense-ish graph with random x in {1/4, ..., 2}.
Fixture make_fixture(int n) {
  const int m = n * (n - 1) / 3;
  stpath::Graph g = stpath::gen_random(n, std::max(m, n - 1), 1000 + static_cast<std::uint64_t>(n));
  std::mt19937_64 rng(static_cast<std::uint64_t>(n));
  std::vector<stpath::Rational> v(static_cast<std::size_t>(g.m()));
  for (auto& r : v) r = stpath::Rational(1 + static_cast<int>(rng() % 8), 4);
  return {std::move(g), stpath::FractionalSolution(std::move(v))};
}

// At the LP optimum no partition row is violated, so pruning cannot stop the
// search early; this is the expensive case inside the cutting-plane loop.
const Fixture& optimum_fixture(int n) {
  static std::map<int, Fixture> cache;
  auto it = cache.find(n);
  if (it == cache.end()) {
    stpath::Graph g = stpath::gen_random(n, std::max(n * (n - 1) / 3, n - 1), 2000 + static_cast<std::uint64_t>(n));
    auto x = stpath::solve_relaxation(g).x;
    it = cache.emplace(n, Fixture{std::move(g), std::move(x)}).first;
  }
  return it->second;
}

void BM_PartitionsSerial(benchmark::State& state) {
  const Fixture& f = optimum_fixture(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(stpath::separate_partitions_serial(f.graph, f.x));
}

void BM_PartitionsParallel(benchmark::State& state) {
  const Fixture& f = optimum_fixture(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(stpath::separate_partitions(f.graph, f.x));
}

void BM_EvenCutsSerial(benchmark::State& state) {
  const Fixture f = make_fixture(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(stpath::separate_even_cuts_serial(f.graph, f.x));
}

void BM_EvenCutsParallel(benchmark::State& state) {
  const Fixture f = make_fixture(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(stpath::separate_even_cuts(f.graph, f.x));
}

void BM_RelaxationSerial(benchmark::State& state) {
  const Fixture f = make_fixture(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(stpath::solve_relaxation(f.graph, {false, stpath::kPartitionSeparationLimit}));
}

void BM_RelaxationParallel(benchmark::State& state) {
  const Fixture f = make_fixture(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(stpath::solve_relaxation(f.graph, {true, stpath::kPartitionSeparationLimit}));
}

}  // namespace

BENCHMARK(BM_PartitionsSerial)->DenseRange(8, 12, 2)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_PartitionsParallel)->DenseRange(8, 12, 2)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_EvenCutsSerial)->DenseRange(8, 32, 8)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_EvenCutsParallel)->DenseRange(8, 32, 8)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_RelaxationSerial)->DenseRange(6, 10, 2)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_RelaxationParallel)->DenseRange(6, 10, 2)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
