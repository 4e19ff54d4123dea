#include <benchmark/benchmark.h>

#include <random>

#include "orbitfold/simple_graph.hpp"
#include "orbitfold/spectral.hpp"

using namespace orbitfold;

namespace {

void BM_CharPolyRandomGraph(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(7);
  SimpleGraph g(n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      if (rng() & 1) g.add_edge(a, b);
    }
  }
  for (auto _ : state) benchmark::DoNotOptimize(char_poly_exact(g));
}
BENCHMARK(BM_CharPolyRandomGraph)->Arg(12)->Arg(24)->Arg(48)->Arg(64);

void BM_DsScan(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(ds_scan(n).total_counterexamples());
}
BENCHMARK(BM_DsScan)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
