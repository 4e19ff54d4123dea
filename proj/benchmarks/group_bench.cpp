#include <benchmark/benchmark.h>

#include "orbitfold/group.hpp"
#include "orbitfold/iog.hpp"
#include "orbitfold/mathieu.hpp"
#include "orbitfold/stabilizer_chain.hpp"

using namespace orbitfold;

namespace {

const PermutationGroup& m24() {
  static const PermutationGroup g = load_validated_group(Ambient::M24);
  return g;
}

void BM_M24StabilizerChain(benchmark::State& state) {
  const auto& g = m24();
  for (auto _ : state) {
    auto chain = StabilizerChain::build(g.degree(), g.generators());
    benchmark::DoNotOptimize(chain.order());
  }
}
BENCHMARK(BM_M24StabilizerChain)->Unit(benchmark::kMillisecond);

void BM_OctadSetwiseStabilizer(benchmark::State& state) {
  const auto& g = m24();
  const PointSet octad = derive_block(g, PointSet(24, {0, 1, 2, 3, 4}));
  for (auto _ : state) {
    auto h = setwise_stabilizer(g, octad);
    benchmark::DoNotOptimize(h.order());
  }
}
BENCHMARK(BM_OctadSetwiseStabilizer)->Unit(benchmark::kMillisecond);

void BM_OctadEnumeration(benchmark::State& state) {
  const auto& g = m24();
  const PointSet octad = derive_block(g, PointSet(24, {0, 1, 2, 3, 4}));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_blocks(g, octad).size());
}
BENCHMARK(BM_OctadEnumeration)->Unit(benchmark::kMillisecond);

void BM_KIntersectionGraph(benchmark::State& state) {
  const auto k = static_cast<std::size_t>(state.range(0));
  const auto& g = m24();
  const PermutationGroup h = pointwise_stabilizer(g, PointSet(24, {0}));
  for (auto _ : state) benchmark::DoNotOptimize(k_intersection_graph(g, h, k).partition.block_count());
}
BENCHMARK(BM_KIntersectionGraph)->Arg(1)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

}  // namespace
