#include <benchmark/benchmark.h>

#include "uacg/constructions.hpp"
#include "uacg/graph.hpp"
#include "uacg/oracle.hpp"
#include "uacg/search.hpp"
#include "uacg/verify.hpp"

namespace {

using namespace uacg;

void BM_BuildGraph(benchmark::State& state) {
  const auto ring = make_ring_zn(static_cast<std::uint64_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(build_graph(ring));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_BuildGraph)->Arg(105)->Arg(315)->Arg(1001)->Arg(3465)->Complexity(benchmark::oNSquared);

void BM_CliqueExact(benchmark::State& state) {
  const auto g = build_graph(make_ring_zn(static_cast<std::uint64_t>(state.range(0)))).graph;
  for (auto _ : state) benchmark::DoNotOptimize(clique_number_exact(g));
}
BENCHMARK(BM_CliqueExact)->Arg(45)->Arg(105)->Arg(165);

void BM_ChromaticExact(benchmark::State& state) {
  const auto g = build_graph(make_ring_zn(static_cast<std::uint64_t>(state.range(0)))).graph;
  for (auto _ : state) benchmark::DoNotOptimize(chromatic_number_exact(g));
}
BENCHMARK(BM_ChromaticExact)->Arg(45)->Arg(75);

void BM_AchromaticExact(benchmark::State& state) {
  const auto g = build_graph(make_ring_zn(static_cast<std::uint64_t>(state.range(0)))).graph;
  for (auto _ : state) benchmark::DoNotOptimize(achromatic_number_exact(g));
}
BENCHMARK(BM_AchromaticExact)->Arg(15)->Arg(21)->Unit(benchmark::kMillisecond);

void BM_OptimalColoringAndClique(benchmark::State& state) {
  const auto ring = make_ring_zn(static_cast<std::uint64_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(theorem1_coloring(ring));
    benchmark::DoNotOptimize(theorem1_clique(ring));
  }
}
BENCHMARK(BM_OptimalColoringAndClique)->Arg(105)->Arg(1155);

void BM_AchromaticConstruction(benchmark::State& state) {
  const auto p = static_cast<std::uint32_t>(state.range(0));
  const auto q = static_cast<std::uint32_t>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(theorem2_coloring(p, q));
}
BENCHMARK(BM_AchromaticConstruction)->Args({5, 7})->Args({7, 11})->Args({11, 13});

void BM_VerifyComplete(benchmark::State& state) {
  const auto g = build_graph(make_ring_zn(143)).graph;
  const auto c = theorem2_coloring(11, 13);
  for (auto _ : state) benchmark::DoNotOptimize(is_complete(g, c));
}
BENCHMARK(BM_VerifyComplete);

void BM_SearchToTarget(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  const auto g = build_graph(make_ring_zn(n)).graph;
  SearchConfig cfg;
  cfg.target_k = static_cast<std::size_t>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(achromatic_search(g, cfg));
}
BENCHMARK(BM_SearchToTarget)->Args({35, 19})->Args({55, 30})->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
