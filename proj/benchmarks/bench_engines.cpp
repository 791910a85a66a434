// Throughput of the detection engines and their oracles on generated
// instances. Sizes are the benchmark argument; seeds are fixed so runs are
// comparable.

#include <benchmark/benchmark.h>

#include <algorithm>

#include "latdet/bit_matrix.hpp"
#include "latdet/engines.hpp"
#include "latdet/generators.hpp"
#include "latdet/oracles.hpp"
#include "latdet/problems.hpp"

namespace {

using namespace latdet;

constexpr std::uint64_t kSeed = 20261014;

BitMatrix path_matrix(std::size_t n) {
  BitMatrix m(n);
  for (std::size_t i = 0; i + 1 < n; ++i) m.set(i, i + 1);
  return m;
}

void BM_ClosureSquaringPath(benchmark::State& state) {
  const BitMatrix m = path_matrix(static_cast<std::size_t>(state.range(0)));
  std::size_t squarings = 0;
  for (auto _ : state) {
    auto r = reflexive_transitive_closure(m);
    squarings = r.squarings;
    benchmark::DoNotOptimize(r.reach);
  }
  state.counters["squarings"] = static_cast<double>(squarings);
}
BENCHMARK(BM_ClosureSquaringPath)->RangeMultiplier(4)->Range(16, 1024);

void BM_ClosureWorklistPath(benchmark::State& state) {
  const BitMatrix m = path_matrix(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(worklist_closure(m));
}
BENCHMARK(BM_ClosureWorklistPath)->RangeMultiplier(4)->Range(16, 256);

void BM_LlpStableMarriage(benchmark::State& state) {
  const MarriageInstance inst = random_marriage(static_cast<int>(state.range(0)), kSeed);
  std::size_t rounds = 0;
  for (auto _ : state) {
    auto a = stable_marriage_adapter(inst);
    auto out = detect_llp(*a, a->poset());
    rounds = out.rounds;
    benchmark::DoNotOptimize(out.state);
  }
  state.counters["rounds"] = static_cast<double>(rounds);
}
BENCHMARK(BM_LlpStableMarriage)->RangeMultiplier(2)->Range(8, 64);

void BM_GaleShapley(benchmark::State& state) {
  const MarriageInstance inst = random_marriage(static_cast<int>(state.range(0)), kSeed);
  for (auto _ : state) benchmark::DoNotOptimize(gale_shapley(inst));
}
BENCHMARK(BM_GaleShapley)->RangeMultiplier(2)->Range(8, 64);

void BM_LlpConjunctive(benchmark::State& state) {
  const Computation c = random_computation(static_cast<int>(state.range(0)), 32, 0.3, 0.5, kSeed);
  for (auto _ : state) {
    auto a = conjunctive_adapter(c);
    benchmark::DoNotOptimize(detect_llp(*a, a->poset()).state);
  }
}
BENCHMARK(BM_LlpConjunctive)->RangeMultiplier(2)->Range(4, 64);

void BM_RejectionConjunctive(benchmark::State& state) {
  const Computation c = random_computation(static_cast<int>(state.range(0)), 32, 0.3, 0.5, kSeed);
  for (auto _ : state) {
    auto a = conjunctive_adapter(c);
    benchmark::DoNotOptimize(detect_by_rejection(*a, a->poset()).state);
  }
}
BENCHMARK(BM_RejectionConjunctive)->RangeMultiplier(2)->Range(4, 64);

void BM_BoruvkaEngine(benchmark::State& state) {
  const WeightedGraph g = random_connected_graph(static_cast<int>(state.range(0)), 0.05, true, kSeed);
  std::size_t rounds = 0;
  for (auto _ : state) {
    auto a = boruvka_adapter(g);
    auto out = detect_independently_helpful(*a, a->poset());
    rounds = out.rounds;
    benchmark::DoNotOptimize(out.state);
  }
  state.counters["rounds"] = static_cast<double>(rounds);
}
BENCHMARK(BM_BoruvkaEngine)->RangeMultiplier(2)->Range(16, 256);

void BM_ParallelMstUnique(benchmark::State& state) {
  WeightedGraph g = random_connected_graph(static_cast<int>(state.range(0)), 0.05, true, kSeed);
  std::sort(g.edges.begin(), g.edges.end(),
            [](const WeightedEdge& a, const WeightedEdge& b) { return a.weight < b.weight; });
  for (auto _ : state) benchmark::DoNotOptimize(detect_parallel_mst_unique(g.edges, g.vertex_count).selected);
}
BENCHMARK(BM_ParallelMstUnique)->RangeMultiplier(2)->Range(16, 256);

void BM_Kruskal(benchmark::State& state) {
  const WeightedGraph g = random_connected_graph(static_cast<int>(state.range(0)), 0.05, true, kSeed);
  for (auto _ : state) benchmark::DoNotOptimize(kruskal_mst(g).weight);
}
BENCHMARK(BM_Kruskal)->RangeMultiplier(2)->Range(16, 256);

void BM_HelpfulMatching(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const BipartiteInstance inst = random_bipartite(n, n, 0.1, kSeed);
  for (auto _ : state) {
    auto a = matching_adapter(inst);
    benchmark::DoNotOptimize(detect_helpful(*a, a->poset()).state);
  }
}
BENCHMARK(BM_HelpfulMatching)->RangeMultiplier(2)->Range(8, 64);

}  // namespace

BENCHMARK_MAIN();
