#include <benchmark/benchmark.h>

#include <random>

#include "islide/generators.hpp"
#include "islide/graph_ops.hpp"
#include "islide/independence.hpp"
#include "islide/isomorphism.hpp"
#include "islide/reconfig.hpp"
#include "islide/search.hpp"
#include "islide/seeds.hpp"

using namespace islide;

namespace {

Graph random_graph(int n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  Graph g(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (coin(rng)) g.add_edge(u, v);
    }
  }
  return g;
}

void BM_MaximalIndependentSets(benchmark::State& state) {
  const Graph g = random_graph(static_cast<int>(state.range(0)), 0.3, 7);
  std::size_t count = 0;
  for (auto _ : state) {
    auto sets = maximal_independent_sets(g);
    count = sets.size();
    benchmark::DoNotOptimize(sets);
  }
  state.counters["sets"] = static_cast<double>(count);
}
BENCHMARK(BM_MaximalIndependentSets)->Arg(16)->Arg(24)->Arg(32)->Arg(40);

void BM_ISetSummary(benchmark::State& state) {
  const Graph g = random_graph(static_cast<int>(state.range(0)), 0.3, 11);
  for (auto _ : state) benchmark::DoNotOptimize(i_set_summary(g));
}
BENCHMARK(BM_ISetSummary)->Arg(16)->Arg(32)->Arg(48);

void BM_CanonicalFormRandom(benchmark::State& state) {
  const Graph g = random_graph(static_cast<int>(state.range(0)), 0.5, 3);
  for (auto _ : state) benchmark::DoNotOptimize(canonical_form(g));
}
BENCHMARK(BM_CanonicalFormRandom)->Arg(8)->Arg(16)->Arg(32)->Arg(64);

void BM_CanonicalFormSymmetric(benchmark::State& state) {
  const Graph g = state.range(0) == 0 ? hexagonal_prism_graph() : cube_graph();
  for (auto _ : state) benchmark::DoNotOptimize(canonical_form(g));
}
BENCHMARK(BM_CanonicalFormSymmetric)->Arg(0)->Arg(1);

void BM_VerifyThetaSeed(benchmark::State& state) {
  const int l = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(verify_theta_seed({4, 5, l}));
}
BENCHMARK(BM_VerifyThetaSeed)->Arg(6)->Arg(12)->Arg(18);

void BM_SearchKernel(benchmark::State& state) {
  SearchOptions opts;
  opts.max_n = static_cast<int>(state.range(0));
  opts.threads = 1;
  opts.all_witnesses = true;
  const Graph target = theta({2, 2, 4});
  for (auto _ : state) benchmark::DoNotOptimize(find_seed(target, opts));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(labeled_graph_count(opts.max_n)));
}
BENCHMARK(BM_SearchKernel)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
