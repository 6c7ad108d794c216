#include <benchmark/benchmark.h>

#include "lhg/families.hpp"
#include "lhg/solvers.hpp"
#include "lhg/verifier.hpp"

using namespace lhg;

static void BM_MisGp(benchmark::State& state) {
  Graph g = gen_petersen(int(state.range(0)), 2);
  for (auto _ : state) {
    auto res = max_independent_set(g);
    benchmark::DoNotOptimize(res.alpha);
  }
}
BENCHMARK(BM_MisGp)->Arg(11)->Arg(21)->Arg(31)->Arg(40);

static void BM_DecisionDelete(benchmark::State& state) {
  Graph g = build_graph(parse_family_spec("cgp:2,cyclic:35,[5,7],[15,0]"));
  int alpha = max_independent_set(g).alpha;
  uint64_t rank = 0;
  const uint64_t total = binomial(g.size(), 3);
  for (auto _ : state) {
    auto combo = unrank_combination(g.size(), 3, rank);
    rank = (rank + 7919) % total;
    VertexSet del(g.order());
    for (int e : combo) {
      auto [u, v] = g.edge(e);
      del.set(u);
      del.set(v);
    }
    auto res = has_independent_set(g, alpha, del);
    benchmark::DoNotOptimize(res.has_value());
  }
}
BENCHMARK(BM_DecisionDelete);

static void BM_TaitColoring(benchmark::State& state) {
  Graph g = gen_petersen(int(state.range(0)), 2);
  for (auto _ : state) {
    auto col = edge_colorable(g, 3);
    benchmark::DoNotOptimize(col.has_value());
  }
}
BENCHMARK(BM_TaitColoring)->Arg(11)->Arg(26)->Arg(40);

static void BM_Hamiltonian(benchmark::State& state) {
  Graph g = gen_petersen(int(state.range(0)), 2);
  for (auto _ : state) {
    auto res = hamiltonian(g);
    benchmark::DoNotOptimize(res.status);
  }
}
BENCHMARK(BM_Hamiltonian)->Arg(16)->Arg(26)->Arg(36);

BENCHMARK_MAIN();
