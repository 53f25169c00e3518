#include <benchmark/benchmark.h>

#include "tightgraphs/designs.hpp"
#include "tightgraphs/drg.hpp"
#include "tightgraphs/graph.hpp"
#include "tightgraphs/mu_structure.hpp"
#include "tightgraphs/named_graphs.hpp"
#include "tightgraphs/screener.hpp"
#include "tightgraphs/srg.hpp"

using namespace tightgraphs;

static void BM_AllPairsDistances(benchmark::State& state) {
  Graph g = halved_cube(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(all_pairs_distances(g));
}
BENCHMARK(BM_AllPairsDistances)->Arg(6)->Arg(8)->Arg(10);

static void BM_DistanceRegularityCheck(benchmark::State& state) {
  Graph g = johnson(static_cast<int>(state.range(0)), static_cast<int>(state.range(0)) / 2);
  for (auto _ : state) benchmark::DoNotOptimize(is_distance_regular(g));
}
BENCHMARK(BM_DistanceRegularityCheck)->Arg(6)->Arg(8)->Arg(10);

static void BM_MaximalCliques(benchmark::State& state) {
  Graph g = block_graph_of_oa(build_orthogonal_array(2, static_cast<int>(state.range(0)))).graph;
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_maximal_cliques(g));
}
BENCHMARK(BM_MaximalCliques)->Arg(5)->Arg(7);

static void BM_SrgCheck(benchmark::State& state) {
  Graph g = block_graph_of_steiner(build_pair_design(static_cast<int>(state.range(0)))).graph;
  for (auto _ : state) benchmark::DoNotOptimize(srg_params_from_graph(g));
}
BENCHMARK(BM_SrgCheck)->Arg(8)->Arg(12);

static void BM_MuCensus(benchmark::State& state) {
  Graph g = halved_cube(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(mu_census(g));
}
BENCHMARK(BM_MuCensus)->Arg(6)->Arg(8);

static void BM_GammaNumber(benchmark::State& state) {
  Graph g = halved_cube(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(gamma_number(g));
}
BENCHMARK(BM_GammaNumber)->Arg(6)->Arg(8);

static void BM_TaylorDouble(benchmark::State& state) {
  Graph base = kneser2(6);
  for (auto _ : state) benchmark::DoNotOptimize(taylor_double(base));
}
BENCHMARK(BM_TaylorDouble);

// Exact bignum path: eigenvalues and multiplicities of the 1134-vertex set.
static void BM_SpectrumFromArray(benchmark::State& state) {
  auto arr = IntersectionArray::parse("{117,80,24,1;1,12,80,117}");
  for (auto _ : state) benchmark::DoNotOptimize(spectrum_from_array(arr));
}
BENCHMARK(BM_SpectrumFromArray);

static void BM_KreinParameters(benchmark::State& state) {
  auto arr = IntersectionArray::parse("{117,80,24,1;1,12,80,117}");
  auto spec = spectrum_from_array(arr);
  for (auto _ : state) benchmark::DoNotOptimize(krein_parameters(arr, spec));
}
BENCHMARK(BM_KreinParameters);

static void BM_ClassicalScreenSweep(benchmark::State& state) {
  for (auto _ : state) {
    int excluded = 0;
    for (int d = 3; d <= 8; ++d)
      for (long long b = 2; b <= 5; ++b)
        for (long long alpha = 1; alpha <= 10; ++alpha) {
          ClassicalParams p{d, b, Rat(alpha),
                            Rat(1) + Rat(alpha) * Rat(gaussian_bracket(d - 1, b))};
          excluded += screen_tight_classical(p).status == Verdict::Status::Excluded;
        }
    benchmark::DoNotOptimize(excluded);
  }
}
BENCHMARK(BM_ClassicalScreenSweep);

BENCHMARK_MAIN();
