#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "becurv/engine.hpp"
#include "becurv/numeric.hpp"
#include "becurv/operators.hpp"
#include "becurv/umbrella.hpp"

namespace {

becurv::WeightedGraph random_graph(int n, std::uint64_t seed) {
  std::mt19937_64 eng(seed);
  std::uniform_real_distribution<double> weight(0.1, 10.0);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::vector<becurv::Edge> edges;
  for (int v = 1; v < n; ++v)
    edges.push_back({static_cast<int>(eng() % v), v, weight(eng)});
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (!std::any_of(edges.begin(), edges.end(),
                       [&](const becurv::Edge& e) {
                         return (e.i == i && e.j == j) || (e.i == j && e.j == i);
                       }) &&
          coin(eng) < 0.25)
        edges.push_back({i, j, weight(eng)});
  return becurv::WeightedGraph(n, edges);
}

void BM_hub_curvature(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const becurv::WeightedGraph g = becurv::make_umbrella({n, 1.3});
  for (auto _ : state)
    benchmark::DoNotOptimize(becurv::bakry_emery_curvature(g, 0).curvature);
}
BENCHMARK(BM_hub_curvature)->Arg(4)->Arg(8)->Arg(16)->Arg(32)->Arg(64);

void BM_curvature_all(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const becurv::WeightedGraph g = random_graph(n, 12345);
  for (auto _ : state)
    benchmark::DoNotOptimize(becurv::curvature_all(g).size());
}
BENCHMARK(BM_curvature_all)->Arg(8)->Arg(16)->Arg(32);

void BM_eigen_symmetric(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  std::mt19937_64 eng(99);
  std::uniform_real_distribution<double> entry(-1.0, 1.0);
  becurv::SymmetricMatrix a(d);
  for (int i = 0; i < d; ++i)
    for (int j = i; j < d; ++j) {
      const double v = entry(eng);
      a(i, j) = v;
      a(j, i) = v;
    }
  for (auto _ : state)
    benchmark::DoNotOptimize(becurv::eigen_symmetric(a).values.front());
}
BENCHMARK(BM_eigen_symmetric)->Arg(4)->Arg(8)->Arg(16)->Arg(32);

void BM_rayleigh_oracle(benchmark::State& state) {
  const becurv::WeightedGraph g = random_graph(6, 777);
  const int trials = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(becurv::rayleigh_oracle(g, 0, trials, 4321));
}
BENCHMARK(BM_rayleigh_oracle)->Arg(10)->Arg(50)->Arg(200);

}  // namespace

BENCHMARK_MAIN();
