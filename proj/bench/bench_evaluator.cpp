// Serial reference evaluator against the OpenMP kernel.
#include <benchmark/benchmark.h>
#include <omp.h>

#include "mixedpf/evaluator.hpp"
#include "mixedpf/models.hpp"

using namespace mixedpf;

namespace {

// K4 with every edge doubled: 4 vertices of degree 6, 12 edges.
MultiGraph doubled_k4() {
  MultiGraph g(4);
  for (int a = 0; a < 4; ++a) {
    for (int b = a + 1; b < 4; ++b) {
      g.add_edge(a, b);
      g.add_edge(a, b);
    }
  }
  return g;
}

void BM_Reference(benchmark::State& state) {
  const MultiGraph g = doubled_k4();
  const EdgeColoringModel h = charpoly_model(GaussianRational(Rational(3, 2)), g.max_degree());
  for (auto _ : state) benchmark::DoNotOptimize(reference::partition_function(g, h, Mode::kMixed));
}

void BM_Kernel(benchmark::State& state) {
  const MultiGraph g = doubled_k4();
  const EdgeColoringModel h = charpoly_model(GaussianRational(Rational(3, 2)), g.max_degree());
  const int before = omp_get_max_threads();
  omp_set_num_threads(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(partition_function(g, h, Mode::kMixed));
  omp_set_num_threads(before);
}

}  // namespace

BENCHMARK(BM_Reference)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Kernel)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
