#include <cstdint>

#include <benchmark/benchmark.h>

#include "glskit/bound.hpp"
#include "glskit/census.hpp"
#include "glskit/cliques.hpp"
#include "glskit/decompose.hpp"
#include "glskit/generators.hpp"
#include "glskit/graph.hpp"

namespace {

gls::Graph bounded(std::int64_t n, std::int64_t delta, std::uint64_t seed) {
  // Enough attempts to drive most vertices to the degree cap.
  return gls::random_bounded(n, delta, 20 * n, seed);
}

void BM_CountTriangles(benchmark::State& state) {
  gls::Graph g = bounded(state.range(0), 16, 7);
  for (auto _ : state) {
    benchmark::DoNotOptimize(gls::count_cliques(g, 3).value());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_CountTriangles)->Arg(1000)->Arg(10000)->Arg(100000);

void BM_CountCliquesBySize(benchmark::State& state) {
  gls::Graph g = bounded(20000, 16, 7);
  const int t = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(gls::count_cliques(g, t).value());
  }
}
BENCHMARK(BM_CountCliquesBySize)->Arg(3)->Arg(4)->Arg(5)->Arg(6);

void BM_MeetingCounts(benchmark::State& state) {
  gls::Graph g = bounded(state.range(0), 12, 9);
  for (auto _ : state) {
    benchmark::DoNotOptimize(gls::meeting_counts(g, 3));
  }
}
BENCHMARK(BM_MeetingCounts)->Arg(1000)->Arg(10000);

void BM_Decompose(benchmark::State& state) {
  gls::Graph g = bounded(state.range(0), 8, 11);
  for (auto _ : state) {
    benchmark::DoNotOptimize(gls::decompose(g, 3, std::nullopt).steps.size());
  }
}
BENCHMARK(BM_Decompose)->Arg(100)->Arg(400);

void BM_VerifyCertificate(benchmark::State& state) {
  gls::Graph g = bounded(state.range(0), 8, 11);
  gls::Certificate cert = gls::decompose(g, 3, std::nullopt);
  for (auto _ : state) {
    benchmark::DoNotOptimize(gls::verify_certificate(g, cert).all_pass());
  }
}
BENCHMARK(BM_VerifyCertificate)->Arg(100)->Arg(400);

void BM_Census(benchmark::State& state) {
  gls::Graph g = bounded(state.range(0), 6, 13);
  for (auto _ : state) {
    benchmark::DoNotOptimize(gls::census(g, 3).phi_total.value());
  }
}
BENCHMARK(BM_Census)->Arg(8)->Arg(12);

void BM_GlsBound(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(gls::gls_bound(1000000, 32, 5).value());
  }
}
BENCHMARK(BM_GlsBound);

}  // namespace

BENCHMARK_MAIN();
