#include <benchmark/benchmark.h>

#include "jetdet/shelling.hpp"
#include "jetdet/sr_complex.hpp"

using namespace jetdet;

static void BM_FacetsBruteForce(benchmark::State& state) {
  SimplicialComplex c = delta0(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_facets_bruteforce(c).size());
}
BENCHMARK(BM_FacetsBruteForce)->DenseRange(2, 6)->Unit(benchmark::kMicrosecond);

static void BM_FacetsFamilies(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_facets_families(n).size());
}
BENCHMARK(BM_FacetsFamilies)->DenseRange(2, 6)->Unit(benchmark::kMicrosecond);

static void BM_VerifyShelling(benchmark::State& state) {
  ShellingOrder order = ShellingOrder::star(enumerate_facets_families(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(verify_shelling(order).valid);
}
BENCHMARK(BM_VerifyShelling)->DenseRange(2, 6)->Unit(benchmark::kMicrosecond);
