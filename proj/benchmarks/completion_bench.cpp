#include <benchmark/benchmark.h>

#include "jetdet/groebner.hpp"
#include "jetdet/jet_ideals.hpp"

using namespace jetdet;

static void BM_CompletionSecondJets(benchmark::State& state) {
  GeneratorSet g = jet_generators({2, static_cast<int>(state.range(0)), 2, 2});
  std::size_t size = 0;
  for (auto _ : state) size = buchberger_completion(g).size();
  state.counters["basis"] = static_cast<double>(size);
}
BENCHMARK(BM_CompletionSecondJets)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

static void BM_CompletionDegreeBounded(benchmark::State& state) {
  GeneratorSet g = jet_generators({2, 2, 2, static_cast<int>(state.range(0))});
  CompletionOptions opts;
  opts.degree_bound = 8;
  for (auto _ : state) benchmark::DoNotOptimize(buchberger_completion(g, opts).size());
}
BENCHMARK(BM_CompletionDegreeBounded)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

static void BM_CompletionChainCriterion(benchmark::State& state) {
  GeneratorSet g = jet_generators({2, 4, 2, 2});
  CompletionOptions opts;
  opts.chain_criterion = state.range(0) != 0;
  for (auto _ : state) benchmark::DoNotOptimize(buchberger_completion(g, opts).size());
}
BENCHMARK(BM_CompletionChainCriterion)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
