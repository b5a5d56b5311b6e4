// Compares the OpenMP trial kernel against the serial reference, and
// binomial batching against per-flip sampling.

#include <benchmark/benchmark.h>

#include "seqcoin/montecarlo.hpp"
#include "seqcoin/sources.hpp"

namespace {

using namespace seqcoin;

montecarlo::TrialConfig bench_config(std::uint64_t trials) {
  montecarlo::TrialConfig config;
  config.p = 0.55;
  config.p_text = "0.55";
  config.q = "0.5";
  config.delta = "0.05";
  config.trials = trials;
  config.master_seed = 7;
  return config;
}

void BM_trials_serial(benchmark::State& state) {
  auto config = bench_config(static_cast<std::uint64_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(montecarlo::run_trials_serial(config));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_trials_serial)->Arg(1000)->Arg(4000)->Unit(benchmark::kMillisecond);

void BM_trials_parallel(benchmark::State& state) {
  auto config = bench_config(static_cast<std::uint64_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(montecarlo::run_trials(config, 0));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_trials_parallel)->Arg(1000)->Arg(4000)->Unit(benchmark::kMillisecond);

void BM_flip_batch(benchmark::State& state) {
  SyntheticSource source(0.55, 42);
  const std::uint64_t k = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(source.flip_batch(k));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_flip_batch)->Arg(1000)->Arg(100000);

void BM_flip_one_loop(benchmark::State& state) {
  SyntheticSource source(0.55, 42);
  const std::uint64_t k = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    std::uint64_t heads = 0;
    for (std::uint64_t i = 0; i < k; ++i) heads += source.flip_one() ? 1 : 0;
    benchmark::DoNotOptimize(heads);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_flip_one_loop)->Arg(1000)->Arg(100000);

}  // namespace

BENCHMARK_MAIN();
