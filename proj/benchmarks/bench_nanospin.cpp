#include <benchmark/benchmark.h>

#include "nanospin/discord.hpp"
#include "nanospin/entanglement.hpp"
#include "nanospin/exact_oracle.hpp"
#include "nanospin/nanopore_model.hpp"

using namespace nanospin;

namespace {

const CSDensityMatrix kState = reduced_density({SpinCount::finite(6), 3.0, 0.8});

void BM_ConcurrenceClosedForm(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(concurrence_cs(kState));
}
BENCHMARK(BM_ConcurrenceClosedForm);

void BM_ConcurrenceNumeric(benchmark::State& state) {
  const auto dense = kState.to_dense();
  for (auto _ : state) benchmark::DoNotOptimize(concurrence_numeric(dense));
}
BENCHMARK(BM_ConcurrenceNumeric);

void BM_DiscordNumeric(benchmark::State& state) {
  const auto dense = kState.to_dense();
  for (auto _ : state) benchmark::DoNotOptimize(discord_numeric(dense));
}
BENCHMARK(BM_DiscordNumeric)->Unit(benchmark::kMillisecond);

void BM_OracleReducedPair(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(oracle::partial_trace_pair(oracle::nanopore_state(n, 3.0, 0.8)));
}
BENCHMARK(BM_OracleReducedPair)->DenseRange(4, 10, 2)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
