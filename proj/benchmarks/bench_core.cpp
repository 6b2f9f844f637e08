#include <benchmark/benchmark.h>

#include <random>

#include "xsdyn/analysis.hpp"
#include "xsdyn/channels.hpp"
#include "xsdyn/correlations.hpp"
#include "xsdyn/random_states.hpp"

using namespace xsdyn;

namespace {

XState sample_state() {
  std::mt19937_64 rng(42);
  return random_x_state(rng, CoherenceMode::RealSameSign);
}

void BM_EvolveClosedForm(benchmark::State& state) {
  const XState x = sample_state();
  double p = 0.0;
  for (auto _ : state) {
    p += 1e-6;
    if (p > 1.0) p = 0.0;
    benchmark::DoNotOptimize(
        evolve_closed_form(x, ChannelKind::AmplitudeDamping, QubitLabel::L, p));
  }
}
BENCHMARK(BM_EvolveClosedForm);

void BM_ApplyKraus(benchmark::State& state) {
  const DensityMatrix m = sample_state().to_density();
  const KrausSet lifted =
      lift_one_sided(kraus_ops(ChannelKind::Depolarizing, 0.3), QubitLabel::U);
  for (auto _ : state) {
    benchmark::DoNotOptimize(apply_kraus(m, lifted));
  }
}
BENCHMARK(BM_ApplyKraus);

void BM_ConcurrenceClosedForm(benchmark::State& state) {
  const XState x = sample_state();
  for (auto _ : state) benchmark::DoNotOptimize(concurrence_x(x));
}
BENCHMARK(BM_ConcurrenceClosedForm);

void BM_ConcurrenceOracle(benchmark::State& state) {
  const DensityMatrix m = sample_state().to_density();
  for (auto _ : state) benchmark::DoNotOptimize(concurrence_oracle(m));
}
BENCHMARK(BM_ConcurrenceOracle);

void BM_BellOracle(benchmark::State& state) {
  const DensityMatrix m = sample_state().to_density();
  for (auto _ : state) benchmark::DoNotOptimize(bell_oracle(m));
}
BENCHMARK(BM_BellOracle);

void BM_DiscordClosedForm(benchmark::State& state) {
  const XState x = sample_state();
  for (auto _ : state) benchmark::DoNotOptimize(discord_x(x));
}
BENCHMARK(BM_DiscordClosedForm);

void BM_DiscordOracle(benchmark::State& state) {
  const DensityMatrix m = sample_state().to_density();
  DiscordOracleOptions opt;
  opt.restarts = 4;
  for (auto _ : state) benchmark::DoNotOptimize(discord_oracle(m, opt));
}
BENCHMARK(BM_DiscordOracle);

void BM_DecaySymmetrySweep(benchmark::State& state) {
  const XState x = sample_state();
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        decay_symmetry(x, ChannelKind::AmplitudeDamping, Measure::Concurrence));
  }
}
BENCHMARK(BM_DecaySymmetrySweep);

}  // namespace

BENCHMARK_MAIN();
