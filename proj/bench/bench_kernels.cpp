// Serial vs OpenMP timings for the sprinkle kernels.
// OMP_NUM_THREADS picks the team size.

#include <benchmark/benchmark.h>

#include "causet/dalembertian.hpp"
#include "causet/parallel.hpp"
#include "causet/sprinkling.hpp"

using namespace causet;

namespace {

sprinkling::Sprinkle sprinkle_of(std::int64_t count) {
  auto spec = sprinkling::spec_for_count(4, 1.0, static_cast<double>(count));
  auto rng = sprinkling::run_stream(2024, 0);
  return sprinkling::sample_diamond(spec, rng);
}

void causal_matrix_serial(benchmark::State& state) {
  const auto s = sprinkle_of(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(sprinkling::causal_matrix_serial(s));
  state.counters["N"] = static_cast<double>(s.size());
}

void causal_matrix_parallel(benchmark::State& state) {
  const auto s = sprinkle_of(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(sprinkling::causal_matrix(s));
  state.counters["N"] = static_cast<double>(s.size());
  state.counters["threads"] = thread_count();
}

void histogram_serial(benchmark::State& state) {
  const auto m = sprinkling::causal_matrix(sprinkle_of(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(dalembertian::interval_histogram_serial(m, 4));
}

void histogram_parallel(benchmark::State& state) {
  const auto m = sprinkling::causal_matrix(sprinkle_of(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(dalembertian::interval_histogram(m, 4));
  state.counters["threads"] = thread_count();
}

void ensemble(benchmark::State& state) {
  const int saved = thread_count();
  set_thread_count(static_cast<int>(state.range(0)));
  const auto spec = sprinkling::spec_for_count(2, 4.0, 1000);
  const auto field = dalembertian::FieldSpec::parse("t^2*window(0.5,1)", 2);
  const auto coeffs = coefficients::coefficient_set(2);
  for (auto _ : state) benchmark::DoNotOptimize(dalembertian::ensemble_mean_b(spec, field, coeffs, 32, 1));
  set_thread_count(saved);
}

}  // namespace

BENCHMARK(causal_matrix_serial)->Arg(1000)->Arg(4000)->Arg(16000)->Unit(benchmark::kMillisecond);
BENCHMARK(causal_matrix_parallel)->Arg(1000)->Arg(4000)->Arg(16000)->Unit(benchmark::kMillisecond);
BENCHMARK(histogram_serial)->Arg(1000)->Arg(4000)->Unit(benchmark::kMillisecond);
BENCHMARK(histogram_parallel)->Arg(1000)->Arg(4000)->Unit(benchmark::kMillisecond);
BENCHMARK(ensemble)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
