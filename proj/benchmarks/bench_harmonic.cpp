#include <benchmark/benchmark.h>

#include "harmint/harmonic.hpp"

using namespace harmint;

static void BM_HarmonicExact(benchmark::State& state) {
    const std::uint64_t n = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) {
        auto h = harmonic_exact(n);
        benchmark::DoNotOptimize(h);
    }
}
BENCHMARK(BM_HarmonicExact)->Arg(10)->Arg(100)->Arg(1000);

static void BM_HarmonicFloat(benchmark::State& state) {
    const std::uint64_t n = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(harmonic_float(n));
    }
}
BENCHMARK(BM_HarmonicFloat)->Arg(1000)->Arg(1000000);

static void BM_ExactToDouble(benchmark::State& state) {
    const ExactRational h = harmonic_exact(static_cast<std::uint64_t>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(h.to_double());
    }
}
BENCHMARK(BM_ExactToDouble)->Arg(100)->Arg(1000);

static void BM_EstimateGamma(benchmark::State& state) {
    const std::uint64_t n = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(estimate_gamma(n));
    }
}
BENCHMARK(BM_EstimateGamma)->Arg(10000);

BENCHMARK_MAIN();
