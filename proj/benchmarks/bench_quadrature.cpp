#include <benchmark/benchmark.h>

#include <cmath>

#include "harmint/identity.hpp"
#include "harmint/integrands.hpp"
#include "harmint/quadrature.hpp"

using namespace harmint;

static void BM_HalfLineExp(benchmark::State& state) {
    for (auto _ : state) {
        auto result = integrate_half_line([](double x) { return std::exp(-x); });
        benchmark::DoNotOptimize(result);
    }
}
BENCHMARK(BM_HalfLineExp);

static void BM_HalfLineSechFamily(benchmark::State& state) {
    const SechExpIntegrand spec(1.0, static_cast<std::uint32_t>(state.range(0)));
    for (auto _ : state) {
        auto result = integrate_half_line(
            [spec](double x) { return sech_exp_value(spec, x); });
        benchmark::DoNotOptimize(result);
    }
}
BENCHMARK(BM_HalfLineSechFamily)->Arg(2)->Arg(8)->Arg(31);

static void BM_EulerIntegral(benchmark::State& state) {
    const EulerIntegrand spec(static_cast<std::uint64_t>(state.range(0)));
    for (auto _ : state) {
        auto result = integrate_finite(
            [spec](double x) { return euler_value(spec, x); }, 0.0, 1.0);
        benchmark::DoNotOptimize(result);
    }
}
BENCHMARK(BM_EulerIntegral)->Arg(4)->Arg(50);

static void BM_VerifyTerm(benchmark::State& state) {
    const IdentityParams params(static_cast<std::uint32_t>(state.range(0)), 1.0);
    for (auto _ : state) {
        auto term = verify_term(params);
        benchmark::DoNotOptimize(term);
    }
}
BENCHMARK(BM_VerifyTerm)->Arg(1)->Arg(10)->Arg(20);

static void BM_HarmonicViaIntegrals(benchmark::State& state) {
    const std::uint64_t n = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) {
        auto report = harmonic_via_integrals(n, 1.0);
        benchmark::DoNotOptimize(report);
    }
}
BENCHMARK(BM_HarmonicViaIntegrals)->Arg(5)->Arg(10);
