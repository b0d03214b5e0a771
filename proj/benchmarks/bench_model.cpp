#include <benchmark/benchmark.h>

#include "ssclaim/ssclaim.hpp"

using namespace ssclaim;

static void BM_GainCola(benchmark::State& state) {
    double n = 1.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(gain_cola(4.0, n, 0.08, 0.025, 0.05));
        n = n < 100.0 ? n + 0.5 : 1.0;
    }
}
BENCHMARK(BM_GainCola);

static void BM_BreakevenTable(benchmark::State& state) {
    for (auto _ : state) {
        for (int K = 1; K <= 8; ++K)
            for (double q : {0.0, 0.025, 0.037}) benchmark::DoNotOptimize(breakeven_cola(K, 0.08, q));
    }
}
BENCHMARK(BM_BreakevenTable);

static void BM_CriticalPoint(benchmark::State& state) {
    const double q = static_cast<double>(state.range(0)) / 1000.0;
    for (auto _ : state) benchmark::DoNotOptimize(r_star_cola(8.0, 0.08, q));
}
BENCHMARK(BM_CriticalPoint)->Arg(0)->Arg(25)->Arg(37);

static void BM_CriticalTable(benchmark::State& state) {
    for (auto _ : state) {
        for (int K = 1; K <= 8; ++K)
            for (double q : {0.0, 0.025, 0.037}) benchmark::DoNotOptimize(r_star_cola(K, 0.08, q));
    }
}
BENCHMARK(BM_CriticalTable)->Unit(benchmark::kMicrosecond);

static void BM_KOptAtN(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(k_opt_at_n(20.0, 0.08, 0.025, 0.045));
}
BENCHMARK(BM_KOptAtN)->Unit(benchmark::kMicrosecond);

static void BM_MaximinSweep(benchmark::State& state) {
    for (auto _ : state) {
        for (int i = 0; i <= 79; ++i) benchmark::DoNotOptimize(k_opt_maximin(0.08, 0.025, 0.044 + 0.0002 * i));
    }
}
BENCHMARK(BM_MaximinSweep)->Unit(benchmark::kMillisecond);

static void BM_GainCurveCrossings(benchmark::State& state) {
    const RateParams params{0.08, 0.025, 0.0525};
    for (auto _ : state) benchmark::DoNotOptimize(gain_curve_crossings(4.69, 7.0, params));
}
BENCHMARK(BM_GainCurveCrossings)->Unit(benchmark::kMicrosecond);

static void BM_Ledger(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(simulate_ledger(8, 40, 0.08, 0.025, 0.05, 1.0, {true, true}));
    }
}
BENCHMARK(BM_Ledger);
BENCHMARK_MAIN();
