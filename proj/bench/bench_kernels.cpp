// Serial reference vs OpenMP kernels over the same inputs.

#include <benchmark/benchmark.h>

#include "qbracket/kernels.hpp"
#include "qbracket/qseries.hpp"
#include "qbracket/series.hpp"

using namespace qbracket;

namespace {

Exec exec_of(const benchmark::State& state) { return state.range(1) ? Exec::parallel : Exec::serial; }

void label(benchmark::State& state) { state.SetLabel(state.range(1) ? "parallel" : "serial"); }

void BM_HookHistogram(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(hook_histogram(n, exec_of(state)));
    label(state);
}

void BM_THookHistogram(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(t_hook_histogram(n, 2, exec_of(state)));
    label(state);
}

void BM_PartHistogram(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(part_histogram(n, exec_of(state)));
    label(state);
}

void BM_NekrasovOkounkov(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(nekrasov_okounkov_numerators(n, exec_of(state)));
    label(state);
}

void BM_Convolve(benchmark::State& state) {
    const auto order = static_cast<std::size_t>(state.range(0));
    const QSeries a = eichler_coeffs(-3, order), b = euler_series(order);
    for (auto _ : state) benchmark::DoNotOptimize(convolve(a.coeffs(), b.coeffs(), order, exec_of(state)));
    label(state);
}

}  // namespace

BENCHMARK(BM_HookHistogram)->ArgsProduct({{30, 50}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_THookHistogram)->ArgsProduct({{30, 50}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PartHistogram)->ArgsProduct({{30, 50}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_NekrasovOkounkov)->ArgsProduct({{16, 20}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Convolve)->ArgsProduct({{120, 240}, {0, 1}})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
