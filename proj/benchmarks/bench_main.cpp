#include "vlab/box_measures.hpp"
#include "vlab/operator_matrices.hpp"
#include "vlab/spectra.hpp"

#include <benchmark/benchmark.h>

using namespace vlab;

static void BM_VolterraMatrix(benchmark::State& state)
{
    const auto g = AnalyticSymbol::power(0.5);
    const int N = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(volterra_matrix(g, SpaceSpec::bergman(0), N));
    }
}
BENCHMARK(BM_VolterraMatrix)->RangeMultiplier(2)->Range(64, 1024)->Unit(benchmark::kMillisecond);

static void BM_SingularValues(benchmark::State& state)
{
    const auto m = volterra_matrix(AnalyticSymbol::power(0.5), SpaceSpec::hardy(),
                                   static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(singular_values(m));
    }
}
BENCHMARK(BM_SingularValues)->RangeMultiplier(2)->Range(64, 1024)->Unit(benchmark::kMillisecond);

static void BM_InnerHalfMass(benchmark::State& state)
{
    const auto g = AnalyticSymbol::power(0.5);
    const auto region = inner_half_region(DyadicBox::make(static_cast<int>(state.range(0)), 0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(integrate_density(g, region, 1.0, 1e-10));
    }
}
BENCHMARK(BM_InnerHalfMass)->DenseRange(1, 10, 3)->Unit(benchmark::kMicrosecond);

static void BM_WindowMass(benchmark::State& state)
{
    const auto g = AnalyticSymbol::power(0.5);
    const auto box = DyadicBox::make(static_cast<int>(state.range(0)), 0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(window_mass(g, box, 1.0, 1e-10, 20));
    }
}
BENCHMARK(BM_WindowMass)->DenseRange(1, 10, 3)->Unit(benchmark::kMillisecond);

static void BM_BuildTable(benchmark::State& state)
{
    const auto g = AnalyticSymbol::power(0.5);
    const int G = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(build_table(g, SpaceSpec::hardy(), G));
    }
}
BENCHMARK(BM_BuildTable)->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);

static void BM_ToeplitzGram(benchmark::State& state)
{
    const auto table = build_table(AnalyticSymbol::monomial(), SpaceSpec::hardy(), static_cast<int>(state.range(0)));
    const auto mu = discretize_inner_halves(table, 1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(toeplitz_singular_values(toeplitz_gram(mu, SpaceSpec::bergman(0))));
    }
}
BENCHMARK(BM_ToeplitzGram)->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
