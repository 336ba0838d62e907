// serial reference vs OpenMP kernels
#include <benchmark/benchmark.h>

#include "lch/torus.hpp"

using namespace lch;

static void BM_build_dga(benchmark::State& st)
{
    Diagram d = torus_2n_diagram(static_cast<int>(st.range(0)));
    for (auto _ : st)
        benchmark::DoNotOptimize(build_dga(d));
}

static void BM_build_dga_serial(benchmark::State& st)
{
    Diagram d = torus_2n_diagram(static_cast<int>(st.range(0)));
    for (auto _ : st)
        benchmark::DoNotOptimize(build_dga_serial(d));
}

static void BM_augmentations(benchmark::State& st)
{
    auto a = build_dga(torus_2n_diagram(static_cast<int>(st.range(0))));
    for (auto _ : st)
        benchmark::DoNotOptimize(enumerate_augmentations(a));
}

static void BM_augmentations_serial(benchmark::State& st)
{
    auto a = build_dga(torus_2n_diagram(static_cast<int>(st.range(0))));
    for (auto _ : st)
        benchmark::DoNotOptimize(enumerate_augmentations_serial(a));
}

static LinearizedComplex complex_for(int n)
{
    auto a = build_dga(torus_2n_diagram(n));
    return linearize(a, enumerate_augmentations(a).back());
}

static void BM_homology(benchmark::State& st)
{
    auto c = complex_for(static_cast<int>(st.range(0)));
    for (auto _ : st)
        benchmark::DoNotOptimize(homology(c));
}

static void BM_homology_serial(benchmark::State& st)
{
    auto c = complex_for(static_cast<int>(st.range(0)));
    for (auto _ : st)
        benchmark::DoNotOptimize(homology_serial(c));
}

static void BM_census(benchmark::State& st)
{
    for (auto _ : st)
        benchmark::DoNotOptimize(fillings_census(static_cast<int>(st.range(0))));
}

static void BM_census_serial(benchmark::State& st)
{
    for (auto _ : st)
        benchmark::DoNotOptimize(fillings_census_serial(static_cast<int>(st.range(0))));
}

BENCHMARK(BM_build_dga)->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_build_dga_serial)->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_augmentations)->DenseRange(4, 8, 2)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_augmentations_serial)->DenseRange(4, 8, 2)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_homology)->Arg(6)->Arg(8)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_homology_serial)->Arg(6)->Arg(8)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_census)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_census_serial)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
