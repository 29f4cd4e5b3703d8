#include <benchmark/benchmark.h>

#include "orbexp/special.hpp"

using namespace orbexp;

static void BM_Laguerre(benchmark::State& state) {
    const int n = int(state.range(0));
    double x = 3.7;
    for (auto _ : state) {
        benchmark::DoNotOptimize(laguerre(n, 2.0, x));
        x += 1e-9;
    }
}
BENCHMARK(BM_Laguerre)->Arg(5)->Arg(20)->Arg(50);

static void BM_ReducedBessel(benchmark::State& state) {
    const int tn = 2 * int(state.range(0)) - 1;
    double z = 1.3;
    for (auto _ : state) {
        benchmark::DoNotOptimize(reduced_bessel(HalfOrder{tn}, z));
        z += 1e-9;
    }
}
BENCHMARK(BM_ReducedBessel)->Arg(2)->Arg(10)->Arg(25);

static void BM_Gaunt(benchmark::State& state) {
    const int l = int(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(gaunt(2 * l, 0, l, 0, l, 0));
}
BENCHMARK(BM_Gaunt)->Arg(1)->Arg(3)->Arg(6);

static void BM_GauntTableLookup(benchmark::State& state) {
    GauntTable table;
    table.prepopulate(4);
    for (auto _ : state)
        benchmark::DoNotOptimize(table.coeff(4, 0, 2, 1, 2, -1));
}
BENCHMARK(BM_GauntTableLookup);

static void BM_SphericalHarmonic(benchmark::State& state) {
    const int l = int(state.range(0));
    double th = 0.7;
    for (auto _ : state) {
        benchmark::DoNotOptimize(spherical_harmonic(AngularIndex(l, l / 2), th, 1.1));
        th += 1e-9;
    }
}
BENCHMARK(BM_SphericalHarmonic)->Arg(1)->Arg(4)->Arg(8);
