#include <benchmark/benchmark.h>

#include "orbexp/accel.hpp"
#include "orbexp/addition.hpp"
#include "orbexp/transforms.hpp"

using namespace orbexp;

static void BM_LambdaToBfun(benchmark::State& state) {
    const int n = int(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(lambda_to_bfun(n, 1, 1.0));
}
BENCHMARK(BM_LambdaToBfun)->Arg(3)->Arg(6)->Arg(10);

static void BM_BfunConvolution(benchmark::State& state) {
    const int l = int(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(bfun_convolution(2, l, 0, 2, l, 0, 1.0));
}
BENCHMARK(BM_BfunConvolution)->Arg(0)->Arg(1)->Arg(2);

static void BM_SymmetricCoeffs(benchmark::State& state) {
    const int nmax = int(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(symmetric_coeffs_lambda(1, 0, 0, nmax, 1.0));
}
BENCHMARK(BM_SymmetricCoeffs)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

static void BM_WynnEpsilon(benchmark::State& state) {
    std::vector<double> s;
    double acc = 0.0, t = 1.0;
    for (int i = 0; i < int(state.range(0)); ++i) {
        acc += t;
        t *= 0.7;
        s.push_back(acc);
    }
    for (auto _ : state) benchmark::DoNotOptimize(wynn_epsilon(s));
}
BENCHMARK(BM_WynnEpsilon)->Arg(10)->Arg(30);
