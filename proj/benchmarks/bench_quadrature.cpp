#include <benchmark/benchmark.h>

#include <cmath>

#include "orbexp/basis.hpp"
#include "orbexp/quadrature.hpp"

using namespace orbexp;

static void BM_RadialQuadrature(benchmark::State& state) {
    QuadratureSpec qs;
    qs.decay_hint = 2.0;
    auto f = [](double r) { return std::exp(-2.0 * r) * r; };
    for (auto _ : state) benchmark::DoNotOptimize(radial_quadrature(f, 0, qs));
}
BENCHMARK(BM_RadialQuadrature);

static void BM_GramMatrix(benchmark::State& state) {
    const int nmax = int(state.range(0));
    BasisSpec spec = BasisSpec::lambda(1.0);
    for (auto _ : state)
        benchmark::DoNotOptimize(gram_matrix(spec, WeightSpec::r_power(0), nmax, 0, 0));
}
BENCHMARK(BM_GramMatrix)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

static void BM_TwoCenterOverlap(benchmark::State& state) {
    auto F = [](const Vec3& u) -> std::complex<double> { return std::exp(-norm(u)); };
    QuadratureSpec qs;
    qs.abs_tol = 1e-10;
    qs.rel_tol = 1e-8;
    for (auto _ : state)
        benchmark::DoNotOptimize(two_center_integral(F, F, Vec3{0, 0, 1.3}, qs, 8));
}
BENCHMARK(BM_TwoCenterOverlap)->Unit(benchmark::kMillisecond);
