#include <cmath>

#include <benchmark/benchmark.h>

#include "curvedcs/curvedcs.hpp"

using namespace curvedcs;

namespace {

const ScalarField kGentle{"gentle",
                          [](double x, double y) {
                              return std::exp(-81.0 / 16.0 * ((x - 0.5) * (x - 0.5) + (y - 0.5) * (y - 0.5))) / 3.0;
                          },
                          {}, {}};

void BM_BasisWeights(benchmark::State& state) {
    const CheneySharmaParams params{static_cast<int>(state.range(0)), 1.0};
    double t = 0.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(basis_weights(params, t));
        t = std::fmod(t + 0.013, 1.0);
    }
}
BENCHMARK(BM_BasisWeights)->Arg(5)->Arg(20)->Arg(60);

void BM_ApplyP1(benchmark::State& state) {
    const CurvedTriangle tri(1.0, SuperellipseArc{2.0});
    const int m = static_cast<int>(state.range(0));
    const BivariateParams params{{m, 1.0}, {m + 1, 1.0}};
    for (auto _ : state) benchmark::DoNotOptimize(apply_p1(tri, params, kGentle, 0.3, 0.4));
}
BENCHMARK(BM_ApplyP1)->Arg(5)->Arg(15);

void BM_Modulus2D(benchmark::State& state) {
    const CurvedTriangle tri(1.0, StraightLine{});
    const int res = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(modulus_2d(tri, kGentle, 0.15, 0.15, res));
}
BENCHMARK(BM_Modulus2D)->Arg(101)->Arg(401)->Unit(benchmark::kMillisecond);


}  // namespace

BENCHMARK_MAIN();
