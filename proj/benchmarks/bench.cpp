#include "hilb/asym.hpp"
#include "hilb/contour.hpp"
#include "hilb/genfun.hpp"
#include "hilb/qzseries.hpp"

#include <benchmark/benchmark.h>

#include <vector>

namespace {

void BM_PochhammerBuild(benchmark::State& state) {
    const long order = state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(hilb::pochhammer(0, 1, order));
}
BENCHMARK(BM_PochhammerBuild)->Arg(64)->Arg(256)->Unit(benchmark::kMillisecond);

void BM_CoefficientTable(benchmark::State& state) {
    const long order = state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(hilb::gen::f_series(24, order));
}
BENCHMARK(BM_CoefficientTable)->Arg(32)->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond);

void BM_RowMultiply(benchmark::State& state) {
    auto f = hilb::gen::f_series_cached(24, 60);
    const hilb::LaurentPoly& a = f->row(40);
    const hilb::LaurentPoly& b = f->row(60);
    for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_RowMultiply);

void BM_BesselLargeArgument(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(hilb::asym::bessel_I(-14.0, 177.7, 256));
}
BENCHMARK(BM_BesselLargeArgument);

void BM_MainTermEstimate(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(hilb::asym::a_asymptotic(0, 24, 400, 3, 256));
}
BENCHMARK(BM_MainTermEstimate);

void BM_ContourRow(benchmark::State& state) {
    hilb::contour::ContourConfig cfg;
    cfg.k = 24;
    cfg.n = 2;
    cfg.samples_w = 16;
    cfg.samples_u = 16;
    cfg.precision = 96;
    cfg.self_check = false;
    std::vector<long> ms{-2, -1, 0, 1, 2};
    for (auto _ : state) benchmark::DoNotOptimize(hilb::contour::contour_row(cfg, ms, nullptr));
}
BENCHMARK(BM_ContourRow)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
