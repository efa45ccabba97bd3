// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 the sfdort developers

#include <benchmark/benchmark.h>

#include "sfdort/specfun.hpp"

// The Hankel kernel dominates imaging time: every pixel costs
// 2 evaluations per frequency sample.

static void BM_BesselJ0_Series(benchmark::State& state) {
    double x = 0.5;
    for (auto _ : state) {
        benchmark::DoNotOptimize(sfdort::bessel_j0(x));
        x = x < 11.0 ? x + 0.37 : 0.5;
    }
}
BENCHMARK(BM_BesselJ0_Series);

static void BM_BesselJ0_Asymptotic(benchmark::State& state) {
    double x = 20.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(sfdort::bessel_j0(x));
        x = x < 480.0 ? x + 3.7 : 20.0;
    }
}
BENCHMARK(BM_BesselJ0_Asymptotic);

static void BM_Hankel0_ImagingRange(benchmark::State& state) {
    // omega d / c over the reference raster spans roughly [3, 400]
    double x = 3.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(sfdort::hankel0(x));
        x = x < 400.0 ? x + 1.618 : 3.0;
    }
}
BENCHMARK(BM_Hankel0_ImagingRange);

BENCHMARK_MAIN();
