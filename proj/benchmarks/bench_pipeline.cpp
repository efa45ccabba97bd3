// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 the sfdort developers

#include <benchmark/benchmark.h>

#include "sfdort/pipeline.hpp"

using namespace sfdort;

namespace {

RunConfig bench_config(int width, int height, double pixel) {
    RunConfig cfg = paper_default_config();
    cfg.raster = {{-pixel / 2, -pixel / 2}, pixel, width, height};
    return cfg;
}

} // namespace

static void BM_Synthesize(benchmark::State& state) {
    const RunConfig cfg = paper_default_config();
    for (auto _ : state)
        benchmark::DoNotOptimize(synthesize(cfg.scene, cfg.grid, cfg.pulse, cfg.convention));
}
BENCHMARK(BM_Synthesize);

static void BM_Svd10x10(benchmark::State& state) {
    const RunConfig cfg = paper_default_config();
    const auto kff = build_kff(synthesize(cfg.scene, cfg.grid, cfg.pulse, cfg.convention));
    for (auto _ : state) benchmark::DoNotOptimize(svd(kff));
}
BENCHMARK(BM_Svd10x10);

static void BM_TrImage(benchmark::State& state) {
    const auto cfg = bench_config(static_cast<int>(state.range(0)),
                                  static_cast<int>(state.range(0)), 25.0);
    const auto sv = synthesize(cfg.scene, cfg.grid, cfg.pulse, cfg.convention);
    for (auto _ : state)
        benchmark::DoNotOptimize(tr_image(sv, cfg.scene, cfg.pulse, cfg.raster));
    state.SetComplexityN(state.range(0) * state.range(0));
}
BENCHMARK(BM_TrImage)->Arg(16)->Arg(32)->Arg(64)->Complexity(benchmark::oN);

static void BM_SubspaceImage(benchmark::State& state) {
    const auto cfg = bench_config(static_cast<int>(state.range(0)),
                                  static_cast<int>(state.range(0)), 25.0);
    const auto sv = synthesize(cfg.scene, cfg.grid, cfg.pulse, cfg.convention);
    const auto ns = noise_subspace(svd(build_kff(sv)), cfg.p_paths, cfg.k_targets);
    for (auto _ : state)
        benchmark::DoNotOptimize(subspace_image(ns, SubspaceSide::left, cfg.scene, cfg.grid,
                                                cfg.pulse, cfg.raster));
    state.SetComplexityN(state.range(0) * state.range(0));
}
BENCHMARK(BM_SubspaceImage)->Arg(16)->Arg(32)->Arg(64)->Complexity(benchmark::oN);

static void BM_EndToEnd(benchmark::State& state) {
    const auto cfg = bench_config(61, 76, 20.0);
    for (auto _ : state) benchmark::DoNotOptimize(run_pipeline(cfg));
}
BENCHMARK(BM_EndToEnd)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
