#include <benchmark/benchmark.h>

#include "adwpt/mcsim.hpp"

namespace {

adwpt::ScenarioParams fig3_params() {
    adwpt::ScenarioParams p;
    p.pb_power = 10.0;
    return p;
}

void BM_TrialsSerial(benchmark::State& state) {
    const auto p = fig3_params();
    adwpt::mcsim::SimConfig cfg;
    cfg.trials = state.range(0);
    for (auto _ : state) {
        auto s = adwpt::mcsim::run_trials_serial(p, cfg);
        benchmark::DoNotOptimize(s.mean);
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_TrialsOpenMP(benchmark::State& state) {
    const auto p = fig3_params();
    adwpt::mcsim::SimConfig cfg;
    cfg.trials = state.range(0);
    for (auto _ : state) {
        auto s = adwpt::mcsim::run_trials(p, cfg);
        benchmark::DoNotOptimize(s.mean);
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_RadiusSweep(benchmark::State& state) {
    auto p = fig3_params();
    adwpt::mcsim::SimConfig cfg;
    cfg.trials = state.range(0);
    const auto radii = adwpt::mcsim::log_grid(1e-3, 10.0, 100);
    for (auto _ : state) {
        auto s = adwpt::mcsim::sweep_radius(p, radii, cfg);
        benchmark::DoNotOptimize(s.unit_power.data());
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

}  // namespace

BENCHMARK(BM_TrialsSerial)->Arg(500)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TrialsOpenMP)->Arg(500)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RadiusSweep)->Arg(200)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
