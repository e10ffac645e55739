#include <benchmark/benchmark.h>

#include "cra/cra.hpp"

namespace {

const cra::ModelParams kParams(200, 200.5, 1, 0.7, 1.3);

void BM_BoundStateEnergies(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(cra::bound_state_energies(kParams));
}
BENCHMARK(BM_BoundStateEnergies);

void BM_BuildBoundStatesAndChirality(benchmark::State& state) {
    const auto levels = cra::bound_state_energies(kParams);
    for (auto _ : state) {
        for (const auto& level : levels) {
            benchmark::DoNotOptimize(cra::chirality(cra::build_bound_state(kParams, level)));
        }
    }
}
BENCHMARK(BM_BuildBoundStatesAndChirality);

void BM_ScatteringSolution(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(cra::scattering_solution(kParams, 1.1));
}
BENCHMARK(BM_ScatteringSolution);

void BM_Overlaps(benchmark::State& state) {
    const auto nk = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(cra::overlaps(kParams, nk));
}
BENCHMARK(BM_Overlaps)->Arg(4096)->Arg(16384)->Unit(benchmark::kMillisecond);

void BM_EvolveSpectral(benchmark::State& state) {
    const auto decomposition = cra::overlaps(kParams);
    const auto times = cra::uniform_times(50.0, 0.05);
    for (auto _ : state) {
        benchmark::DoNotOptimize(cra::evolve_spectral(kParams, decomposition, times));
    }
}
BENCHMARK(BM_EvolveSpectral)->Unit(benchmark::kMillisecond);

void BM_EdOutOfBandLevels(benchmark::State& state) {
    const auto model = cra::build_finite_model(kParams, static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(cra::out_of_band_levels(model));
}
BENCHMARK(BM_EdOutOfBandLevels)->Arg(501)->Arg(2001)->Unit(benchmark::kMillisecond);

void BM_ExactPropagator(benchmark::State& state) {
    const auto model = cra::build_finite_model(kParams, static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(cra::ExactPropagator(model));
}
BENCHMARK(BM_ExactPropagator)->Arg(401)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
