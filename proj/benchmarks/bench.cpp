#include <benchmark/benchmark.h>

#include "noisecube/checks.hpp"
#include "noisecube/entropy.hpp"
#include "noisecube/info.hpp"
#include "noisecube/lp.hpp"
#include "noisecube/noise.hpp"
#include "noisecube/spectral.hpp"

using namespace noisecube;

namespace {

void BM_WhtForward(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const CubeFunction f = random_nonneg_function(n, 1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(wht_forward(f));
    }
    state.SetItemsProcessed(state.iterations() * (1LL << n));
}
BENCHMARK(BM_WhtForward)->Arg(8)->Arg(12)->Arg(16)->Arg(20);

void BM_NoiseApply(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const CubeFunction f = random_nonneg_function(n, 2);
    const NoiseParam noise(0.3);
    for (auto _ : state) {
        benchmark::DoNotOptimize(noise_apply(f, noise));
    }
    state.SetItemsProcessed(state.iterations() * (1LL << n));
}
BENCHMARK(BM_NoiseApply)->Arg(8)->Arg(12)->Arg(16)->Arg(20);

void BM_AllConditionalEntropies(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const CubeFunction f = random_nonneg_function(n, 3);
    for (auto _ : state) {
        benchmark::DoNotOptimize(all_conditional_entropies(f));
    }
}
BENCHMARK(BM_AllConditionalEntropies)->Arg(8)->Arg(10)->Arg(12);

void BM_TProfile(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const CubeFunction f = random_nonneg_function(n, 4);
    for (auto _ : state) {
        benchmark::DoNotOptimize(t_profile(f));
    }
}
BENCHMARK(BM_TProfile)->Arg(6)->Arg(8)->Arg(10);

void BM_CkSearch(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const NoiseParam noise(0.4);
    for (auto _ : state) {
        benchmark::DoNotOptimize(ck_exhaustive_search(n, noise));
    }
}
BENCHMARK(BM_CkSearch)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_LpSolve(benchmark::State& state) {
    const int k = static_cast<int>(state.range(0));
    Rng rng(5);
    std::vector<double> prof(k);
    for (auto& v : prof) v = rng.uniform01();
    const LpProblem p = build_lp(symmetric_boundary(prof), 0.4);
    for (auto _ : state) {
        benchmark::DoNotOptimize(solve_lp(p));
    }
}
BENCHMARK(BM_LpSolve)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_FeasibleFromFunction(benchmark::State& state) {
    const int k = static_cast<int>(state.range(0));
    const CubeFunction f = random_nonneg_function(6, 6);
    const NoiseParam noise(0.3);
    const mask_t a = full_mask(k);
    for (auto _ : state) {
        benchmark::DoNotOptimize(feasible_from_function(f, a, k, noise));
    }
}
BENCHMARK(BM_FeasibleFromFunction)
    ->Arg(2)
    ->Arg(3)
    ->Arg(4)
    ->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
