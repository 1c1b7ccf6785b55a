#include <benchmark/benchmark.h>

#include "maxgain/maxgain.hpp"

using namespace maxgain;

static void BM_Greedy(benchmark::State& state) {
    const auto inst = gen_random(static_cast<std::size_t>(state.range(0)), 2, 1, true);
    for (auto _ : state) benchmark::DoNotOptimize(build_greedy(inst));
}
BENCHMARK(BM_Greedy)->DenseRange(3, 5);

static void BM_Beta(benchmark::State& state) {
    const auto pair = gen_theorem5(static_cast<int>(state.range(0)), 0.5);
    for (auto _ : state) benchmark::DoNotOptimize(beta(pair.instance, pair.policy).value);
}
BENCHMARK(BM_Beta)->Arg(4)->Arg(6)->Arg(8);

static void BM_GammaExact(benchmark::State& state) {
    const auto inst = gen_random(static_cast<std::size_t>(state.range(0)), 2, 2, true);
    for (auto _ : state) benchmark::DoNotOptimize(gamma(inst, 2, 2).value);
}
BENCHMARK(BM_GammaExact)->DenseRange(3, 4);

static void BM_GammaSampled(benchmark::State& state) {
    const auto inst = gen_random(5, 2, 2, true);
    const GammaOptions options{GammaMode::SampledUpperBound, static_cast<std::uint64_t>(state.range(0)), 0};
    for (auto _ : state) benchmark::DoNotOptimize(gamma(inst, 2, 3, options).value);
}
BENCHMARK(BM_GammaSampled)->Arg(100)->Arg(1000);

static void BM_OptimalBudget(benchmark::State& state) {
    const auto inst = gen_random(4, 2, 3, true);
    for (auto _ : state) benchmark::DoNotOptimize(optimal_budget(inst, static_cast<int>(state.range(0))).value);
}
BENCHMARK(BM_OptimalBudget)->DenseRange(1, 4);

static void BM_OptimalCoverage(benchmark::State& state) {
    const auto structure = instance_from_hypotheses(gen_random_hypotheses(static_cast<std::size_t>(state.range(0)), 8, 5));
    const auto inst = structure.with_utility(coverage_utility(structure, structure.prior()));
    for (auto _ : state) benchmark::DoNotOptimize(optimal_coverage(inst, 1.0).value);
}
BENCHMARK(BM_OptimalCoverage)->DenseRange(3, 5);

BENCHMARK_MAIN();
