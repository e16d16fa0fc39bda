#include "frameseq/constructions.hpp"
#include "frameseq/gram.hpp"
#include "frameseq/hausdorff.hpp"
#include "frameseq/periodization.hpp"
#include "frameseq/translation_set.hpp"

#include <benchmark/benchmark.h>

using namespace frameseq;

static void BM_Periodize(benchmark::State& state) {
    const FourierProfile p = plateau_ramp_profile(2.0, 1.0);
    const auto M = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(periodize(p, 1.0, M));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Periodize)->RangeMultiplier(4)->Range(1 << 10, 1 << 16)->Complexity();

static void BM_GramEigen(benchmark::State& state) {
    const FourierProfile p = plateau_ramp_profile(2.0, 1.0);
    const TranslationSet lambda = TranslationSet::integers(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(frame_bound_estimates(build_gram(p, 1.0, lambda)));
    }
}
BENCHMARK(BM_GramEigen)->RangeMultiplier(2)->Range(16, 256)->Unit(benchmark::kMillisecond);

static void BM_Density(benchmark::State& state) {
    const TranslationSet lambda = TranslationSet::powers(2, state.range(0));
    const double x = lambda.extent() / 4;
    for (auto _ : state) {
        benchmark::DoNotOptimize(density(lambda, x));
    }
}
BENCHMARK(BM_Density)->RangeMultiplier(8)->Range(64, 1 << 15);

static void BM_DyadicWeight(benchmark::State& state) {
    const auto n_max = static_cast<long>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(dyadic_weight(0.5, n_max, std::size_t{1} << (n_max + 4)));
    }
}
BENCHMARK(BM_DyadicWeight)->DenseRange(6, 12, 2)->Unit(benchmark::kMillisecond);

static void BM_CoefficientDensity(benchmark::State& state) {
    const TranslationSet lambda = TranslationSet::integers(state.range(0));
    const Coefficients c(lambda.size(), 1.0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(coefficient_density_check(lambda, c, -8, 8));
    }
}
BENCHMARK(BM_CoefficientDensity)->RangeMultiplier(4)->Range(16, 1024);
BENCHMARK_MAIN();
