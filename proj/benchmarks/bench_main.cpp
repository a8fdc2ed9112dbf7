#include <benchmark/benchmark.h>

#include <random>

#include "iwasawa/analytic_oracle.hpp"
#include "iwasawa/cohomology.hpp"
#include "iwasawa/int_matrix.hpp"
#include "iwasawa/lambda_formulas.hpp"

using namespace iwasawa;

static void BM_HMinus(benchmark::State& state) {
    const auto d = static_cast<long>(state.range(0));
    const auto n = static_cast<unsigned>(state.range(1));
    for (auto _ : state) benchmark::DoNotOptimize(h_minus(d, n));
    state.SetLabel("d=" + std::to_string(d) + " n=" + std::to_string(n));
}
BENCHMARK(BM_HMinus)->Args({7, 3})->Args({7, 4})->Args({35, 4})->Args({35, 5})->Unit(benchmark::kMillisecond);

static void BM_OracleRun(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(run_oracle(state.range(0), 4));
}
BENCHMARK(BM_OracleRun)->Arg(21)->Arg(35)->UseRealTime()->Unit(benchmark::kMillisecond);

static void BM_SmithNormalForm(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<long> dist(-50, 50);
    IntMatrix a(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a(i, j) = dist(rng);
    for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(a));
}
BENCHMARK(BM_SmithNormalForm)->RangeMultiplier(2)->Range(4, 32);

static void BM_CohomologyRegular(benchmark::State& state) {
    const auto m = indecomposable_module(static_cast<int>(state.range(0)), IndecomposableKind::regular);
    for (auto _ : state) benchmark::DoNotOptimize(cohomology(m));
}
BENCHMARK(BM_CohomologyRegular)->Arg(3)->Arg(17)->Arg(31);

static void BM_BruteForceCohomology(benchmark::State& state) {
    // Z/m[G] for the cyclic group of order 3
    const long mod = state.range(0);
    const auto reg = indecomposable_module(3, IndecomposableKind::regular);
    IntMatrix rel(3, 3);
    for (std::size_t i = 0; i < 3; ++i) rel(i, i) = mod;
    const CyclicGModule m(3, 3, rel, reg.action());
    for (auto _ : state) benchmark::DoNotOptimize(brute_force_cohomology(m));
}
BENCHMARK(BM_BruteForceCohomology)->Arg(6)->Arg(12)->Arg(21)->Unit(benchmark::kMillisecond);

static void BM_FerreroSweep(benchmark::State& state) {
    const long bound = state.range(0);
    for (auto _ : state) {
        long total = 0;
        for (long d = 3; d < bound; ++d)
            if (is_squarefree(d)) total += ferrero_lambda(d).lambda;
        benchmark::DoNotOptimize(total);
    }
}
BENCHMARK(BM_FerreroSweep)->Arg(500)->Arg(5000)->Unit(benchmark::kMillisecond);

static void BM_MainLambdaFermat(benchmark::State& state) {
    const int p = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(main_lambda(7 * 11 * 13, p));
}
BENCHMARK(BM_MainLambdaFermat)->Arg(2)->Arg(17)->Arg(257);
BENCHMARK_MAIN();
