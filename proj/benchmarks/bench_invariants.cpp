#include <benchmark/benchmark.h>

#include "wbu3/enumerate.hpp"

using namespace wbu3;

static void BM_colength_closed_form(benchmark::State& state) {
    Int l = state.range(0);
    for (auto _ : state)
        benchmark::DoNotOptimize(colength_closed_form(l, 7));
}
BENCHMARK(BM_colength_closed_form)->Arg(40)->Arg(400);

static void BM_colength_bruteforce(benchmark::State& state) {
    Int l = state.range(0);
    WeightTriple w(1, 7, l);
    for (auto _ : state)
        benchmark::DoNotOptimize(colength_bruteforce(w, l));
}
BENCHMARK(BM_colength_bruteforce)->Arg(40)->Arg(400);

static void BM_valuation_ideal(benchmark::State& state) {
    WeightTriple w(1, 7, 12);
    for (auto _ : state)
        benchmark::DoNotOptimize(valuation_ideal(w, state.range(0)));
}
BENCHMARK(BM_valuation_ideal)->Arg(19)->Arg(57);

static void BM_wbu_profile(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(wbu_profile(11, 12));
}
BENCHMARK(BM_wbu_profile);

static void BM_pair_sum_identity(benchmark::State& state) {
    QuotientSingularity q(25, 7);
    for (auto _ : state)
        for (Int i = 0; i < 25; ++i)
            benchmark::DoNotOptimize(contribution(q, i) + contribution(q, -i));
}
BENCHMARK(BM_pair_sum_identity);

static void BM_enumerate_baskets(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(enumerate_baskets(3, state.range(0)));
}
BENCHMARK(BM_enumerate_baskets)->Arg(8)->Arg(12);

BENCHMARK_MAIN();
