#include <benchmark/benchmark.h>

#include "simcore/gd_path.hpp"
#include "simcore/rect_path.hpp"

using namespace simcore;

static void BM_EnumerateRect(benchmark::State& state) {
    const long s = state.range(0);
    std::size_t n = 0;
    for (auto _ : state) {
        n = 0;
        for_each_rect_path(s, s + 1, [&](const RectPath&) { ++n; });
    }
    state.SetItemsProcessed(static_cast<long>(n) * state.iterations());
}
BENCHMARK(BM_EnumerateRect)->Arg(6)->Arg(8)->Arg(10);

static void BM_CoareaPolynomial(benchmark::State& state) {
    const long s = state.range(0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(coarea_polynomial(s, s + 1));
    }
}
BENCHMARK(BM_CoareaPolynomial)->Arg(6)->Arg(8);

static void BM_EnumerateGd(benchmark::State& state) {
    const long n = state.range(0);
    const long k = state.range(1);
    std::size_t count = 0;
    for (auto _ : state) {
        count = 0;
        for_each_gd(n, k, [&](const GeneralizedDyckPath&) { ++count; });
    }
    state.SetItemsProcessed(static_cast<long>(count) * state.iterations());
}
BENCHMARK(BM_EnumerateGd)->Args({8, 2})->Args({10, 3})->Args({12, 4});

static void BM_GdToIdeal(benchmark::State& state) {
    const auto paths = enumerate_gd(state.range(0), state.range(1));
    for (auto _ : state) {
        for (const auto& p : paths) {
            benchmark::DoNotOptimize(gd_to_ideal(p));
        }
    }
    state.SetItemsProcessed(static_cast<long>(paths.size()) * state.iterations());
}
BENCHMARK(BM_GdToIdeal)->Args({6, 2})->Args({8, 3});

static void BM_CountGd(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(count_gd(state.range(0), 3));
    }
}
BENCHMARK(BM_CountGd)->Arg(20)->Arg(100);
