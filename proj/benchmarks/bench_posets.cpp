#include <benchmark/benchmark.h>

#include "simcore/gap_poset.hpp"
#include "simcore/verify.hpp"

using namespace simcore;

static void BM_BuildPoset(benchmark::State& state) {
    const long s = state.range(0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(build_gap_poset(GeneratorSet{s, s + 1}));
    }
}
BENCHMARK(BM_BuildPoset)->Arg(8)->Arg(16)->Arg(32);

// memoized count over the gap window
static void BM_CountIdealsPair(benchmark::State& state) {
    const long s = state.range(0);
    const GapPoset p = build_gap_poset(GeneratorSet{s, s + 1});
    for (auto _ : state) {
        benchmark::DoNotOptimize(count_lower_ideals(p));
    }
}
BENCHMARK(BM_CountIdealsPair)->Arg(6)->Arg(9)->Arg(12)->Unit(benchmark::kMillisecond);

static void BM_CountIdealsConsecutive(benchmark::State& state) {
    const GapPoset p = consecutive_poset(state.range(0), 2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(count_lower_ideals(p));
    }
}
BENCHMARK(BM_CountIdealsConsecutive)->Arg(8)->Arg(12)->Arg(14)->Unit(benchmark::kMillisecond);

static void BM_ListIdeals(benchmark::State& state) {
    const GapPoset p = consecutive_poset(state.range(0), 2);
    std::size_t n = 0;
    for (auto _ : state) {
        n = 0;
        for_each_lower_ideal(p, [&](const LowerIdeal&) { ++n; });
    }
    state.counters["ideals"] = static_cast<double>(n);
    state.SetItemsProcessed(static_cast<long>(n) * state.iterations());
}
BENCHMARK(BM_ListIdeals)->Arg(8)->Arg(10)->Arg(12);

static void BM_IdealToCore(benchmark::State& state) {
    const GapPoset p = build_gap_poset(GeneratorSet{7, 9});
    const auto ideals = enumerate_lower_ideals(p);
    for (auto _ : state) {
        for (const auto& i : ideals) {
            benchmark::DoNotOptimize(ideal_to_core(p, i));
        }
    }
    state.SetItemsProcessed(static_cast<long>(ideals.size()) * state.iterations());
}
BENCHMARK(BM_IdealToCore);

static void BM_CoresByHooksets(benchmark::State& state) {
    const long s = state.range(0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(enumerate_cores_by_hooksets(GeneratorSet{s, s + 1, s + 2}));
    }
}
BENCHMARK(BM_CoresByHooksets)->Arg(6)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);

static void BM_Conjecture(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(conjecture_total_size(state.range(0)));
    }
}
BENCHMARK(BM_Conjecture)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);
