#include <benchmark/benchmark.h>

#include "simcore/gap_poset.hpp"
#include "simcore/matrix.hpp"
#include "simcore/verify.hpp"

using namespace simcore;

static Partition staircase(long n) {
    std::vector<long> parts;
    for (long i = n; i >= 1; --i) {
        parts.push_back(i);
    }
    return Partition(parts);
}

static void BM_KrewerasDet(benchmark::State& state) {
    const Partition lambda = staircase(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(kreweras_count(lambda));
    }
}
BENCHMARK(BM_KrewerasDet)->Arg(4)->Arg(8)->Arg(16)->Arg(32);

static void BM_QDet(benchmark::State& state) {
    const Partition lambda = staircase(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(qdet_coarea(lambda));
    }
}
BENCHMARK(BM_QDet)->Arg(4)->Arg(6)->Arg(8)->Arg(12);

static void BM_SubpartitionPolynomial(benchmark::State& state) {
    const Partition lambda = staircase(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(subpartition_size_polynomial(lambda));
    }
}
BENCHMARK(BM_SubpartitionPolynomial)->Arg(4)->Arg(6)->Arg(8);

static void BM_QBinomial(benchmark::State& state) {
    const long n = state.range(0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(q_binomial(n, n / 2));
    }
}
BENCHMARK(BM_QBinomial)->Arg(10)->Arg(20)->Arg(40);

static void BM_Hessenberg(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(hessenberg_catalan_det(state.range(0)));
    }
}
BENCHMARK(BM_Hessenberg)->Arg(6)->Arg(12)->Arg(24);

static void BM_GeneratingFunction(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(gf_coefficients(2, static_cast<std::size_t>(state.range(0))));
    }
}
BENCHMARK(BM_GeneratingFunction)->Arg(20)->Arg(40);

static void BM_MultiCatalan(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(multi_catalan_sequence(state.range(0), 3));
    }
}
BENCHMARK(BM_MultiCatalan)->Arg(50)->Arg(200);
