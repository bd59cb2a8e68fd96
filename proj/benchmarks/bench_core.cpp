#include <benchmark/benchmark.h>

#include "ribbonfusion/fusion.hpp"
#include "ribbonfusion/llt.hpp"
#include "ribbonfusion/sl2.hpp"
#include "ribbonfusion/virasoro.hpp"

using namespace ribbonfusion;

static void BM_WeylReduce(benchmark::State& state) {
    Partition lambda = Partition::parse("12,2");
    for (auto _ : state) {
        auto res = weyl_reduce(lambda, 3, 5);
        benchmark::DoNotOptimize(res);
    }
}
BENCHMARK(BM_WeylReduce);

static void BM_QBinomial(benchmark::State& state) {
    const long long m = state.range(0);
    for (auto _ : state) {
        auto b = qbinomial(m, m / 2);
        benchmark::DoNotOptimize(b);
    }
}
BENCHMARK(BM_QBinomial)->Arg(16)->Arg(24)->Arg(32);

static void BM_HorizontalStripTiling(benchmark::State& state) {
    SkewShape skew(Partition::parse("6,5,4"), Partition());
    for (auto _ : state) {
        auto info = horizontal_strip_tiling(skew, 3);
        benchmark::DoNotOptimize(info);
    }
}
BENCHMARK(BM_HorizontalStripTiling);

static void BM_LltCospinCube(benchmark::State& state) {
    Partition shape = Partition::parse("6,6,6,3,3,3");
    for (auto _ : state) {
        auto g = llt_cospin(shape, 3, 4);
        benchmark::DoNotOptimize(g);
    }
}
BENCHMARK(BM_LltCospinCube)->Unit(benchmark::kMillisecond);

static void BM_KostkaFoulkes(benchmark::State& state) {
    Partition lambda = Partition::parse("4,3,2,1");
    Partition mu = Partition::parse("2,2,2,2,1,1");
    for (auto _ : state) {
        auto k = kostka_foulkes(lambda, mu);
        benchmark::DoNotOptimize(k);
    }
}
BENCHMARK(BM_KostkaFoulkes);

static void BM_RestrictedKostkaTwoRow(benchmark::State& state) {
    const long long N = state.range(0);
    std::vector<int> ones(static_cast<std::size_t>(2 * N), 1);
    Partition lambda({static_cast<int>(N), static_cast<int>(N)});
    Partition mu{std::move(ones)};
    for (auto _ : state) {
        auto k = restricted_kostka(lambda, mu, 2, 2);
        benchmark::DoNotOptimize(k);
    }
}
BENCHMARK(BM_RestrictedKostkaTwoRow)->Arg(4)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

static void BM_KbarClosed(benchmark::State& state) {
    for (auto _ : state) {
        auto k = kbar_closed(8, 2, 4);
        benchmark::DoNotOptimize(k);
    }
}
BENCHMARK(BM_KbarClosed);

static void BM_RochaCaridi(benchmark::State& state) {
    VirasoroLabel label(4, 2, 2);
    for (auto _ : state) {
        auto chi = rocha_caridi(label, 40);
        benchmark::DoNotOptimize(chi);
    }
}
BENCHMARK(BM_RochaCaridi);

BENCHMARK_MAIN();
