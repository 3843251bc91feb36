#include "qmex/overpartitions.hpp"
#include "qmex/qproducts.hpp"
#include "qmex/special.hpp"
#include "qmex/verify.hpp"

#include <benchmark/benchmark.h>

#include <random>

namespace {

using qmex::TruncatedSeries;

TruncatedSeries dense_series(std::size_t order, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> dist(-99, 99);
    TruncatedSeries s(order);
    for (std::size_t k = 0; k <= order; ++k) s.set_coefficient(k, dist(rng));
    return s;
}

void BM_SeriesMul(benchmark::State& state) {
    const auto order = static_cast<std::size_t>(state.range(0));
    const TruncatedSeries a = dense_series(order, 1);
    const TruncatedSeries b = dense_series(order, 2);
    for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_SeriesMul)->Arg(64)->Arg(256)->Arg(1000);

void BM_SeriesInverse(benchmark::State& state) {
    const auto order = static_cast<std::size_t>(state.range(0));
    TruncatedSeries a = dense_series(order, 3);
    a.set_coefficient(0, 1);
    for (auto _ : state) benchmark::DoNotOptimize(a.inverse());
}
BENCHMARK(BM_SeriesInverse)->Arg(64)->Arg(256)->Arg(1000);

void BM_OverpartitionGf(benchmark::State& state) {
    const auto order = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(qmex::overpartition_gf(order));
}
BENCHMARK(BM_OverpartitionGf)->Arg(200)->Arg(1000);

void BM_RRep3(benchmark::State& state) {
    const auto order = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(qmex::r_rep3(order));
}
BENCHMARK(BM_RRep3)->Arg(200)->Arg(500);

void BM_SigmaOmexGf(benchmark::State& state) {
    const auto order = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(qmex::sigma_omex_gf(order));
}
BENCHMARK(BM_SigmaOmexGf)->Arg(100)->Arg(200);

void BM_QBinomial(benchmark::State& state) {
    const long long n = state.range(0);
    for (auto _ : state)
        benchmark::DoNotOptimize(qmex::qbinomial(n, n / 2, static_cast<std::size_t>(n * n)));
}
BENCHMARK(BM_QBinomial)->Arg(20)->Arg(50);

void BM_Enumerate(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(qmex::count_overpartitions(n, false));
}
BENCHMARK(BM_Enumerate)->Arg(15)->Arg(20)->Arg(25);

void BM_VerifyCase(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(qmex::verify_case("thm2.series", 200, 0));
}
BENCHMARK(BM_VerifyCase);

}  // namespace

BENCHMARK_MAIN();
