// Benchmarks for the hot paths: oversemigroup enumeration, the cover search
// behind minimal_factorizations, family construction, the semigroup tree,
// and the parallel interval scan.

#include <benchmark/benchmark.h>

#include "nsfact/explorer.hpp"
#include "nsfact/factorization.hpp"
#include "nsfact/families.hpp"
#include "nsfact/oversemigroups.hpp"
#include "nsfact/semigroup.hpp"

namespace {

void BM_Oversemigroups(benchmark::State& state) {
    const auto s = nsfact::s_family(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(nsfact::oversemigroups(s));
}
BENCHMARK(BM_Oversemigroups)->Arg(11)->Arg(15)->Arg(19)->Arg(23)->Unit(benchmark::kMillisecond);

void BM_MinimalFactorizations(benchmark::State& state) {
    const auto s = nsfact::s_family(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(nsfact::minimal_factorizations(s));
}
BENCHMARK(BM_MinimalFactorizations)->Arg(11)->Arg(15)->Arg(19)->Arg(23)->Unit(benchmark::kMillisecond);

void BM_FullFactorization(benchmark::State& state) {
    const int i = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(nsfact::full_factorization(i));
}
BENCHMARK(BM_FullFactorization)->Arg(99)->Arg(199)->Unit(benchmark::kMillisecond);

void BM_EnumerateByGenus(benchmark::State& state) {
    for (auto _ : state) {
        long long count = 0;
        nsfact::enumerate_by_genus(static_cast<int>(state.range(0)),
                                   [&](const nsfact::NumericalSemigroup&) { ++count; });
        benchmark::DoNotOptimize(count);
    }
}
BENCHMARK(BM_EnumerateByGenus)->Arg(8)->Arg(10)->Arg(12)->Unit(benchmark::kMillisecond);

void BM_ScanIntervals(benchmark::State& state) {
    nsfact::ScanOptions options;
    options.g_max = static_cast<int>(state.range(0));
    options.threads = static_cast<int>(state.range(1));
    for (auto _ : state) {
        unsigned long long rows = 0;
        const auto summary =
            nsfact::scan_intervals(options, [&](const nsfact::ScanRow&) { ++rows; });
        benchmark::DoNotOptimize(summary);
        benchmark::DoNotOptimize(rows);
    }
}
BENCHMARK(BM_ScanIntervals)
    ->Args({10, 1})
    ->Args({10, 4})
    ->Args({12, 1})
    ->Args({12, 4})
    ->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
