#include <benchmark/benchmark.h>

#include <algorithm>
#include <cstdint>
#include <vector>

#include "qmsort/qmsort.hpp"

namespace {

using Vec = std::vector<std::int64_t>;

Vec make_input(std::size_t n) {
    return qmsort::generate_input({qmsort::Distribution::random_perm, 0}, n, 42);
}

void BM_Variant(benchmark::State& state, qmsort::SortConfig cfg) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const Vec input = make_input(n);
    Vec v;
    for (auto _ : state) {
        state.PauseTiming();
        v = input;
        state.ResumeTiming();
        qmsort::sort(v.begin(), v.end(), cfg);
        benchmark::DoNotOptimize(v.data());
    }
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) *
                            static_cast<std::int64_t>(n));
}

void BM_StdSort(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const Vec input = make_input(n);
    Vec v;
    for (auto _ : state) {
        state.PauseTiming();
        v = input;
        state.ResumeTiming();
        std::sort(v.begin(), v.end());
        benchmark::DoNotOptimize(v.data());
    }
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) *
                            static_cast<std::int64_t>(n));
}

void BM_BlockPartition(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto block = static_cast<std::size_t>(state.range(1));
    const Vec input = make_input(n);
    Vec v;
    qmsort::Metrics m;
    qmsort::CountingComparator<std::less<>> cmp(m);
    for (auto _ : state) {
        state.PauseTiming();
        v = input;
        state.ResumeTiming();
        qmsort::block_partition(v.begin(), v.end(), n / 2, block, cmp, m);
        benchmark::DoNotOptimize(v.data());
    }
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) *
                            static_cast<std::int64_t>(n));
}

void BM_SelectMedian(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const Vec input = make_input(n);
    Vec v;
    qmsort::Metrics m;
    qmsort::CountingComparator<std::less<>> cmp(m);
    for (auto _ : state) {
        state.PauseTiming();
        v = input;
        state.ResumeTiming();
        const auto p = qmsort::select_nth(v.begin(), v.end(), n / 2, cmp, m);
        benchmark::DoNotOptimize(p);
    }
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) *
                            static_cast<std::int64_t>(n));
}

} // namespace

BENCHMARK_CAPTURE(BM_Variant, qms, qmsort::qms())->Range(1 << 10, 1 << 22);
BENCHMARK_CAPTURE(BM_Variant, qmqs, qmsort::qmqs())->Range(1 << 10, 1 << 22);
BENCHMARK_CAPTURE(BM_Variant, momqms, qmsort::momqms())->Range(1 << 10, 1 << 22);
BENCHMARK_CAPTURE(BM_Variant, hqms, qmsort::hqms())->Range(1 << 10, 1 << 22);
BENCHMARK(BM_StdSort)->Range(1 << 10, 1 << 22);
BENCHMARK(BM_BlockPartition)->Args({1 << 20, 16})->Args({1 << 20, 128})->Args({1 << 20, 512});
BENCHMARK(BM_SelectMedian)->Range(1 << 12, 1 << 22);

BENCHMARK_MAIN();
