// Compares the OpenMP conflict scan against the serial quadratic reference,
// and measures the scan's thread scaling on a large instance.
//
//   ./bench_verify [--benchmark_filter=...]

#include <benchmark/benchmark.h>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "ctc/circulant.hpp"
#include "ctc/schemes.hpp"
#include "ctc/verifier.hpp"

namespace {

// A verified 5-coloring on C_n(1,4); the order-5p case-1 construction is O(n).
std::pair<ctc::circulant_graph, ctc::total_coloring> instance(int n) {
    ctc::circulant_graph g = ctc::build(n, 1, 4);
    ctc::total_coloring c = ctc::color_five_p(g, ctc::scheme_id::five_p_case1);
    return {std::move(g), std::move(c)};
}

void BM_verify(benchmark::State& state) {
    auto [g, c] = instance(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        auto report = ctc::verify(g, c);
        benchmark::DoNotOptimize(report.valid);
    }
    state.SetItemsProcessed(state.iterations() * 3 * g.n);
}

void BM_verify_reference(benchmark::State& state) {
    auto [g, c] = instance(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        auto report = ctc::verify_reference(g, c);
        benchmark::DoNotOptimize(report.valid);
    }
    state.SetItemsProcessed(state.iterations() * 3 * g.n);
}

void BM_verify_threads(benchmark::State& state) {
#ifdef _OPENMP
    omp_set_num_threads(static_cast<int>(state.range(0)));
#endif
    auto [g, c] = instance(500'000);
    for (auto _ : state) {
        auto report = ctc::verify(g, c);
        benchmark::DoNotOptimize(report.valid);
    }
#ifdef _OPENMP
    omp_set_num_threads(omp_get_num_procs());
#endif
}

} // namespace

// Common sizes for a direct parallel-vs-reference comparison, then the scan
// alone at sizes the quadratic reference cannot reach.
BENCHMARK(BM_verify_reference)->Arg(200)->Arg(1000)->Arg(3000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_verify)->Arg(200)->Arg(1000)->Arg(3000)->Arg(100'000)->Arg(1'000'000)
    ->Unit(benchmark::kMillisecond);
BENCHMARK(BM_verify_threads)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
