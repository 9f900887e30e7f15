// Compares the plain bounding-box reference scan with the facet-guided
// kernel, serial and OpenMP-parallel, on representative dilates.

#include <benchmark/benchmark.h>

#include "ehrhart/constructions.hpp"
#include "ehrhart/enumerate.hpp"

using namespace ehrhart;

namespace {

const LatticePolytope& medium() {
    static LatticePolytope p = dilate(standard_reflexive_simplex(4), 2);
    return p;
}

const LatticePolytope& tensor8() {
    static LatticePolytope p =
        henk_tagami_tensor(henk_tagami_example(), standard_reflexive_simplex(2));
    return p;
}

void bm_reference(benchmark::State& state) {
    ScanOptions opts;
    opts.max_candidates = 1'000'000'000LL;
    for (auto _ : state) {
        auto c = reference::count_lattice_points(medium(), state.range(0), opts);
        benchmark::DoNotOptimize(c.all);
    }
}

void bm_pruned_serial(benchmark::State& state) {
    ScanOptions opts;
    opts.max_candidates = 1'000'000'000LL;
    opts.parallel = false;
    for (auto _ : state) {
        auto c = count_lattice_points(medium(), state.range(0), opts);
        benchmark::DoNotOptimize(c.all);
    }
}

void bm_pruned_parallel(benchmark::State& state) {
    ScanOptions opts;
    opts.max_candidates = 1'000'000'000LL;
    for (auto _ : state) {
        auto c = count_lattice_points(medium(), state.range(0), opts);
        benchmark::DoNotOptimize(c.all);
    }
}

void bm_tensor8_serial(benchmark::State& state) {
    ScanOptions opts;
    opts.max_candidates = 1'000'000'000LL;
    opts.parallel = false;
    for (auto _ : state) {
        auto c = count_lattice_points(tensor8(), 8, opts);
        benchmark::DoNotOptimize(c.all);
    }
}

void bm_tensor8_parallel(benchmark::State& state) {
    ScanOptions opts;
    opts.max_candidates = 1'000'000'000LL;
    for (auto _ : state) {
        auto c = count_lattice_points(tensor8(), 8, opts);
        benchmark::DoNotOptimize(c.all);
    }
}

} // namespace

BENCHMARK(bm_reference)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_pruned_serial)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_pruned_parallel)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_tensor8_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_tensor8_parallel)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
