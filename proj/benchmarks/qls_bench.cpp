#include "qls/builder.hpp"
#include "qls/catalog.hpp"
#include "qls/phase_class.hpp"
#include "qls/square.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace qls;

void bm_census_maximal_order6(benchmark::State& state) {
    auto cells = catalog::w0().flat_cells();
    for (auto _ : state) {
        auto card = Census::of(cells).cardinality();
        benchmark::DoNotOptimize(card);
    }
}
BENCHMARK(bm_census_maximal_order6);

void bm_plan_order18(benchmark::State& state) {
    for (auto _ : state) {
        auto p = builder::plan(3, 200);
        benchmark::DoNotOptimize(p.predicted_cardinality);
    }
}
BENCHMARK(bm_plan_order18);

void bm_build_order18(benchmark::State& state) {
    for (auto _ : state) {
        auto q = builder::build(3, 200, false);
        benchmark::DoNotOptimize(q.order);
    }
}
BENCHMARK(bm_build_order18);

void bm_census_order18(benchmark::State& state) {
    auto cells = builder::build(3, 200, false).flat_cells();
    for (auto _ : state) {
        auto card = Census::of(cells).cardinality();
        benchmark::DoNotOptimize(card);
    }
}
BENCHMARK(bm_census_order18);

void bm_verify_order18(benchmark::State& state) {
    auto q = builder::build(3, 200, false);
    for (auto _ : state) {
        auto report = verify(q);
        benchmark::DoNotOptimize(report.cardinality);
    }
}
BENCHMARK(bm_verify_order18);

void bm_census_order18_threaded(benchmark::State& state) {
    auto cells = builder::build(3, 200, false).flat_cells();
    int threads = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto card = Census::of(cells, threads).cardinality();
        benchmark::DoNotOptimize(card);
    }
}
BENCHMARK(bm_census_order18_threaded)->Arg(1)->Arg(2)->Arg(4);

} // namespace

BENCHMARK_MAIN();
