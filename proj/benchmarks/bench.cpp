// Microbenchmarks for the hot paths: cyclic development, full verification,
// the orbit trade scan, and the generic trade-graph bound.

#include <benchmark/benchmark.h>

#include "ssdd/catalog.hpp"
#include "ssdd/develop.hpp"
#include "ssdd/trades.hpp"
#include "ssdd/verify.hpp"

using namespace ssdd;

static void BM_develop_dd103(benchmark::State& state) {
    const CatalogEntry& e = catalog_get("dd-103");
    for (auto _ : state) benchmark::DoNotOptimize(develop(e.base_blocks, e.modulus));
}
BENCHMARK(BM_develop_dd103);

static void BM_verify_dd103(benchmark::State& state) {
    DirectedDesign d = *catalog_build("dd-103").plain;
    for (auto _ : state) benchmark::DoNotOptimize(full_report_dd(d).pass);
}
BENCHMARK(BM_verify_dd103);

static void BM_verify_dgdd_22pow4(benchmark::State& state) {
    GroupedDesign g = *catalog_build("dgdd-22pow4").grouped;
    for (auto _ : state) benchmark::DoNotOptimize(full_report_dgdd(g).pass);
}
BENCHMARK(BM_verify_dgdd_22pow4);

static void BM_orbit_scan_dd34(benchmark::State& state) {
    const CatalogEntry& e = catalog_get("dd-34");
    for (auto _ : state) benchmark::DoNotOptimize(orbit_trade_scan(e).bound);
}
BENCHMARK(BM_orbit_scan_dd34);

static void BM_orbit_scan_dd103(benchmark::State& state) {
    const CatalogEntry& e = catalog_get("dd-103");
    for (auto _ : state) benchmark::DoNotOptimize(orbit_trade_scan(e).bound);
}
BENCHMARK(BM_orbit_scan_dd103);

static void BM_generic_bound_dd22(benchmark::State& state) {
    DirectedDesign d = *catalog_build("dd-22").plain;
    for (auto _ : state) benchmark::DoNotOptimize(generic_bound(d).bound);
}
BENCHMARK(BM_generic_bound_dd22);

BENCHMARK_MAIN();
