// Serial reference versus OpenMP kernels. Run with OMP_NUM_THREADS set to
// compare thread counts.

#include <benchmark/benchmark.h>

#include "dcell/cycle_census.hpp"
#include "dcell/serial.hpp"

namespace {

const dcell::Params kBuildParams{3, 2};

void BM_BuildGraphSerial(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(dcell::serial::build_graph(kBuildParams));
}
void BM_BuildGraphParallel(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(dcell::build_graph(kBuildParams));
}

void BM_CensusSerial(benchmark::State& state) {
    const auto topo = dcell::build_graph({2, 2});
    for (auto _ : state)
        benchmark::DoNotOptimize(dcell::serial::cycle_census(topo.graph(), static_cast<int>(state.range(0))));
}
void BM_CensusParallel(benchmark::State& state) {
    const auto topo = dcell::build_graph({2, 2});
    for (auto _ : state)
        benchmark::DoNotOptimize(dcell::cycle_census(topo.graph(), static_cast<int>(state.range(0))));
}

void BM_CertifyPairsSerial(benchmark::State& state) {
    const auto spec = dcell::HSpec::d1_wiring(static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(dcell::serial::certify_pairs(spec));
}
void BM_CertifyPairsParallel(benchmark::State& state) {
    const auto spec = dcell::HSpec::d1_wiring(static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(dcell::certify_pairs(spec));
}

} // namespace

BENCHMARK(BM_BuildGraphSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BuildGraphParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CensusSerial)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CensusParallel)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CertifyPairsSerial)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CertifyPairsParallel)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
