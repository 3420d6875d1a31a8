#include <benchmark/benchmark.h>

#include <vector>

#include "hkgic/hkregion.hpp"
#include "hkgic/macgeom.hpp"

using namespace hkgic;

namespace {

const GicChannel kChannel(6, 6, 0.25, 0.25, 1, 1);

HkInstance instance() { return build_instance(kChannel, PowerSplit::from_private_fractions(kChannel, 0.3, 0.6)); }

void BM_ComputeBounds(benchmark::State& state) {
    const auto split = PowerSplit::from_private_fractions(kChannel, 0.3, 0.6);
    for (auto _ : state) benchmark::DoNotOptimize(compute_bounds(kChannel, split));
}
BENCHMARK(BM_ComputeBounds);

void BM_Maximize(benchmark::State& state) {
    const auto inst = instance();
    const std::vector<double> c{1, 2, 1, 2};
    for (auto _ : state) benchmark::DoNotOptimize(maximize(inst.polytope, c));
}
BENCHMARK(BM_Maximize);

void BM_ProjectR1R2(benchmark::State& state) {
    const auto inst = instance();
    for (auto _ : state) benchmark::DoNotOptimize(project_r1r2(inst));
}
BENCHMARK(BM_ProjectR1R2);

void BM_MacProjections(benchmark::State& state) {
    const auto inst = instance();
    for (auto _ : state) benchmark::DoNotOptimize(build_mac_projections(inst));
}
BENCHMARK(BM_MacProjections);

void BM_VerifyClaims(benchmark::State& state) {
    const auto inst = instance();
    for (auto _ : state) benchmark::DoNotOptimize(verify_claims(inst));
}
BENCHMARK(BM_VerifyClaims);

void BM_RegionUnion(benchmark::State& state) {
    const int k = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(region_union(kChannel, k));
}
BENCHMARK(BM_RegionUnion)->Arg(5)->Arg(11)->Arg(21)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
