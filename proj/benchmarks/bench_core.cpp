#include <benchmark/benchmark.h>

#include "zf/exact.hpp"
#include "zf/interpolation.hpp"
#include "zf/models.hpp"
#include "zf/patterns.hpp"
#include "zf/power_sums.hpp"
#include "zf/pseudo.hpp"

using namespace zf;

namespace {

void BM_PartitionHardcorePath12(benchmark::State& state) {
    auto g = build_hardcore(path_graph(12), Rat(1));
    for (auto _ : state) benchmark::DoNotOptimize(partition_exact(g));
}
BENCHMARK(BM_PartitionHardcorePath12);

void BM_PartitionColoringGrid33(benchmark::State& state) {
    auto g = build_proper_coloring(grid_graph(3, 3), 3);
    for (auto _ : state) benchmark::DoNotOptimize(partition_exact(g));
}
BENCHMARK(BM_PartitionColoringGrid33);

void BM_Type1PolynomialGrid34(benchmark::State& state) {
    auto g = build_hardcore(grid_graph(3, 4), Rat(1, 2));
    for (auto _ : state) benchmark::DoNotOptimize(type1_polynomial(g));
}
BENCHMARK(BM_Type1PolynomialGrid34);

void BM_Type2PolynomialPath8K3(benchmark::State& state) {
    auto g = build_proper_coloring(path_graph(8), 3);
    for (auto _ : state) benchmark::DoNotOptimize(type2_polynomial(g));
}
BENCHMARK(BM_Type2PolynomialPath8K3);

void BM_PowerSumsNewtonDeg10(benchmark::State& state) {
    std::vector<Rat> c{Rat(1)};
    for (int i = 1; i <= 10; ++i) c.push_back(make_rat(i % 3 == 0 ? -i : i, i + 1));
    RationalPolynomial p(std::move(c));
    for (auto _ : state) benchmark::DoNotOptimize(power_sums_newton(p, 10));
}
BENCHMARK(BM_PowerSumsNewtonDeg10);

void BM_PowerSumsGirardDeg10(benchmark::State& state) {
    std::vector<Rat> c{Rat(1)};
    for (int i = 1; i <= 10; ++i) c.push_back(make_rat(i % 3 == 0 ? -i : i, i + 1));
    RationalPolynomial p(std::move(c));
    for (auto _ : state) benchmark::DoNotOptimize(power_sums_girard(p, 10));
}
BENCHMARK(BM_PowerSumsGirardDeg10);

void BM_ConnectedEnumGrid44(benchmark::State& state) {
    auto gs = grid_graph(4, 4);
    for (auto _ : state) {
        long total = 0;
        connected_induced_subgraphs(gs, 5, [&](const std::vector<int>&) { ++total; });
        benchmark::DoNotOptimize(total);
    }
}
BENCHMARK(BM_ConnectedEnumGrid44);

void BM_BetaTableK4(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(beta_table_type1(4, Rat(1)));
}
BENCHMARK(BM_BetaTableK4);

void BM_Theorem1TypeIPath9(benchmark::State& state) {
    auto g = build_hardcore(path_graph(9), Rat(1));
    for (auto _ : state)
        benchmark::DoNotOptimize(theorem1_check(g, NodeSet::single(0), ColorAssignment{{0, 1}},
                                                4, InterpolationKind::TypeI, 2));
}
BENCHMARK(BM_Theorem1TypeIPath9);

void BM_Theorem1TypeIIPath7(benchmark::State& state) {
    auto g = build_proper_coloring(path_graph(7), 3);
    for (auto _ : state)
        benchmark::DoNotOptimize(theorem1_check(g, NodeSet::single(0), ColorAssignment{{0, 0}},
                                                2, InterpolationKind::TypeII, 1));
}
BENCHMARK(BM_Theorem1TypeIIPath7);

void BM_RhoPath9R3(benchmark::State& state) {
    auto g = build_hardcore(path_graph(9), Rat(1));
    for (auto _ : state) benchmark::DoNotOptimize(rho_R(g, NodeSet::single(4), 3));
}
BENCHMARK(BM_RhoPath9R3);

}  // namespace

BENCHMARK_MAIN();
