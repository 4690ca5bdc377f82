// Serial reference kernels against their OpenMP counterparts.
#include "mpp/corpus.hpp"
#include "mpp/ehrhart.hpp"
#include "mpp/marked_polytopes.hpp"
#include "mpp/polytope.hpp"

#include <benchmark/benchmark.h>

namespace {

const mpp::HRepresentation& pm_order(int m)
{
    static std::map<int, mpp::HRepresentation> cache;
    auto it = cache.find(m);
    if (it == cache.end())
        it = cache.emplace(m, mpp::build_order_hrep(mpp::pm_family(m, 2))).first;
    return it->second;
}

void BM_vertices_serial(benchmark::State& state)
{
    const auto& h = pm_order(static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(mpp::enumerate_vertices_serial(h));
}

void BM_vertices_parallel(benchmark::State& state)
{
    const auto& h = pm_order(static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(mpp::enumerate_vertices(h));
}

void BM_count_serial(benchmark::State& state)
{
    const auto& h = pm_order(5);
    auto v = mpp::enumerate_vertices(h);
    for (auto _ : state)
        benchmark::DoNotOptimize(mpp::count_lattice_points_serial(h, v, state.range(0)));
}

void BM_count_parallel(benchmark::State& state)
{
    const auto& h = pm_order(5);
    auto v = mpp::enumerate_vertices(h);
    for (auto _ : state)
        benchmark::DoNotOptimize(mpp::count_lattice_points(h, v, state.range(0)));
}

void BM_formula_serial(benchmark::State& state)
{
    auto mp = mpp::pm_family(static_cast<int>(state.range(0)), 1);
    auto labeling = mpp::canonical_labeling(mp);
    for (auto _ : state)
        benchmark::DoNotOptimize(mpp::ehrhart_formula_marked_order_serial(mp, labeling));
}

void BM_formula_parallel(benchmark::State& state)
{
    auto mp = mpp::pm_family(static_cast<int>(state.range(0)), 1);
    auto labeling = mpp::canonical_labeling(mp);
    for (auto _ : state)
        benchmark::DoNotOptimize(mpp::ehrhart_formula_marked_order(mp, labeling));
}

}  // namespace

BENCHMARK(BM_vertices_serial)->Arg(4)->Arg(6);
BENCHMARK(BM_vertices_parallel)->Arg(4)->Arg(6);
BENCHMARK(BM_count_serial)->Arg(2)->Arg(4);
BENCHMARK(BM_count_parallel)->Arg(2)->Arg(4);
BENCHMARK(BM_formula_serial)->Arg(4)->Arg(6);
BENCHMARK(BM_formula_parallel)->Arg(4)->Arg(6);

BENCHMARK_MAIN();
