#include <benchmark/benchmark.h>

#include "mds/generators.hpp"
#include "mds/greedy.hpp"
#include "mds/lp.hpp"

namespace {

void BM_GreedyKTree(benchmark::State& state) {
    auto g = mds::random_ktree(static_cast<std::size_t>(state.range(0)), 5, 1);
    for (auto _ : state) {
        auto result = mds::greedy_dominating_set(g);
        benchmark::DoNotOptimize(result.ordered_selection.data());
    }
}
BENCHMARK(BM_GreedyKTree)->Arg(2000)->Arg(20000)->Unit(benchmark::kMillisecond);

void BM_GreedyHypercube(benchmark::State& state) {
    auto g = mds::hypercube(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        auto result = mds::greedy_dominating_set(g);
        benchmark::DoNotOptimize(result.ordered_selection.data());
    }
}
BENCHMARK(BM_GreedyHypercube)->Arg(10)->Arg(12)->Unit(benchmark::kMillisecond);

void BM_BuildLp1(benchmark::State& state) {
    auto g = mds::random_ktree(static_cast<std::size_t>(state.range(0)), 5, 1);
    for (auto _ : state) {
        auto model = mds::build_lp1(g);
        benchmark::DoNotOptimize(model.rows.data());
    }
}
BENCHMARK(BM_BuildLp1)->Arg(2000)->Arg(20000)->Unit(benchmark::kMillisecond);

void BM_QueensGenerate(benchmark::State& state) {
    for (auto _ : state) {
        auto g = mds::queens(static_cast<int>(state.range(0)));
        benchmark::DoNotOptimize(g.num_edges());
    }
}
BENCHMARK(BM_QueensGenerate)->Arg(15)->Arg(30)->Unit(benchmark::kMillisecond);

void BM_SolveLp1KTree(benchmark::State& state) {
    auto g = mds::random_ktree(static_cast<std::size_t>(state.range(0)), 5, 1);
    auto model = mds::build_lp1(g);
    for (auto _ : state) {
        auto sol = mds::solve_lp(model);
        benchmark::DoNotOptimize(sol.objective);
    }
}
BENCHMARK(BM_SolveLp1KTree)->Arg(2000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
