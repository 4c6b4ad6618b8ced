#include <benchmark/benchmark.h>

#include "monowidth/oracles.hpp"
#include "monowidth/search.hpp"
#include "monowidth/translations.hpp"

using namespace mw;

static void BM_TreeWidthCycle(benchmark::State& state) {
    Graph g = make_cycle(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(exact_treewidth(g).width);
}
BENCHMARK(BM_TreeWidthCycle)->DenseRange(4, 8, 2);

static void BM_PathWidthComplete(benchmark::State& state) {
    Graph g = make_complete(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(exact_pathwidth(g).width);
}
BENCHMARK(BM_PathWidthComplete)->DenseRange(3, 6);

static void BM_BranchWidthCycle(benchmark::State& state) {
    Graph g = make_cycle(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(exact_branchwidth(g).width);
}
BENCHMARK(BM_BranchWidthCycle)->DenseRange(3, 7);

static void BM_SearchAny(benchmark::State& state) {
    Cospan c = sourced_cospan(make_cycle(static_cast<int>(state.range(0))), {});
    for (auto _ : state) benchmark::DoNotOptimize(bounded_mwd_search(c).width);
}
BENCHMARK(BM_SearchAny)->DenseRange(3, 5);

static void BM_TreeToMonoidal(benchmark::State& state) {
    Graph g = make_complete(static_cast<int>(state.range(0)));
    SourcedGraph gamma{g, {}};
    RecTreeDec t = exact_treewidth(g).recursive;
    for (auto _ : state) benchmark::DoNotOptimize(t_to_mdec(t, gamma).width());
}
BENCHMARK(BM_TreeToMonoidal)->DenseRange(3, 6);

static void BM_CopyMdec(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    std::vector<DecompTree> ids(static_cast<std::size_t>(n), id_leaf(1));
    DecompTree d = tensor_all(ids);
    std::vector<int> xs(static_cast<std::size_t>(n), 1);
    for (auto _ : state) benchmark::DoNotOptimize(copy_mdec(d, 0, xs, 0).width());
}
BENCHMARK(BM_CopyMdec)->DenseRange(1, 8);
BENCHMARK_MAIN();
