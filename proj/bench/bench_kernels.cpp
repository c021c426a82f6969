// Serial reference kernels against their OpenMP counterparts, plus the four
// search algorithms on a mid-size random graph.

#include <benchmark/benchmark.h>

#include <map>
#include <random>

#include "spcs/baselines.hpp"
#include "spcs/core_decomp.hpp"
#include "spcs/engine.hpp"
#include "spcs/generators.hpp"
#include "spcs/oracle.hpp"

namespace {

const spcs::Graph& random_graph(spcs::NodeId n, std::size_t m) {
    static std::map<std::pair<spcs::NodeId, std::size_t>, spcs::Graph> cache;
    auto it = cache.find({n, m});
    if (it == cache.end()) {
        std::mt19937_64 rng(n ^ m);
        it = cache.emplace(std::make_pair(n, m), spcs::gen::connected_gnm(n, m, rng)).first;
    }
    return it->second;
}

void BM_CoreDecomposeSerial(benchmark::State& state) {
    const auto& g = random_graph(static_cast<spcs::NodeId>(state.range(0)), state.range(0) * 10);
    for (auto _ : state) benchmark::DoNotOptimize(spcs::core_decompose(g));
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(g.edge_count()));
}

void BM_CoreDecomposeParallel(benchmark::State& state) {
    const auto& g = random_graph(static_cast<spcs::NodeId>(state.range(0)), state.range(0) * 10);
    for (auto _ : state) benchmark::DoNotOptimize(spcs::core_decompose_parallel(g));
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(g.edge_count()));
}

void BM_OracleSerial(benchmark::State& state) {
    const auto& g = random_graph(22, 90);
    for (auto _ : state) benchmark::DoNotOptimize(spcs::exact_spcs(g, static_cast<std::size_t>(state.range(0))));
}

void BM_OracleParallel(benchmark::State& state) {
    const auto& g = random_graph(22, 90);
    for (auto _ : state)
        benchmark::DoNotOptimize(spcs::exact_spcs_parallel(g, static_cast<std::size_t>(state.range(0))));
}

void BM_Search(benchmark::State& state) {
    const auto& g = random_graph(5'000, 50'000);
    static const spcs::CorenessTable ct = spcs::core_decompose(g);
    const std::size_t t = g.node_count() / 10;
    std::uint64_t seed = 0;
    for (auto _ : state) {
        switch (state.range(0)) {
            case 0: {
                spcs::StrategyParams p;
                benchmark::DoNotOptimize(spcs::tsize_kcore(g, ct, t, p, seed++));
                break;
            }
            case 1: {
                spcs::StrategyParams p;
                p.strategy = spcs::Strategy::bottom_up;
                benchmark::DoNotOptimize(spcs::tsize_kcore(g, ct, t, p, seed++));
                break;
            }
            case 2: benchmark::DoNotOptimize(spcs::critical_search(g, ct, t, seed++)); break;
            default: benchmark::DoNotOptimize(spcs::s_greedy_search(g, ct, t, seed++)); break;
        }
    }
    static const char* names[] = {"td", "bu", "critical", "sgreedy"};
    state.SetLabel(names[state.range(0)]);
}

}  // namespace

BENCHMARK(BM_CoreDecomposeSerial)->Arg(10'000)->Arg(100'000)->Arg(1'000'000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CoreDecomposeParallel)->Arg(10'000)->Arg(100'000)->Arg(1'000'000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_OracleSerial)->Arg(6)->Arg(9)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_OracleParallel)->Arg(6)->Arg(9)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Search)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
