#include <benchmark/benchmark.h>

#include "netfex/centrality.hpp"
#include "netfex/synthetic.hpp"

using namespace netfex;

namespace {

Adjacency synthetic_adjacency(std::size_t n, double p) {
    return generate_homophily_graph(n, 0.5, p, p / 4.0, {0.1, 1.0}, 42).adjacency();
}

void BM_Betweenness(benchmark::State& state) {
    Adjacency g = synthetic_adjacency(static_cast<std::size_t>(state.range(0)), 0.1);
    DirectionMode dir = state.range(1) == 0 ? DirectionMode::directed
                                            : DirectionMode::undirected_view;
    for (auto _ : state) {
        benchmark::DoNotOptimize(betweenness(g, dir));
    }
}
BENCHMARK(BM_Betweenness)->Args({100, 0})->Args({100, 1})->Args({200, 0})->Args({400, 0});

void BM_BetweennessThreads(benchmark::State& state) {
    Adjacency g = synthetic_adjacency(300, 0.1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(betweenness(g, DirectionMode::directed,
                                             static_cast<int>(state.range(0))));
    }
}
BENCHMARK(BM_BetweennessThreads)->Arg(1)->Arg(2)->Arg(4)->Arg(8);

void BM_DegreeCentrality(benchmark::State& state) {
    Adjacency g = synthetic_adjacency(static_cast<std::size_t>(state.range(0)), 0.1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(degree_centrality(g, DirectionMode::undirected_view));
    }
}
BENCHMARK(BM_DegreeCentrality)->Arg(200)->Arg(400);

void BM_ClusteringCoefficient(benchmark::State& state) {
    Adjacency g = synthetic_adjacency(static_cast<std::size_t>(state.range(0)), 0.1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(clustering_coefficient(g, DirectionMode::undirected_view));
    }
}
BENCHMARK(BM_ClusteringCoefficient)->Arg(200)->Arg(400);

}  // namespace

BENCHMARK_MAIN();
