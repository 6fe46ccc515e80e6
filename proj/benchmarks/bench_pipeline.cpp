#include <benchmark/benchmark.h>

#include "netfex/boosting.hpp"
#include "netfex/dataset.hpp"
#include "netfex/evaluate.hpp"
#include "netfex/ingest.hpp"
#include "netfex/label_features.hpp"
#include "netfex/synthetic.hpp"

using namespace netfex;

namespace {

LabeledGraph reference_graph() {
    return generate_homophily_graph(200, 0.5, 0.15, 0.03, {0.1, 1.0}, 7);
}

void BM_AugmentedLift(benchmark::State& state) {
    LabeledGraph g = reference_graph();
    StructuralMeasure measure = [](const Adjacency& a, DirectionMode d) {
        return betweenness(a, d);
    };
    for (auto _ : state) {
        benchmark::DoNotOptimize(lift(measure, "betweenness", g, "1",
                                      DirectionMode::undirected_view, LiftMode::augmented,
                                      static_cast<int>(state.range(0))));
    }
}
BENCHMARK(BM_AugmentedLift)->Arg(1)->Arg(4);

void BM_BuildFeatureSet3(benchmark::State& state) {
    LabeledGraph g = reference_graph();
    RunConfig config;
    config.threads = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(build_features(g, FeatureSetId::label_dependent, config));
    }
}
BENCHMARK(BM_BuildFeatureSet3)->Arg(1)->Arg(4);

void BM_CoattendanceProjection(benchmark::State& state) {
    std::vector<AttendanceRecord> records;
    std::mt19937_64 rng(3);
    const std::size_t people = static_cast<std::size_t>(state.range(0));
    for (std::size_t p = 0; p < people; ++p) {
        for (int t = 0; t < 60; ++t) {
            if (uniform01(rng) < 0.15) {
                records.push_back({"p" + std::to_string(p), "t" + std::to_string(t)});
            }
        }
    }
    for (auto _ : state) {
        benchmark::DoNotOptimize(project_coattendance(records));
    }
}
BENCHMARK(BM_CoattendanceProjection)->Arg(100)->Arg(300);

void BM_AdaBoostTrain(benchmark::State& state) {
    LabeledGraph g = reference_graph();
    RunConfig config;
    FeatureMatrix m = build_features(g, FeatureSetId::combined, config);
    std::vector<std::size_t> rows(m.rows.size());
    for (std::size_t r = 0; r < rows.size(); ++r) rows[r] = r;
    for (auto _ : state) {
        benchmark::DoNotOptimize(train_adaboost(m, rows, 10, 100.0));
    }
}
BENCHMARK(BM_AdaBoostTrain);

void BM_CrossValidateSet3(benchmark::State& state) {
    LabeledGraph g = reference_graph();
    RunConfig config;
    config.folds = 10;
    config.seed = 7;
    config.threads = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(cross_validate(g, FeatureSetId::label_dependent, config));
    }
}
BENCHMARK(BM_CrossValidateSet3)->Arg(0);

}  // namespace

BENCHMARK_MAIN();
