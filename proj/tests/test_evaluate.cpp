#include <doctest.h>

#include <cmath>
#include <set>
#include <sstream>

#include "netfex/evaluate.hpp"
#include "netfex/ingest.hpp"
#include "netfex/label_features.hpp"
#include "netfex/synthetic.hpp"
#include "test_support.hpp"

using namespace netfex;
using namespace netfex::testing;

namespace {

double class_prior(const LabeledGraph& g) {
    std::size_t ones = 0, labeled = 0;
    for (NodeId v = 0; v < g.node_count(); ++v) {
        if (!g.label(v)) continue;
        ++labeled;
        if (*g.label(v) == "1") ++ones;
    }
    double p = static_cast<double>(ones) / static_cast<double>(labeled);
    return std::max(p, 1.0 - p);
}

std::string serialize_report(const EvalReport& r) {
    std::ostringstream out;
    write_report_csv(r, out);
    return out.str();
}

}  // namespace

TEST_SUITE("eval_harness") {

TEST_CASE("metrics of an all-correct fold are all 1") {
    FoldMetrics m = metrics_from_counts(4, 0, 6, 0);
    CHECK(m.accuracy == 1.0);
    CHECK(m.precision == 1.0);
    CHECK(m.f_measure == 1.0);
}

TEST_CASE("precision and f-measure fall back to 0 when undefined") {
    FoldMetrics no_positive_predictions = metrics_from_counts(0, 0, 5, 5);
    CHECK(no_positive_predictions.precision == 0.0);
    CHECK(no_positive_predictions.f_measure == 0.0);

    FoldMetrics all_wrong = metrics_from_counts(0, 5, 0, 5);
    CHECK(all_wrong.accuracy == 0.0);
    CHECK(all_wrong.f_measure == 0.0);
}

TEST_CASE("stratified folds balance each class and reject bad inputs") {
    LabeledGraph g = generate_homophily_graph(60, 0.3, 0.2, 0.05, {0.1, 1.0}, 8);
    CHECK_THROWS_AS(stratified_folds(g, 1, 1), std::invalid_argument);

    std::vector<int> folds = stratified_folds(g, 5, 42);
    std::map<std::string, std::map<int, int>> per_class_fold_counts;
    for (NodeId v = 0; v < g.node_count(); ++v) {
        REQUIRE(g.label(v).has_value());
        CHECK(folds[v] >= 0);
        CHECK(folds[v] < 5);
        per_class_fold_counts[*g.label(v)][folds[v]]++;
    }
    for (const auto& [cls, counts] : per_class_fold_counts) {
        int lo = 1 << 30, hi = 0;
        for (const auto& [fold, count] : counts) {
            lo = std::min(lo, count);
            hi = std::max(hi, count);
        }
        CHECK(hi - lo <= 1);  // round-robin keeps folds within one member
    }

    CHECK(stratified_folds(g, 5, 42) == folds);       // same seed, same folds
    CHECK(stratified_folds(g, 5, 43) != folds);       // different seed shuffles
}

TEST_CASE("unlabeled nodes stay out of the folds") {
    LabeledGraph g = generate_homophily_graph(40, 0.5, 0.2, 0.05, {0.1, 1.0}, 3);
    LabeledGraph masked = mask_labels(g, {0, 1, 2, 3});
    std::vector<int> folds = stratified_folds(masked, 4, 7);
    for (NodeId v = 0; v < 4; ++v) CHECK(folds[v] == -1);
}

TEST_CASE("homophilous label-dependent features separate the classes") {
    LabeledGraph g = generate_homophily_graph(120, 0.5, 0.2, 0.03, {0.1, 1.0}, 7);
    RunConfig config;
    config.folds = 10;
    config.seed = 7;
    EvalReport report = cross_validate(g, FeatureSetId::label_dependent, config);
    CHECK(report.mean.accuracy >= 0.95);
    CHECK_FALSE(report.degenerate);
}

TEST_CASE("random labels give accuracy near the class prior") {
    // p_in == p_out: the network carries no label signal at all.
    LabeledGraph g = generate_homophily_graph(120, 0.5, 0.08, 0.08, {0.1, 1.0}, 19);
    RunConfig config;
    config.folds = 10;
    config.seed = 19;
    EvalReport report = cross_validate(g, FeatureSetId::label_dependent, config);
    CHECK(std::abs(report.mean.accuracy - class_prior(g)) <= 0.1);
}

TEST_CASE("fully disassortative weights keep ncn of the true class at 1") {
    // p_out = 0: labeled neighbors always share the node's class.
    LabeledGraph g = generate_homophily_graph(50, 0.5, 0.5, 0.0, {0.1, 1.0}, 23);
    for (NodeId v = 0; v < g.node_count(); ++v) {
        if (g.neighbors(v, DirectionMode::undirected_view).empty()) continue;
        auto value = ncn(g, *g.label(v), v, DirectionMode::undirected_view);
        REQUIRE(value.has_value());
        CHECK(*value == 1.0);
    }
}

TEST_CASE("seed 7 reference graph has under 5% isolated nodes") {
    LabeledGraph g = generate_homophily_graph(200, 0.5, 0.15, 0.03, {0.1, 1.0}, 7);
    std::size_t isolated = 0;
    for (NodeId v = 0; v < g.node_count(); ++v) {
        if (g.neighbors(v, DirectionMode::undirected_view).empty()) ++isolated;
    }
    CHECK(static_cast<double>(isolated) / 200.0 < 0.05);
}

TEST_CASE("generator validates probabilities") {
    CHECK_THROWS_AS(generate_homophily_graph(10, 0.5, 0.1, 0.2, {0.1, 1.0}, 1),
                    std::invalid_argument);
    CHECK_THROWS_AS(generate_homophily_graph(10, 0.5, 1.2, 0.1, {0.1, 1.0}, 1),
                    std::invalid_argument);
    CHECK_THROWS_AS(generate_homophily_graph(10, 1.5, 0.2, 0.1, {0.1, 1.0}, 1),
                    std::invalid_argument);
    CHECK_THROWS_AS(generate_homophily_graph(10, 0.5, 0.2, 0.1, {1.0, 0.1}, 1),
                    std::invalid_argument);
}

TEST_CASE("generator is deterministic per seed") {
    LabeledGraph a = generate_homophily_graph(40, 0.5, 0.2, 0.05, {0.1, 1.0}, 11);
    LabeledGraph b = generate_homophily_graph(40, 0.5, 0.2, 0.05, {0.1, 1.0}, 11);
    std::ostringstream ea, eb;
    write_edge_list(a, ea);
    write_edge_list(b, eb);
    CHECK(ea.str() == eb.str());
    for (NodeId v = 0; v < a.node_count(); ++v) CHECK(a.label(v) == b.label(v));

    LabeledGraph c = generate_homophily_graph(40, 0.5, 0.2, 0.05, {0.1, 1.0}, 12);
    std::ostringstream ec;
    write_edge_list(c, ec);
    CHECK(ea.str() != ec.str());
}

TEST_CASE("cross-validation is bit-reproducible for a fixed seed") {
    LabeledGraph g = generate_homophily_graph(60, 0.5, 0.2, 0.05, {0.1, 1.0}, 31);
    RunConfig config;
    config.folds = 5;
    config.seed = 31;
    EvalReport a = cross_validate(g, FeatureSetId::label_dependent, config);
    EvalReport b = cross_validate(g, FeatureSetId::label_dependent, config);
    CHECK(serialize_report(a) == serialize_report(b));
}

TEST_CASE("cross-validation needs enough labeled nodes per fold") {
    LabeledGraph g = make_graph(3, {{0, 1, 1.0}}, {"0", "1", ""});
    RunConfig config;
    config.folds = 10;
    CHECK_THROWS_AS(cross_validate(g, FeatureSetId::structural, config), std::invalid_argument);
}

TEST_CASE("degenerate flag raised when a class never occurs") {
    std::vector<std::string> labels(20, "0");
    LabeledGraph g = make_graph(20, {{0, 1, 1.0}, {2, 3, 1.0}}, labels, {"0", "1"});
    RunConfig config;
    config.folds = 2;
    EvalReport report = cross_validate(g, FeatureSetId::structural, config);
    CHECK(report.degenerate);
}

TEST_CASE("transductive evaluation scores at least as high as fold-masked") {
    LabeledGraph g = generate_homophily_graph(100, 0.5, 0.18, 0.04, {0.1, 1.0}, 13);
    RunConfig config;
    config.folds = 5;
    config.seed = 13;
    config.masking = MaskingPolicy::transductive;
    EvalReport trans = cross_validate(g, FeatureSetId::label_dependent, config);
    config.masking = MaskingPolicy::fold_masked;
    EvalReport masked = cross_validate(g, FeatureSetId::label_dependent, config);
    CHECK(trans.mean.accuracy >= masked.mean.accuracy - 1e-12);
    // Fold-masked homophilous features still separate well.
    CHECK(masked.mean.accuracy >= 0.8);
}

TEST_CASE("widening the homophily gap keeps set-3 accuracy climbing") {
    RunConfig config;
    config.folds = 5;
    config.seed = 17;
    std::vector<double> gaps = {0.0, 0.03, 0.06, 0.09, 0.12};
    std::vector<double> accuracies;
    for (double gap : gaps) {
        LabeledGraph g =
            generate_homophily_graph(140, 0.5, 0.03 + gap, 0.03, {0.1, 1.0}, 17);
        accuracies.push_back(
            cross_validate(g, FeatureSetId::label_dependent, config).mean.accuracy);
    }
    for (std::size_t i = 0; i + 1 < accuracies.size(); ++i) {
        CHECK(accuracies[i + 1] >= accuracies[i] - 0.05);
    }
    CHECK(accuracies.back() - accuracies.front() >= 0.2);
}

TEST_CASE("report table lists one row per feature set") {
    LabeledGraph g = generate_homophily_graph(60, 0.5, 0.2, 0.04, {0.1, 1.0}, 3);
    RunConfig config;
    config.folds = 5;
    std::vector<std::pair<FeatureSetId, EvalReport>> reports;
    for (int set : {1, 3}) {
        reports.emplace_back(feature_set_from_int(set),
                             cross_validate(g, feature_set_from_int(set), config));
    }
    std::string table = report_table(reports);
    CHECK(table.find("feature_set") != std::string::npos);
    CHECK(table.find("# protocol = transductive") != std::string::npos);
    CHECK(table.find("\n1 ") != std::string::npos);
    CHECK(table.find("\n3 ") != std::string::npos);
}

TEST_CASE("report csv carries config, folds and the mean row") {
    LabeledGraph g = generate_homophily_graph(50, 0.5, 0.2, 0.04, {0.1, 1.0}, 3);
    RunConfig config;
    config.folds = 5;
    EvalReport report = cross_validate(g, FeatureSetId::structural, config);
    std::string csv = serialize_report(report);
    CHECK(csv.find("# seed = 1\n") != std::string::npos);
    CHECK(csv.find("fold,accuracy,precision,f_measure\n") != std::string::npos);
    CHECK(csv.find("\nmean,") != std::string::npos);
    CHECK(std::count(csv.begin(), csv.end(), '\n') >= 6 + 1 + 5 + 1);
    for (const FoldMetrics& m : report.per_fold) {
        CHECK(m.accuracy >= 0.0);
        CHECK(m.accuracy <= 1.0);
        CHECK(m.precision >= 0.0);
        CHECK(m.precision <= 1.0);
        CHECK(m.f_measure >= 0.0);
        CHECK(m.f_measure <= 1.0);
    }
}

}  // TEST_SUITE
