#include "netfex/evaluate.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>

#include "netfex/parallel.hpp"
#include "netfex/synthetic.hpp"

namespace netfex {

FoldMetrics metrics_from_counts(std::size_t tp, std::size_t fp, std::size_t tn, std::size_t fn) {
    FoldMetrics m;
    std::size_t total = tp + fp + tn + fn;
    m.accuracy = total == 0 ? 0.0 : static_cast<double>(tp + tn) / static_cast<double>(total);
    m.precision = tp + fp == 0 ? 0.0 : static_cast<double>(tp) / static_cast<double>(tp + fp);
    double recall = tp + fn == 0 ? 0.0 : static_cast<double>(tp) / static_cast<double>(tp + fn);
    m.f_measure = m.precision + recall == 0.0
                      ? 0.0
                      : 2.0 * m.precision * recall / (m.precision + recall);
    return m;
}

std::vector<int> stratified_folds(const LabeledGraph& g, int folds, std::uint64_t seed) {
    if (folds < 2) {
        throw std::invalid_argument("folds must be >= 2, got " + std::to_string(folds));
    }
    std::vector<int> assignment(g.node_count(), -1);
    std::mt19937_64 rng(seed);
    for (const std::string& cls : g.label_set()) {
        std::vector<NodeId> members;
        for (NodeId v = 0; v < g.node_count(); ++v) {
            if (g.label(v) == cls) members.push_back(v);
        }
        // Seeded Fisher-Yates, then round-robin over folds.
        for (std::size_t i = members.size(); i > 1; --i) {
            std::size_t j = static_cast<std::size_t>(uniform01(rng) * static_cast<double>(i));
            std::swap(members[i - 1], members[j]);
        }
        for (std::size_t i = 0; i < members.size(); ++i) {
            assignment[members[i]] = static_cast<int>(i % static_cast<std::size_t>(folds));
        }
    }
    return assignment;
}

namespace {

// Rows of m indexed by node: row r corresponds to external id m.row_ids[r].
std::vector<std::size_t> rows_by_node(const LabeledGraph& g, const FeatureMatrix& m) {
    std::vector<std::size_t> row_of(g.node_count());
    for (std::size_t r = 0; r < m.row_ids.size(); ++r) {
        auto v = g.find_node(m.row_ids[r]);
        if (!v) {
            throw std::logic_error("feature row '" + m.row_ids[r] + "' has no graph node");
        }
        row_of[*v] = r;
    }
    return row_of;
}

}  // namespace

EvalReport cross_validate(const LabeledGraph& g, FeatureSetId set, const RunConfig& config) {
    EvalReport report;
    report.seed = config.seed;
    report.config = config.snapshot();
    report.config.emplace_back("feature_set", std::to_string(static_cast<int>(set)));
    report.config.emplace_back("algorithm", "adaboost_m1_decision_stump");
    report.config.emplace_back("protocol", to_string(config.masking));

    const std::vector<int> fold_of = stratified_folds(g, config.folds, config.seed);

    std::vector<std::vector<NodeId>> fold_nodes(static_cast<std::size_t>(config.folds));
    for (NodeId v = 0; v < g.node_count(); ++v) {
        if (fold_of[v] >= 0) fold_nodes[static_cast<std::size_t>(fold_of[v])].push_back(v);
    }
    for (int f = 0; f < config.folds; ++f) {
        if (fold_nodes[static_cast<std::size_t>(f)].empty()) {
            throw std::invalid_argument("fold " + std::to_string(f) +
                                        " is empty; fewer labeled nodes than folds");
        }
    }

    // Degenerate when some label never occurs.
    for (const std::string& cls : g.label_set()) {
        bool seen = false;
        for (NodeId v = 0; v < g.node_count() && !seen; ++v) {
            seen = g.label(v) == cls;
        }
        if (!seen) report.degenerate = true;
    }

    FeatureMatrix shared;
    std::vector<std::size_t> shared_row_of;
    if (config.masking == MaskingPolicy::transductive) {
        shared = build_features(g, set, config);
        shared_row_of = rows_by_node(g, shared);
    }

    auto evaluate_fold = [&](int f, const RunConfig& fold_config) {
        const std::vector<NodeId>& test_nodes = fold_nodes[static_cast<std::size_t>(f)];

        const FeatureMatrix* matrix = &shared;
        const std::vector<std::size_t>* row_of = &shared_row_of;
        FeatureMatrix fold_matrix;
        std::vector<std::size_t> fold_row_of;
        if (config.masking == MaskingPolicy::fold_masked) {
            LabeledGraph masked = mask_labels(g, test_nodes);
            fold_matrix = build_features(masked, set, fold_config);
            fold_row_of = rows_by_node(g, fold_matrix);
            matrix = &fold_matrix;
            row_of = &fold_row_of;
        }

        std::vector<std::size_t> train_rows;
        for (NodeId v = 0; v < g.node_count(); ++v) {
            if (fold_of[v] >= 0 && fold_of[v] != f) {
                train_rows.push_back((*row_of)[v]);
            }
        }
        std::sort(train_rows.begin(), train_rows.end());

        StumpEnsemble model =
            train_adaboost(*matrix, train_rows, config.iterations, config.weight_threshold);

        std::size_t tp = 0, fp = 0, tn = 0, fn = 0;
        for (NodeId v : test_nodes) {
            const std::string predicted = model.predict(matrix->rows[(*row_of)[v]]);
            const std::string& actual = *g.label(v);
            if (actual == "1") {
                (predicted == "1" ? tp : fn) += 1;
            } else {
                (predicted == "1" ? fp : tn) += 1;
            }
        }
        return metrics_from_counts(tp, fp, tn, fn);
    };

    report.per_fold.resize(static_cast<std::size_t>(config.folds));
    if (config.masking == MaskingPolicy::fold_masked) {
        // Each fold owns its masked graph and feature matrix, so folds run in
        // parallel; per-fold feature computation then stays single-threaded.
        RunConfig inner = config;
        inner.threads = 1;
        parallel_for_chunks(static_cast<std::size_t>(config.folds), config.threads,
                            [&](std::size_t begin, std::size_t end, int) {
                                for (std::size_t f = begin; f < end; ++f) {
                                    report.per_fold[f] = evaluate_fold(static_cast<int>(f), inner);
                                }
                            });
    } else {
        for (int f = 0; f < config.folds; ++f) {
            report.per_fold[static_cast<std::size_t>(f)] = evaluate_fold(f, config);
        }
    }

    for (const FoldMetrics& fm : report.per_fold) {
        report.mean.accuracy += fm.accuracy;
        report.mean.precision += fm.precision;
        report.mean.f_measure += fm.f_measure;
    }
    const double k = static_cast<double>(report.per_fold.size());
    report.mean.accuracy /= k;
    report.mean.precision /= k;
    report.mean.f_measure /= k;
    return report;
}

std::string report_table(const std::vector<std::pair<FeatureSetId, EvalReport>>& reports) {
    std::ostringstream out;
    out << "algorithm: adaboost_m1_decision_stump\n";
    if (!reports.empty()) {
        for (const auto& [key, value] : reports.front().second.config) {
            if (key == "feature_set" || key == "algorithm") continue;
            out << "# " << key << " = " << value << "\n";
        }
    }
    out << std::left << std::setw(12) << "feature_set" << std::right << std::setw(10) << "accuracy"
        << std::setw(11) << "precision" << std::setw(11) << "f_measure" << "\n";
    out << std::setprecision(4) << std::fixed;
    for (const auto& [set, report] : reports) {
        out << std::left << std::setw(12) << static_cast<int>(set) << std::right << std::setw(10)
            << report.mean.accuracy << std::setw(11) << report.mean.precision << std::setw(11)
            << report.mean.f_measure;
        if (report.degenerate) out << "  (degenerate: a class is absent)";
        out << "\n";
    }
    return out.str();
}

void write_report_csv(const EvalReport& report, std::ostream& out) {
    for (const auto& [key, value] : report.config) {
        out << "# " << key << " = " << value << "\n";
    }
    out << "fold,accuracy,precision,f_measure\n";
    for (std::size_t f = 0; f < report.per_fold.size(); ++f) {
        const FoldMetrics& m = report.per_fold[f];
        out << (f + 1) << ',' << format_double(m.accuracy) << ',' << format_double(m.precision)
            << ',' << format_double(m.f_measure) << "\n";
    }
    out << "mean," << format_double(report.mean.accuracy) << ','
        << format_double(report.mean.precision) << ',' << format_double(report.mean.f_measure)
        << "\n";
}

void write_report_csv_file(const EvalReport& report, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot write file: " + path);
    }
    write_report_csv(report, out);
    if (!out) {
        throw std::runtime_error("write failed: " + path);
    }
}

}  // namespace netfex
