#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "netfex/boosting.hpp"
#include "netfex/dataset.hpp"

namespace netfex {

struct FoldMetrics {
    double accuracy = 0.0;
    double precision = 0.0;
    double f_measure = 0.0;
};

// Accuracy / precision / F-measure from confusion counts. Precision and
// recall use positive class '1' and fall back to 0 when undefined; the
// F-measure is their harmonic mean, 0 when both are 0.
FoldMetrics metrics_from_counts(std::size_t tp, std::size_t fp, std::size_t tn, std::size_t fn);

struct EvalReport {
    std::vector<FoldMetrics> per_fold;
    FoldMetrics mean;
    std::vector<std::pair<std::string, std::string>> config;
    std::uint64_t seed = 0;
    bool degenerate = false;  // a class is absent from the whole dataset
};

// Stratified fold assignment over the labeled nodes: per-class round-robin
// after a seeded shuffle. Returns fold index per node id (-1 = unlabeled).
std::vector<int> stratified_folds(const LabeledGraph& g, int folds, std::uint64_t seed);

// Stratified k-fold cross-validation of AdaBoost over decision stumps on the
// requested feature set. Under the fold-masked policy, label-dependent
// features are recomputed per fold with the evaluation fold's labels hidden.
// Bit-reproducible for a fixed seed and config.
EvalReport cross_validate(const LabeledGraph& g, FeatureSetId set, const RunConfig& config);

// Plain-text comparison table, one row per feature set.
std::string report_table(const std::vector<std::pair<FeatureSetId, EvalReport>>& reports);

// Machine-readable form: '# key = value' header, then fold rows + mean row.
void write_report_csv(const EvalReport& report, std::ostream& out);
void write_report_csv_file(const EvalReport& report, const std::string& path);

}  // namespace netfex
