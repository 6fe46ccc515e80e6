#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "netfex/dataset.hpp"

namespace netfex {

// One-split weak classifier. Numeric columns split on value <= threshold,
// nominal columns on value == category; rows with a missing value follow the
// missing branch. column < 0 is a constant predictor (always left_class).
struct DecisionStump {
    int column = -1;
    ColumnKind kind = ColumnKind::numeric;
    double threshold = 0.0;
    std::string category;
    std::string left_class = "0";
    std::string right_class = "0";
    bool missing_left = true;

    const std::string& classify(const std::vector<Value>& row) const;
};

// AdaBoost.M1 model: stumps with their vote weights, in training order.
struct StumpEnsemble {
    std::vector<std::pair<DecisionStump, double>> stumps;  // (stump, alpha)
    int iterations = 0;                                    // configured rounds
    std::size_t schema_width = 0;                          // columns incl. target
    std::vector<double> round_errors;                      // weighted error per kept round

    // Class with the largest alpha sum over agreeing stumps; ties go to '0'.
    std::string predict(const std::vector<Value>& row) const;
};

// Weighted-error-minimizing stump over all (column, split) candidates:
// numeric thresholds are midpoints between consecutive distinct sorted
// values, nominal splits are one value vs the rest, and both the per-branch
// classes and the missing branch are chosen to minimize weighted error.
// Returns the stump and its weighted error over `rows`.
std::pair<DecisionStump, double> best_stump(const FeatureMatrix& m,
                                            const std::vector<std::size_t>& rows,
                                            const std::vector<double>& weights);

// Indices of the lightest rows whose cumulative weight reaches `percent` of
// the total; at 100 every row is kept.
std::vector<std::size_t> weight_threshold_rows(const std::vector<std::size_t>& rows,
                                               const std::vector<double>& weights, double percent);

// AdaBoost.M1: alpha = ln((1-e)/e); a perfect round keeps the stump with a
// capped alpha and stops; a round with e >= 0.5 is discarded and stops.
StumpEnsemble train_adaboost(const FeatureMatrix& m, const std::vector<std::size_t>& train_rows,
                             int iterations, double weight_threshold_percent);

}  // namespace netfex
