#include "netfex/boosting.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace netfex {

namespace {

// Alpha of a perfect round; finite so vote sums stay well-defined.
const double kPerfectAlpha = std::log(1e10);

int class_index(const Value& v) {
    // Target domain is {'0','1'}; index 1 = positive class.
    return as_nominal(v) == "1" ? 1 : 0;
}

struct BranchTotals {
    double weight[2] = {0.0, 0.0};

    void add(int cls, double w) { weight[cls] += w; }
    double majority_error() const { return std::min(weight[0], weight[1]); }
    const char* majority_class() const { return weight[1] > weight[0] ? "1" : "0"; }
};

// Error of the best class assignment for a (left, right, missing) partition,
// together with the chosen classes and missing branch.
struct SplitChoice {
    double error = std::numeric_limits<double>::infinity();
    std::string left_class, right_class;
    bool missing_left = true;
};

SplitChoice choose_classes(const BranchTotals& left, const BranchTotals& right,
                           const BranchTotals& missing) {
    SplitChoice best;
    for (bool miss_left : {true, false}) {
        BranchTotals l = left, r = right;
        for (int c = 0; c < 2; ++c) {
            (miss_left ? l : r).add(c, missing.weight[c]);
        }
        double error = l.majority_error() + r.majority_error();
        if (error < best.error) {
            best.error = error;
            best.left_class = l.majority_class();
            best.right_class = r.majority_class();
            best.missing_left = miss_left;
        }
    }
    return best;
}

}  // namespace

const std::string& DecisionStump::classify(const std::vector<Value>& row) const {
    if (column < 0) return left_class;
    const Value& v = row[static_cast<std::size_t>(column)];
    if (is_missing(v)) return missing_left ? left_class : right_class;
    bool left = kind == ColumnKind::numeric ? as_numeric(v) <= threshold
                                            : as_nominal(v) == category;
    return left ? left_class : right_class;
}

std::string StumpEnsemble::predict(const std::vector<Value>& row) const {
    if (schema_width != 0 && row.size() != schema_width && row.size() + 1 != schema_width) {
        throw std::invalid_argument("row width " + std::to_string(row.size()) +
                                    " does not match the training schema");
    }
    double vote[2] = {0.0, 0.0};
    for (const auto& [stump, alpha] : stumps) {
        vote[stump.classify(row) == "1" ? 1 : 0] += alpha;
    }
    return vote[1] > vote[0] ? "1" : "0";
}

std::pair<DecisionStump, double> best_stump(const FeatureMatrix& m,
                                            const std::vector<std::size_t>& rows,
                                            const std::vector<double>& weights) {
    if (rows.empty()) {
        throw std::invalid_argument("cannot fit a stump on an empty training set");
    }
    const std::size_t target = m.target_index();

    BranchTotals all;
    for (std::size_t r : rows) {
        all.add(class_index(m.rows[r][target]), weights[r]);
    }

    // Fallback: constant majority-class predictor.
    DecisionStump best;
    best.left_class = best.right_class = all.majority_class();
    double best_error = all.majority_error();

    for (std::size_t c = 0; c < m.feature_count(); ++c) {
        const FeatureColumn& col = m.columns[c];

        BranchTotals missing;
        if (col.kind == ColumnKind::numeric) {
            std::vector<std::pair<double, std::size_t>> present;
            present.reserve(rows.size());
            for (std::size_t r : rows) {
                const Value& v = m.rows[r][c];
                if (is_missing(v)) {
                    missing.add(class_index(m.rows[r][target]), weights[r]);
                } else {
                    present.emplace_back(as_numeric(v), r);
                }
            }
            if (present.size() < 2) continue;
            std::sort(present.begin(), present.end());

            BranchTotals left, right;
            for (const auto& [value, r] : present) {
                right.add(class_index(m.rows[r][target]), weights[r]);
            }
            for (std::size_t i = 0; i + 1 < present.size(); ++i) {
                const auto& [value, r] = present[i];
                int cls = class_index(m.rows[r][target]);
                left.add(cls, weights[r]);
                right.add(cls, -weights[r]);
                if (value == present[i + 1].first) continue;  // not a distinct boundary
                double threshold = value + (present[i + 1].first - value) / 2.0;
                SplitChoice choice = choose_classes(left, right, missing);
                if (choice.error < best_error) {
                    best_error = choice.error;
                    best = DecisionStump{static_cast<int>(c), ColumnKind::numeric, threshold, "",
                                         choice.left_class, choice.right_class,
                                         choice.missing_left};
                }
            }
        } else {
            std::vector<BranchTotals> per_value(col.domain.size());
            BranchTotals present_total;
            for (std::size_t r : rows) {
                const Value& v = m.rows[r][c];
                int cls = class_index(m.rows[r][target]);
                if (is_missing(v)) {
                    missing.add(cls, weights[r]);
                    continue;
                }
                auto it = std::find(col.domain.begin(), col.domain.end(), as_nominal(v));
                per_value[static_cast<std::size_t>(it - col.domain.begin())].add(cls, weights[r]);
                present_total.add(cls, weights[r]);
            }
            for (std::size_t d = 0; d < col.domain.size(); ++d) {
                BranchTotals left = per_value[d];
                BranchTotals right;
                for (int cls = 0; cls < 2; ++cls) {
                    right.add(cls, present_total.weight[cls] - left.weight[cls]);
                }
                SplitChoice choice = choose_classes(left, right, missing);
                if (choice.error < best_error) {
                    best_error = choice.error;
                    best = DecisionStump{static_cast<int>(c), ColumnKind::nominal, 0.0,
                                         col.domain[d], choice.left_class, choice.right_class,
                                         choice.missing_left};
                }
            }
        }
    }

    // The scan above ranks candidates with running sums; report the winner's
    // error from a plain ascending-row sweep so it is independent of that
    // summation order.
    double exact_error = 0.0;
    for (std::size_t r : rows) {
        if (best.classify(m.rows[r]) != as_nominal(m.rows[r][target])) {
            exact_error += weights[r];
        }
    }
    return {best, exact_error};
}

std::vector<std::size_t> weight_threshold_rows(const std::vector<std::size_t>& rows,
                                               const std::vector<double>& weights, double percent) {
    if (percent >= 100.0) return rows;
    double total = 0.0;
    for (std::size_t r : rows) total += weights[r];

    std::vector<std::size_t> order = rows;
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return weights[a] < weights[b]; });

    std::vector<std::size_t> kept;
    double cumulative = 0.0;
    const double needed = total * percent / 100.0;
    for (std::size_t r : order) {
        kept.push_back(r);
        cumulative += weights[r];
        if (cumulative >= needed) break;
    }
    std::sort(kept.begin(), kept.end());
    return kept;
}

StumpEnsemble train_adaboost(const FeatureMatrix& m, const std::vector<std::size_t>& train_rows,
                             int iterations, double weight_threshold_percent) {
    if (train_rows.empty()) {
        throw std::invalid_argument("empty training set");
    }
    if (m.columns.empty() || m.columns.back().kind != ColumnKind::nominal) {
        throw std::invalid_argument("feature matrix lacks a nominal target column");
    }
    for (std::size_t r : train_rows) {
        if (is_missing(m.rows[r][m.target_index()])) {
            throw std::invalid_argument("training row " + std::to_string(r) + " has no label");
        }
    }

    StumpEnsemble ensemble;
    ensemble.iterations = iterations;
    ensemble.schema_width = m.columns.size();

    std::vector<double> weights(m.rows.size(), 0.0);
    for (std::size_t r : train_rows) {
        weights[r] = 1.0 / static_cast<double>(train_rows.size());
    }

    const std::size_t target = m.target_index();
    for (int round = 0; round < iterations; ++round) {
        std::vector<std::size_t> fit_rows =
            weight_threshold_rows(train_rows, weights, weight_threshold_percent);
        auto [stump, fit_error] = best_stump(m, fit_rows, weights);

        // Weighted error over the full training set.
        double epsilon = 0.0;
        for (std::size_t r : train_rows) {
            if (stump.classify(m.rows[r]) != as_nominal(m.rows[r][target])) {
                epsilon += weights[r];
            }
        }

        if (epsilon <= 0.0) {
            ensemble.stumps.emplace_back(stump, kPerfectAlpha);
            ensemble.round_errors.push_back(0.0);
            break;
        }
        if (epsilon >= 0.5) {
            break;  // no better than chance; discard and stop
        }

        double alpha = std::log((1.0 - epsilon) / epsilon);
        ensemble.stumps.emplace_back(stump, alpha);
        ensemble.round_errors.push_back(epsilon);

        double sum = 0.0;
        for (std::size_t r : train_rows) {
            if (stump.classify(m.rows[r]) != as_nominal(m.rows[r][target])) {
                weights[r] *= (1.0 - epsilon) / epsilon;
            }
            sum += weights[r];
        }
        for (std::size_t r : train_rows) {
            weights[r] /= sum;
        }
    }

    return ensemble;
}

}  // namespace netfex
