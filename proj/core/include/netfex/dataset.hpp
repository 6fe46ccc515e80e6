#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "netfex/config.hpp"
#include "netfex/graph.hpp"

namespace netfex {

// The four exported feature groups: raw profile attributes, structural
// measures, label-dependent measures, and the union of all of them.
enum class FeatureSetId { raw_attributes = 1, structural = 2, label_dependent = 3, combined = 4 };

FeatureSetId feature_set_from_int(int id);

struct FeatureColumn {
    std::string name;
    ColumnKind kind = ColumnKind::numeric;
    std::vector<std::string> domain;  // nominal columns only, sorted

    bool operator==(const FeatureColumn&) const = default;
};

// Classification-ready table: one row per node, last column is the nominal
// binary target. Row order is ascending external id.
struct FeatureMatrix {
    std::string relation = "netfex";
    std::vector<FeatureColumn> columns;  // target included, last
    std::vector<std::string> row_ids;    // external node ids
    std::vector<std::vector<Value>> rows;
    std::string target = "class";
    std::vector<std::pair<std::string, std::string>> provenance;

    std::size_t feature_count() const { return columns.empty() ? 0 : columns.size() - 1; }
    std::size_t target_index() const { return columns.size() - 1; }
};

// Assembles the requested feature set plus the target column. Sets 3 and 4
// require the graph's label domain to be exactly {'0','1'}.
FeatureMatrix build_features(const LabeledGraph& g, FeatureSetId set, const RunConfig& config);

// Copy of g with the labels of `hide` removed; the original is untouched.
LabeledGraph mask_labels(const LabeledGraph& g, const std::vector<NodeId>& hide);

// ARFF with uppercase directives, '?' for missing values and the provenance
// snapshot as leading '% key = value' comment lines.
void write_arff(const FeatureMatrix& m, const std::string& relation, std::ostream& out);
void write_arff_file(const FeatureMatrix& m, const std::string& relation, const std::string& path);

// Reads back exactly what write_arff emits (write -> read -> write is
// byte-identical). Row ids are not serialized and come back as row indices.
FeatureMatrix read_arff(std::istream& in);
FeatureMatrix read_arff_file(const std::string& path);

// RFC-4180-style: header row, missing values as empty fields.
void write_csv(const FeatureMatrix& m, std::ostream& out);
void write_csv_file(const FeatureMatrix& m, const std::string& path);

}  // namespace netfex
