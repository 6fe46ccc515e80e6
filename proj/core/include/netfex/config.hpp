#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "netfex/graph.hpp"

namespace netfex {

// Whether a lifted measure is evaluated on the plain label subgraph (strict;
// nodes outside it get a missing value) or on the subgraph augmented with the
// focal node, which defines the feature for every node.
enum class LiftMode { augmented, strict };

// Whether class labels of evaluation-fold nodes stay visible while
// label-dependent features are computed.
enum class MaskingPolicy { transductive, fold_masked };

// What a feature with an undefined denominator turns into on export.
enum class MissingPolicy { marker, zero };

std::string to_string(LiftMode m);
std::string to_string(MaskingPolicy m);
std::string to_string(MissingPolicy m);
LiftMode lift_mode_from_string(const std::string& s);
MaskingPolicy masking_policy_from_string(const std::string& s);
MissingPolicy missing_policy_from_string(const std::string& s);

// Run-wide knobs. Serializes to key = value lines; every exported artifact
// embeds the snapshot in its header.
struct RunConfig {
    DirectionMode direction = DirectionMode::undirected_view;
    LiftMode lifting = LiftMode::augmented;
    MaskingPolicy masking = MaskingPolicy::transductive;
    MissingPolicy missing = MissingPolicy::marker;
    int folds = 10;
    int iterations = 10;
    double weight_threshold = 100.0;  // percent of total row weight a stump trains on
    std::uint64_t seed = 1;
    int threads = 0;  // 0 = hardware concurrency

    std::vector<std::pair<std::string, std::string>> snapshot() const;
    void apply(const std::string& key, const std::string& value);
};

RunConfig load_config(std::istream& in);
RunConfig load_config_file(const std::string& path);
void write_config(const RunConfig& config, std::ostream& out);

}  // namespace netfex
