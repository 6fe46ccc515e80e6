#pragma once

#include <optional>
#include <string>
#include <vector>

#include "netfex/graph.hpp"

namespace netfex {

// Materialized label-induced subgraph with a dense id remap to the base graph.
// Node ids are re-densified; `to_base` is ascending in base ids, and edge
// weights are copied from the base graph unchanged.
struct LabelSubgraph {
    const LabeledGraph* base = nullptr;
    std::string label;
    std::optional<NodeId> focus;  // base id of the augmenting node, if any
    std::vector<NodeId> to_base;  // sub id -> base id
    Adjacency adj;

    std::size_t node_count() const { return to_base.size(); }
    std::optional<NodeId> sub_id(NodeId base_id) const;
};

// Sub-network of all nodes carrying `label`, with induced edges.
LabelSubgraph select(const LabeledGraph& g, const std::string& label);

// select() plus `focus` and its induced edges; identical to select() when
// focus already carries `label`.
LabelSubgraph select_augmented(const LabeledGraph& g, const std::string& label, NodeId focus);

}  // namespace netfex
