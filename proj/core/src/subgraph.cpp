#include "netfex/subgraph.hpp"

#include <algorithm>
#include <stdexcept>

namespace netfex {

std::optional<NodeId> LabelSubgraph::sub_id(NodeId base_id) const {
    auto pos = std::lower_bound(to_base.begin(), to_base.end(), base_id);
    if (pos != to_base.end() && *pos == base_id) {
        return static_cast<NodeId>(pos - to_base.begin());
    }
    return std::nullopt;
}

namespace {

LabelSubgraph materialize(const LabeledGraph& g, const std::string& label,
                          std::optional<NodeId> focus) {
    if (!g.has_label_value(label)) {
        throw std::invalid_argument("label '" + label + "' is not in the label set");
    }

    LabelSubgraph sub;
    sub.base = &g;
    sub.label = label;

    for (NodeId v = 0; v < g.node_count(); ++v) {
        if (g.label(v) == label || (focus && *focus == v)) {
            sub.to_base.push_back(v);
        }
    }
    if (focus && g.label(*focus) != label) {
        sub.focus = focus;
    }

    std::vector<std::int64_t> to_sub(g.node_count(), -1);
    for (NodeId s = 0; s < sub.to_base.size(); ++s) {
        to_sub[sub.to_base[s]] = s;
    }

    sub.adj = Adjacency(sub.to_base.size());
    for (NodeId s = 0; s < sub.to_base.size(); ++s) {
        for (const auto& [dst, w] : g.adjacency().out_edges(sub.to_base[s])) {
            if (to_sub[dst] >= 0) {
                sub.adj.add_edge(s, static_cast<NodeId>(to_sub[dst]), w);
            }
        }
    }
    return sub;
}

}  // namespace

LabelSubgraph select(const LabeledGraph& g, const std::string& label) {
    return materialize(g, label, std::nullopt);
}

LabelSubgraph select_augmented(const LabeledGraph& g, const std::string& label, NodeId focus) {
    if (focus >= g.node_count()) {
        throw std::invalid_argument("unknown node id " + std::to_string(focus));
    }
    return materialize(g, label, focus);
}

}  // namespace netfex
