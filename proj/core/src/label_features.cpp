#include "netfex/label_features.hpp"

#include <stdexcept>

#include "netfex/parallel.hpp"

namespace netfex {

namespace {

void check_inputs(const LabeledGraph& g, const std::string& label, NodeId v) {
    if (!g.has_label_value(label)) {
        throw std::invalid_argument("label '" + label + "' is not in the label set");
    }
    if (v >= g.node_count()) {
        throw std::invalid_argument("unknown node id " + std::to_string(v));
    }
}

// Strength of the v-u connection under the direction mode.
double strength(const LabeledGraph& g, NodeId v, NodeId u, DirectionMode dir) {
    auto out = g.adjacency().weight(v, u);
    if (out) return *out;
    if (dir == DirectionMode::undirected_view) {
        if (auto in = g.adjacency().weight(u, v)) return *in;
    }
    return 0.0;
}

}  // namespace

std::optional<double> ncn(const LabeledGraph& g, const std::string& label, NodeId v,
                          DirectionMode dir) {
    check_inputs(g, label, v);
    std::size_t labeled = 0, with_label = 0;
    for (NodeId u : g.neighbors(v, dir)) {
        const auto& lu = g.label(u);
        if (!lu) continue;
        ++labeled;
        if (*lu == label) ++with_label;
    }
    if (labeled == 0) return std::nullopt;
    return static_cast<double>(with_label) / static_cast<double>(labeled);
}

std::optional<double> ncs(const LabeledGraph& g, const std::string& label, NodeId v,
                          DirectionMode dir) {
    check_inputs(g, label, v);
    double total = 0.0, to_label = 0.0;
    bool any_labeled = false;
    for (NodeId u : g.neighbors(v, dir)) {
        const auto& lu = g.label(u);
        if (!lu) continue;
        any_labeled = true;
        double w = strength(g, v, u, dir);
        total += w;
        if (*lu == label) to_label += w;
    }
    if (!any_labeled || total == 0.0) return std::nullopt;
    return to_label / total;
}

LabelFeatureVector lift(const StructuralMeasure& measure, const std::string& measure_name,
                        const LabeledGraph& g, const std::string& label, DirectionMode dir,
                        LiftMode mode, int threads) {
    if (!g.has_label_value(label)) {
        throw std::invalid_argument("label '" + label + "' is not in the label set");
    }

    LabelFeatureVector result{measure_name, label, dir, mode,
                              std::vector<std::optional<double>>(g.node_count())};

    const LabelSubgraph members = select(g, label);
    const CentralityVector member_values = measure(members.adj, dir);
    std::vector<NodeId> outside;
    for (NodeId v = 0; v < g.node_count(); ++v) {
        if (auto s = members.sub_id(v)) {
            result.values[v] = member_values.values[*s];
        } else if (mode == LiftMode::augmented) {
            outside.push_back(v);
        }
        // strict mode leaves outside nodes undefined
    }

    if (mode == LiftMode::augmented) {
        parallel_for_chunks(outside.size(), threads, [&](std::size_t begin, std::size_t end, int) {
            for (std::size_t i = begin; i < end; ++i) {
                NodeId v = outside[i];
                LabelSubgraph aug = select_augmented(g, label, v);
                CentralityVector values = measure(aug.adj, dir);
                result.values[v] = values.values[*aug.sub_id(v)];
            }
        });
    }
    return result;
}

std::optional<double> cc_label(const LabeledGraph& g, const std::string& label, NodeId v,
                               DirectionMode dir, LiftMode mode) {
    if (v >= g.node_count()) {
        throw std::invalid_argument("unknown node id " + std::to_string(v));
    }
    auto measure = [](const Adjacency& a, DirectionMode d) { return clustering_coefficient(a, d); };
    return lift(measure, "clustering_coefficient", g, label, dir, mode).values[v];
}

}  // namespace netfex
