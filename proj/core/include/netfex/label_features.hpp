#pragma once

#include <optional>
#include <string>
#include <vector>

#include "netfex/centrality.hpp"
#include "netfex/config.hpp"
#include "netfex/subgraph.hpp"

namespace netfex {

// Per-node values of one structural measure tied to one label.
struct LabelFeatureVector {
    std::string measure;
    std::string label;
    DirectionMode dir = DirectionMode::undirected_view;
    LiftMode mode = LiftMode::augmented;
    std::vector<std::optional<double>> values;  // by base node id; nullopt = undefined
};

// Share of v's labeled neighbors that carry `label`. nullopt when v has no
// labeled neighbor.
std::optional<double> ncn(const LabeledGraph& g, const std::string& label, NodeId v,
                          DirectionMode dir);

// Share of v's connection strength to labeled neighbors that goes to the ones
// carrying `label`. In undirected_view the out-edge weight is used when
// present, else the in-edge weight; directed mode uses out-edges only.
// nullopt when there is no labeled neighbor or all incident strengths are 0.
std::optional<double> ncs(const LabeledGraph& g, const std::string& label, NodeId v,
                          DirectionMode dir);

// Evaluate a structural measure on the label subgraph, mapped back to base
// node ids. augmented mode evaluates each node on select_augmented(g, label,
// node); strict mode evaluates select(g, label) and leaves outside nodes
// undefined.
LabelFeatureVector lift(const StructuralMeasure& measure, const std::string& measure_name,
                        const LabeledGraph& g, const std::string& label, DirectionMode dir,
                        LiftMode mode, int threads = 1);

// Label-restricted clustering coefficient of v; identical to lifting
// clustering_coefficient and reading the value at v.
std::optional<double> cc_label(const LabeledGraph& g, const std::string& label, NodeId v,
                               DirectionMode dir, LiftMode mode);

}  // namespace netfex
