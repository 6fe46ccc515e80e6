#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <tuple>
#include <unordered_map>
#include <utility>
#include <vector>

#include "netfex/value.hpp"

namespace netfex {

// Dense node handle: ids of a graph with n nodes are exactly 0..n-1.
using NodeId = std::uint32_t;

// How adjacency is read off the directed edge set: `directed` follows edge
// orientation, `undirected_view` treats an edge in either direction as adjacency.
enum class DirectionMode { directed, undirected_view };

std::string to_string(DirectionMode mode);
DirectionMode direction_mode_from_string(const std::string& s);

struct AttributeField {
    std::string name;
    ColumnKind kind = ColumnKind::nominal;
};

// Structural part of a graph: directed weighted edges over dense node ids.
// At most one edge per ordered pair, no self-loops, weights >= 0.
class Adjacency {
public:
    Adjacency() = default;
    explicit Adjacency(std::size_t node_count) : out_(node_count), in_(node_count) {}

    void add_edge(NodeId src, NodeId dst, double weight);

    std::size_t node_count() const { return out_.size(); }
    std::size_t edge_count() const { return edge_count_; }

    // Sorted by neighbor id.
    std::span<const std::pair<NodeId, double>> out_edges(NodeId v) const;
    std::span<const std::pair<NodeId, double>> in_edges(NodeId v) const;

    bool has_edge(NodeId src, NodeId dst) const;
    std::optional<double> weight(NodeId src, NodeId dst) const;

    // Unique adjacent nodes, ascending, never containing v itself.
    std::vector<NodeId> neighbors(NodeId v, DirectionMode dir) const;

private:
    void check_node(NodeId v) const;

    std::vector<std::vector<std::pair<NodeId, double>>> out_;
    std::vector<std::vector<std::pair<NodeId, double>>> in_;
    std::size_t edge_count_ = 0;
};

// Immutable labeled graph: structure plus per-node external ids, attribute
// vectors and an optional class label. Built once via GraphBuilder; all
// accessors are const and safe to call concurrently.
class LabeledGraph {
public:
    std::size_t node_count() const { return external_ids_.size(); }
    const Adjacency& adjacency() const { return adj_; }

    const std::string& external_id(NodeId v) const;
    std::optional<NodeId> find_node(const std::string& external_id) const;

    const std::vector<std::string>& label_set() const { return label_set_; }
    const std::optional<std::string>& label(NodeId v) const;
    bool is_labeled(NodeId v) const;
    bool has_label_value(const std::string& label) const;

    const std::vector<AttributeField>& schema() const { return schema_; }
    const Value& attribute(NodeId v, std::size_t field) const;

    std::vector<NodeId> neighbors(NodeId v, DirectionMode dir) const;

    // Neighbors carrying any label from the label set.
    std::vector<NodeId> labeled_neighbors(NodeId v, DirectionMode dir) const;

    // (nodes with a known label, the rest); disjoint, ascending, union = all nodes.
    std::pair<std::vector<NodeId>, std::vector<NodeId>> known_unknown_partition() const;

    // Copy with the labels of `hide` removed. The original is untouched.
    LabeledGraph with_labels_hidden(const std::vector<NodeId>& hide) const;

private:
    friend class GraphBuilder;
    LabeledGraph() = default;

    void check_node(NodeId v) const;

    Adjacency adj_;
    std::vector<std::string> external_ids_;
    std::unordered_map<std::string, NodeId> id_index_;
    std::vector<std::string> label_set_;
    std::vector<std::optional<std::string>> labels_;
    std::vector<AttributeField> schema_;
    std::vector<std::vector<Value>> attributes_;
};

// Validating single-use builder. Rejects self-loops, negative weights,
// duplicate edges, duplicate external ids and labels outside the label set.
class GraphBuilder {
public:
    NodeId add_node(const std::string& external_id);
    NodeId ensure_node(const std::string& external_id);
    bool has_node(const std::string& external_id) const;
    std::optional<NodeId> find_node(const std::string& external_id) const;
    std::size_t node_count() const { return external_ids_.size(); }

    void add_edge(NodeId src, NodeId dst, double weight);

    void set_label_set(std::vector<std::string> labels);
    void set_label(NodeId v, const std::string& label);

    void set_schema(std::vector<AttributeField> fields);
    void set_attribute(NodeId v, std::size_t field, Value value);

    LabeledGraph build();

private:
    void check_node(NodeId v) const;

    std::vector<std::string> external_ids_;
    std::unordered_map<std::string, NodeId> id_index_;
    std::vector<std::tuple<NodeId, NodeId, double>> edges_;
    std::vector<std::string> label_set_;
    std::vector<std::optional<std::string>> labels_;
    std::vector<AttributeField> schema_;
    std::vector<std::vector<Value>> attributes_;
    bool built_ = false;
};

}  // namespace netfex
