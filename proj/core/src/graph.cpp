#include "netfex/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace netfex {

std::string to_string(DirectionMode mode) {
    return mode == DirectionMode::directed ? "directed" : "undirected";
}

DirectionMode direction_mode_from_string(const std::string& s) {
    if (s == "directed") return DirectionMode::directed;
    if (s == "undirected" || s == "undirected-view") return DirectionMode::undirected_view;
    throw std::invalid_argument("unknown direction mode: '" + s + "'");
}

namespace {

// Sorted insert keyed by neighbor id; rejects duplicates.
void insert_sorted(std::vector<std::pair<NodeId, double>>& list, NodeId key, double weight,
                   const char* what) {
    auto pos = std::lower_bound(list.begin(), list.end(), key,
                                [](const auto& e, NodeId k) { return e.first < k; });
    if (pos != list.end() && pos->first == key) {
        throw std::invalid_argument(std::string("duplicate ") + what);
    }
    list.insert(pos, {key, weight});
}

std::optional<double> find_weight(const std::vector<std::pair<NodeId, double>>& list, NodeId key) {
    auto pos = std::lower_bound(list.begin(), list.end(), key,
                                [](const auto& e, NodeId k) { return e.first < k; });
    if (pos != list.end() && pos->first == key) return pos->second;
    return std::nullopt;
}

}  // namespace

void Adjacency::check_node(NodeId v) const {
    if (v >= out_.size()) {
        throw std::invalid_argument("unknown node id " + std::to_string(v));
    }
}

void Adjacency::add_edge(NodeId src, NodeId dst, double weight) {
    check_node(src);
    check_node(dst);
    if (src == dst) {
        throw std::invalid_argument("self-loop rejected at node " + std::to_string(src));
    }
    if (weight < 0.0) {
        throw std::invalid_argument("negative edge weight rejected: " + std::to_string(weight));
    }
    insert_sorted(out_[src], dst, weight, "edge");
    insert_sorted(in_[dst], src, weight, "edge (reverse index)");
    ++edge_count_;
}

std::span<const std::pair<NodeId, double>> Adjacency::out_edges(NodeId v) const {
    check_node(v);
    return out_[v];
}

std::span<const std::pair<NodeId, double>> Adjacency::in_edges(NodeId v) const {
    check_node(v);
    return in_[v];
}

bool Adjacency::has_edge(NodeId src, NodeId dst) const {
    return weight(src, dst).has_value();
}

std::optional<double> Adjacency::weight(NodeId src, NodeId dst) const {
    check_node(src);
    check_node(dst);
    return find_weight(out_[src], dst);
}

std::vector<NodeId> Adjacency::neighbors(NodeId v, DirectionMode dir) const {
    check_node(v);
    std::vector<NodeId> result;
    if (dir == DirectionMode::directed) {
        result.reserve(out_[v].size());
        for (const auto& [u, w] : out_[v]) result.push_back(u);
        return result;
    }
    // Merge of two sorted lists, dropping duplicates.
    const auto& a = out_[v];
    const auto& b = in_[v];
    result.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            result.push_back(a[i++].first);
        } else if (i == a.size() || b[j].first < a[i].first) {
            result.push_back(b[j++].first);
        } else {
            result.push_back(a[i].first);
            ++i;
            ++j;
        }
    }
    return result;
}

void LabeledGraph::check_node(NodeId v) const {
    if (v >= external_ids_.size()) {
        throw std::invalid_argument("unknown node id " + std::to_string(v));
    }
}

const std::string& LabeledGraph::external_id(NodeId v) const {
    check_node(v);
    return external_ids_[v];
}

std::optional<NodeId> LabeledGraph::find_node(const std::string& external_id) const {
    auto it = id_index_.find(external_id);
    if (it == id_index_.end()) return std::nullopt;
    return it->second;
}

const std::optional<std::string>& LabeledGraph::label(NodeId v) const {
    check_node(v);
    return labels_[v];
}

bool LabeledGraph::is_labeled(NodeId v) const {
    check_node(v);
    return labels_[v].has_value();
}

bool LabeledGraph::has_label_value(const std::string& label) const {
    return std::find(label_set_.begin(), label_set_.end(), label) != label_set_.end();
}

const Value& LabeledGraph::attribute(NodeId v, std::size_t field) const {
    check_node(v);
    if (field >= schema_.size()) {
        throw std::invalid_argument("unknown attribute field " + std::to_string(field));
    }
    return attributes_[v][field];
}

std::vector<NodeId> LabeledGraph::neighbors(NodeId v, DirectionMode dir) const {
    check_node(v);
    return adj_.neighbors(v, dir);
}

std::vector<NodeId> LabeledGraph::labeled_neighbors(NodeId v, DirectionMode dir) const {
    std::vector<NodeId> result = neighbors(v, dir);
    std::erase_if(result, [this](NodeId u) { return !labels_[u].has_value(); });
    return result;
}

std::pair<std::vector<NodeId>, std::vector<NodeId>> LabeledGraph::known_unknown_partition() const {
    std::vector<NodeId> known, unknown;
    for (NodeId v = 0; v < node_count(); ++v) {
        (labels_[v].has_value() ? known : unknown).push_back(v);
    }
    return {std::move(known), std::move(unknown)};
}

LabeledGraph LabeledGraph::with_labels_hidden(const std::vector<NodeId>& hide) const {
    LabeledGraph copy = *this;
    for (NodeId v : hide) {
        copy.check_node(v);
        copy.labels_[v].reset();
    }
    return copy;
}

NodeId GraphBuilder::add_node(const std::string& external_id) {
    if (id_index_.contains(external_id)) {
        throw std::invalid_argument("duplicate node id '" + external_id + "'");
    }
    NodeId v = static_cast<NodeId>(external_ids_.size());
    external_ids_.push_back(external_id);
    id_index_.emplace(external_id, v);
    labels_.emplace_back();
    attributes_.emplace_back(schema_.size(), missing_value());
    return v;
}

NodeId GraphBuilder::ensure_node(const std::string& external_id) {
    auto it = id_index_.find(external_id);
    if (it != id_index_.end()) return it->second;
    return add_node(external_id);
}

bool GraphBuilder::has_node(const std::string& external_id) const {
    return id_index_.contains(external_id);
}

std::optional<NodeId> GraphBuilder::find_node(const std::string& external_id) const {
    auto it = id_index_.find(external_id);
    if (it == id_index_.end()) return std::nullopt;
    return it->second;
}

void GraphBuilder::check_node(NodeId v) const {
    if (v >= external_ids_.size()) {
        throw std::invalid_argument("unknown node id " + std::to_string(v));
    }
}

void GraphBuilder::add_edge(NodeId src, NodeId dst, double weight) {
    check_node(src);
    check_node(dst);
    if (src == dst) {
        throw std::invalid_argument("self-loop rejected at node '" + external_ids_[src] + "'");
    }
    if (weight < 0.0) {
        throw std::invalid_argument("negative edge weight rejected: " + std::to_string(weight));
    }
    edges_.emplace_back(src, dst, weight);
}

void GraphBuilder::set_label_set(std::vector<std::string> labels) {
    label_set_ = std::move(labels);
    std::sort(label_set_.begin(), label_set_.end());
    label_set_.erase(std::unique(label_set_.begin(), label_set_.end()), label_set_.end());
}

void GraphBuilder::set_label(NodeId v, const std::string& label) {
    check_node(v);
    if (std::find(label_set_.begin(), label_set_.end(), label) == label_set_.end()) {
        throw std::invalid_argument("label '" + label + "' is not in the label set");
    }
    labels_[v] = label;
}

void GraphBuilder::set_schema(std::vector<AttributeField> fields) {
    schema_ = std::move(fields);
    for (auto& row : attributes_) {
        row.assign(schema_.size(), missing_value());
    }
}

void GraphBuilder::set_attribute(NodeId v, std::size_t field, Value value) {
    check_node(v);
    if (field >= schema_.size()) {
        throw std::invalid_argument("unknown attribute field " + std::to_string(field));
    }
    if (is_numeric(value) && schema_[field].kind != ColumnKind::numeric) {
        throw std::invalid_argument("numeric value for nominal field '" + schema_[field].name + "'");
    }
    if (is_nominal(value) && schema_[field].kind != ColumnKind::nominal) {
        throw std::invalid_argument("nominal value for numeric field '" + schema_[field].name + "'");
    }
    attributes_[v][field] = std::move(value);
}

LabeledGraph GraphBuilder::build() {
    if (built_) {
        throw std::logic_error("GraphBuilder::build called twice");
    }
    built_ = true;
    LabeledGraph g;
    g.adj_ = Adjacency(external_ids_.size());
    for (const auto& [src, dst, w] : edges_) {
        g.adj_.add_edge(src, dst, w);
    }
    g.external_ids_ = std::move(external_ids_);
    g.id_index_ = std::move(id_index_);
    g.label_set_ = std::move(label_set_);
    g.labels_ = std::move(labels_);
    g.schema_ = std::move(schema_);
    g.attributes_ = std::move(attributes_);
    return g;
}

}  // namespace netfex
