#include "netfex/dataset.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <ostream>
#include <set>
#include <stdexcept>

#include "netfex/centrality.hpp"
#include "netfex/label_features.hpp"

namespace netfex {

FeatureSetId feature_set_from_int(int id) {
    if (id < 1 || id > 4) {
        throw std::invalid_argument("feature set must be 1..4, got " + std::to_string(id));
    }
    return static_cast<FeatureSetId>(id);
}

namespace {

std::vector<NodeId> row_order(const LabeledGraph& g) {
    std::vector<NodeId> order(g.node_count());
    std::iota(order.begin(), order.end(), NodeId{0});
    std::sort(order.begin(), order.end(),
              [&](NodeId a, NodeId b) { return g.external_id(a) < g.external_id(b); });
    return order;
}

Value from_optional(const std::optional<double>& v, MissingPolicy policy) {
    if (v) return Value{*v};
    if (policy == MissingPolicy::zero) return Value{0.0};
    return missing_value();
}

void append_raw_attributes(const LabeledGraph& g, const std::vector<NodeId>& order,
                           FeatureMatrix& m) {
    for (std::size_t f = 0; f < g.schema().size(); ++f) {
        const AttributeField& field = g.schema()[f];
        FeatureColumn col{field.name, field.kind, {}};
        if (field.kind == ColumnKind::nominal) {
            std::set<std::string> domain;
            for (NodeId v = 0; v < g.node_count(); ++v) {
                const Value& val = g.attribute(v, f);
                if (is_nominal(val)) domain.insert(as_nominal(val));
            }
            col.domain.assign(domain.begin(), domain.end());
        }
        m.columns.push_back(std::move(col));
        for (std::size_t r = 0; r < order.size(); ++r) {
            m.rows[r].push_back(g.attribute(order[r], f));
        }
    }
}

void append_centrality(const CentralityVector& values, const std::string& name,
                       const std::vector<NodeId>& order, FeatureMatrix& m) {
    m.columns.push_back({name, ColumnKind::numeric, {}});
    for (std::size_t r = 0; r < order.size(); ++r) {
        m.rows[r].push_back(Value{values.values[order[r]]});
    }
}

void append_structural(const LabeledGraph& g, const std::vector<NodeId>& order,
                       const RunConfig& config, FeatureMatrix& m) {
    const Adjacency& adj = g.adjacency();
    append_centrality(betweenness(adj, config.direction, config.threads), "betweenness", order, m);
    append_centrality(degree_centrality(adj, config.direction), "degree", order, m);
    append_centrality(clustering_coefficient(adj, config.direction), "clustering_coefficient",
                      order, m);
}

void append_lifted(const LabelFeatureVector& values, const std::string& name,
                   const std::vector<NodeId>& order, MissingPolicy policy, FeatureMatrix& m) {
    m.columns.push_back({name, ColumnKind::numeric, {}});
    for (std::size_t r = 0; r < order.size(); ++r) {
        m.rows[r].push_back(from_optional(values.values[order[r]], policy));
    }
}

void append_label_dependent(const LabeledGraph& g, const std::vector<NodeId>& order,
                            const RunConfig& config, FeatureMatrix& m) {
    const std::vector<std::string> labels = {"0", "1"};
    const MissingPolicy policy = config.missing;

    for (const auto& l : labels) {
        m.columns.push_back({"ncs_" + l, ColumnKind::numeric, {}});
        for (std::size_t r = 0; r < order.size(); ++r) {
            m.rows[r].push_back(from_optional(ncs(g, l, order[r], config.direction), policy));
        }
    }
    for (const auto& l : labels) {
        m.columns.push_back({"ncn_" + l, ColumnKind::numeric, {}});
        for (std::size_t r = 0; r < order.size(); ++r) {
            m.rows[r].push_back(from_optional(ncn(g, l, order[r], config.direction), policy));
        }
    }

    auto lifted = [&](const StructuralMeasure& measure, const std::string& name) {
        for (const auto& l : labels) {
            LabelFeatureVector values = lift(measure, name, g, l, config.direction, config.lifting,
                                             config.threads);
            append_lifted(values, name + "_" + l, order, policy, m);
        }
    };
    // lift already fans out over focal nodes; the per-subgraph pass stays serial.
    lifted([](const Adjacency& a, DirectionMode d) { return betweenness(a, d, 1); },
           "betweenness");
    lifted([](const Adjacency& a, DirectionMode d) { return degree_centrality(a, d); }, "degree");
    lifted([](const Adjacency& a, DirectionMode d) { return clustering_coefficient(a, d); },
           "clustering_coefficient");
}

void require_binary_labels(const LabeledGraph& g, FeatureSetId set) {
    if (g.label_set() != std::vector<std::string>{"0", "1"}) {
        throw std::invalid_argument("feature set " +
                                    std::to_string(static_cast<int>(set)) +
                                    " requires a graph with binary label domain {'0','1'}");
    }
}

}  // namespace

FeatureMatrix build_features(const LabeledGraph& g, FeatureSetId set, const RunConfig& config) {
    if (set == FeatureSetId::label_dependent || set == FeatureSetId::combined) {
        require_binary_labels(g, set);
    }

    const std::vector<NodeId> order = row_order(g);
    FeatureMatrix m;
    m.rows.resize(order.size());
    m.row_ids.reserve(order.size());
    for (NodeId v : order) m.row_ids.push_back(g.external_id(v));

    switch (set) {
        case FeatureSetId::raw_attributes:
            append_raw_attributes(g, order, m);
            break;
        case FeatureSetId::structural:
            append_structural(g, order, config, m);
            break;
        case FeatureSetId::label_dependent:
            append_label_dependent(g, order, config, m);
            break;
        case FeatureSetId::combined:
            append_raw_attributes(g, order, m);
            append_structural(g, order, config, m);
            append_label_dependent(g, order, config, m);
            break;
    }

    m.columns.push_back({m.target, ColumnKind::nominal, {"0", "1"}});
    for (std::size_t r = 0; r < order.size(); ++r) {
        const auto& label = g.label(order[r]);
        m.rows[r].push_back(label ? Value{*label} : missing_value());
    }

    m.provenance = config.snapshot();
    m.provenance.emplace_back("feature_set", std::to_string(static_cast<int>(set)));
    return m;
}

LabeledGraph mask_labels(const LabeledGraph& g, const std::vector<NodeId>& hide) {
    return g.with_labels_hidden(hide);
}

void write_csv(const FeatureMatrix& m, std::ostream& out) {
    auto escape = [](const std::string& s) {
        if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
        std::string quoted = "\"";
        for (char c : s) {
            if (c == '"') quoted += '"';
            quoted += c;
        }
        quoted += '"';
        return quoted;
    };

    for (std::size_t c = 0; c < m.columns.size(); ++c) {
        if (c > 0) out << ',';
        out << escape(m.columns[c].name);
    }
    out << '\n';
    for (const auto& row : m.rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c > 0) out << ',';
            if (is_numeric(row[c])) {
                out << format_double(as_numeric(row[c]));
            } else if (is_nominal(row[c])) {
                out << escape(as_nominal(row[c]));
            }
        }
        out << '\n';
    }
}

void write_csv_file(const FeatureMatrix& m, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot write file: " + path);
    }
    write_csv(m, out);
    if (!out) {
        throw std::runtime_error("write failed: " + path);
    }
}

}  // namespace netfex
