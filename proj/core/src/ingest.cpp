#include "netfex/ingest.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace netfex {

namespace {

[[noreturn]] void parse_fail(const std::string& name, int line_no, const std::string& what) {
    throw std::runtime_error(name + ":" + std::to_string(line_no) + ": " + what);
}

// Splits one CSV line; double-quoted fields may contain commas and doubled quotes.
std::vector<std::string> split_csv(const std::string& line, const std::string& name, int line_no) {
    std::vector<std::string> fields;
    std::string cur;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        char c = line[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    cur += '"';
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                cur += c;
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            fields.push_back(std::move(cur));
            cur.clear();
        } else if (c == '\r' && i + 1 == line.size()) {
            // tolerate CRLF input
        } else {
            cur += c;
        }
    }
    if (quoted) parse_fail(name, line_no, "unterminated quoted field");
    fields.push_back(std::move(cur));
    return fields;
}

bool skippable(const std::string& line) {
    if (line.empty()) return true;
    std::size_t i = line.find_first_not_of(" \t\r");
    return i == std::string::npos || line[i] == '#';
}

template <typename Fn>
void for_each_csv_row(std::istream& in, const std::string& name,
                      const std::vector<std::string>& expected_header, Fn&& fn) {
    std::string line;
    int line_no = 0;
    bool saw_header = false;
    while (std::getline(in, line)) {
        ++line_no;
        if (skippable(line)) continue;
        auto fields = split_csv(line, name, line_no);
        if (!saw_header) {
            if (fields != expected_header) {
                std::string want;
                for (const auto& h : expected_header) {
                    if (!want.empty()) want += ',';
                    want += h;
                }
                parse_fail(name, line_no, "expected header '" + want + "'");
            }
            saw_header = true;
            continue;
        }
        if (fields.size() != expected_header.size()) {
            parse_fail(name, line_no, "expected " + std::to_string(expected_header.size()) +
                                          " fields, got " + std::to_string(fields.size()));
        }
        fn(fields, line_no);
    }
}

template <typename Fn>
auto with_input(const std::string& path, Fn&& fn) {
    if (path == "-") {
        return fn(std::cin, std::string("<stdin>"));
    }
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open file: " + path);
    }
    return fn(in, path);
}

Value nominal_or_missing(const std::string& s) {
    if (s.empty()) return missing_value();
    return Value{s};
}

}  // namespace

std::vector<AttendanceRecord> read_attendance_csv(std::istream& in, const std::string& name) {
    std::vector<AttendanceRecord> records;
    for_each_csv_row(in, name, {"person", "talk"}, [&](const std::vector<std::string>& f, int ln) {
        if (f[0].empty() || f[1].empty()) parse_fail(name, ln, "empty person or talk id");
        records.push_back({f[0], f[1]});
    });
    return records;
}

std::vector<AttendanceRecord> read_attendance_csv(const std::string& path) {
    return with_input(path, [](std::istream& in, const std::string& name) {
        return read_attendance_csv(in, name);
    });
}

ProfileMap read_profiles_csv(std::istream& in, const std::string& name) {
    ProfileMap profiles;
    for_each_csv_row(in, name, {"person", "age", "gender", "country", "phone_provider"},
                     [&](const std::vector<std::string>& f, int ln) {
                         if (f[0].empty()) parse_fail(name, ln, "empty person id");
                         Profile p;
                         if (!f[1].empty()) {
                             try {
                                 p.age = Value{parse_double(f[1])};
                             } catch (const std::invalid_argument&) {
                                 parse_fail(name, ln, "bad age '" + f[1] + "'");
                             }
                         }
                         p.gender = nominal_or_missing(f[2]);
                         p.country = nominal_or_missing(f[3]);
                         p.phone_provider = nominal_or_missing(f[4]);
                         profiles[f[0]] = std::move(p);
                     });
    return profiles;
}

ProfileMap read_profiles_csv(const std::string& path) {
    return with_input(path, [](std::istream& in, const std::string& name) {
        return read_profiles_csv(in, name);
    });
}

TargetMap read_targets_csv(std::istream& in, const std::string& name) {
    TargetMap targets;
    for_each_csv_row(in, name, {"person", "tags"}, [&](const std::vector<std::string>& f, int ln) {
        if (f[0].empty()) parse_fail(name, ln, "empty person id");
        auto& tags = targets[f[0]];
        std::stringstream ss(f[1]);
        std::string tag;
        while (std::getline(ss, tag, '|')) {
            if (!tag.empty()) tags.insert(tag);
        }
    });
    return targets;
}

TargetMap read_targets_csv(const std::string& path) {
    return with_input(path, [](std::istream& in, const std::string& name) {
        return read_targets_csv(in, name);
    });
}

std::vector<AttendanceRecord> clean_participants(const std::vector<AttendanceRecord>& records,
                                                 const TargetMap& targets, IngestReport& report) {
    std::set<std::string> persons_before, persons_after;
    std::vector<AttendanceRecord> kept;
    kept.reserve(records.size());
    for (const auto& r : records) {
        persons_before.insert(r.participant);
        auto it = targets.find(r.participant);
        if (it == targets.end() || it->second.empty()) continue;
        persons_after.insert(r.participant);
        kept.push_back(r);
    }
    report.persons_raw = persons_before.size();
    report.persons_kept = persons_after.size();
    report.presences_raw = records.size();
    report.presences_kept = kept.size();
    return kept;
}

LabeledGraph project_coattendance(const std::vector<AttendanceRecord>& records,
                                  IngestReport* report) {
    // Dedupe presences and intern ids in lexicographic order.
    std::vector<AttendanceRecord> presences = records;
    std::sort(presences.begin(), presences.end());
    presences.erase(std::unique(presences.begin(), presences.end()), presences.end());

    std::map<std::string, std::vector<std::string>> events_by_person;
    std::set<std::string> events;
    for (const auto& r : presences) {
        events_by_person[r.participant].push_back(r.event);  // sorted, unique already
        events.insert(r.event);
    }

    GraphBuilder builder;
    std::vector<const std::vector<std::string>*> attended;
    for (const auto& [person, talks] : events_by_person) {
        builder.add_node(person);
        attended.push_back(&talks);
    }

    std::size_t edge_count = 0;
    const std::size_t n = builder.node_count();
    for (NodeId i = 0; i < n; ++i) {
        for (NodeId j = 0; j < n; ++j) {
            if (i == j) continue;
            std::size_t shared = 0;
            const auto& ti = *attended[i];
            const auto& tj = *attended[j];
            for (std::size_t a = 0, b = 0; a < ti.size() && b < tj.size();) {
                if (ti[a] < tj[b]) {
                    ++a;
                } else if (tj[b] < ti[a]) {
                    ++b;
                } else {
                    ++shared;
                    ++a;
                    ++b;
                }
            }
            if (shared > 0) {
                builder.add_edge(i, j, static_cast<double>(shared) / static_cast<double>(ti.size()));
                ++edge_count;
            }
        }
    }

    if (report) {
        report->events = events.size();
        report->presences_kept = presences.size();
        report->directed_edges = edge_count;
    }
    return builder.build();
}

namespace {

std::vector<AttributeField> profile_schema() {
    return {{"age", ColumnKind::numeric},
            {"gender", ColumnKind::nominal},
            {"country", ColumnKind::nominal},
            {"phone_provider", ColumnKind::nominal}};
}

}  // namespace

LabeledGraph attach_labels_and_attributes(const LabeledGraph& g, const ProfileMap& profiles,
                                          const std::string& target_tag, const TargetMap& targets,
                                          IngestReport* report) {
    GraphBuilder builder;
    for (NodeId v = 0; v < g.node_count(); ++v) {
        builder.add_node(g.external_id(v));
    }
    for (NodeId v = 0; v < g.node_count(); ++v) {
        for (const auto& [dst, w] : g.adjacency().out_edges(v)) {
            builder.add_edge(v, dst, w);
        }
    }
    builder.set_schema(profile_schema());
    builder.set_label_set({"0", "1"});

    for (NodeId v = 0; v < g.node_count(); ++v) {
        auto it = targets.find(g.external_id(v));
        bool positive = it != targets.end() && it->second.contains(target_tag);
        builder.set_label(v, positive ? "1" : "0");
    }
    for (NodeId v = 0; v < g.node_count(); ++v) {
        auto it = profiles.find(g.external_id(v));
        if (it == profiles.end()) continue;
        builder.set_attribute(v, 0, it->second.age);
        builder.set_attribute(v, 1, it->second.gender);
        builder.set_attribute(v, 2, it->second.country);
        builder.set_attribute(v, 3, it->second.phone_provider);
    }

    if (report) {
        for (const auto& [id, profile] : profiles) {
            if (!g.find_node(id)) ++report->unresolved_profiles;
        }
        for (const auto& [id, tags] : targets) {
            if (!g.find_node(id)) ++report->unresolved_targets;
        }
    }
    return builder.build();
}

namespace {

std::vector<std::string> split_tsv(const std::string& line) {
    std::vector<std::string> fields;
    std::string cur;
    for (std::size_t i = 0; i < line.size(); ++i) {
        char c = line[i];
        if (c == '\t') {
            fields.push_back(std::move(cur));
            cur.clear();
        } else if (c == '\r' && i + 1 == line.size()) {
            // CRLF
        } else {
            cur += c;
        }
    }
    fields.push_back(std::move(cur));
    return fields;
}

void parse_edges_into(GraphBuilder& builder, std::istream& in, const std::string& name) {
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (skippable(line)) continue;
        auto f = split_tsv(line);
        if (f.size() != 3 || f[0].empty() || f[1].empty()) {
            parse_fail(name, line_no, "expected src<TAB>dst<TAB>weight");
        }
        double w;
        try {
            w = parse_double(f[2]);
        } catch (const std::invalid_argument&) {
            parse_fail(name, line_no, "bad weight '" + f[2] + "'");
        }
        NodeId src = builder.ensure_node(f[0]);
        NodeId dst = builder.ensure_node(f[1]);
        try {
            builder.add_edge(src, dst, w);
        } catch (const std::invalid_argument& e) {
            parse_fail(name, line_no, e.what());
        }
    }
}

}  // namespace

LabeledGraph load_edge_list(std::istream& in, const std::string& name) {
    GraphBuilder builder;
    parse_edges_into(builder, in, name);
    return builder.build();
}

LabeledGraph load_edge_list(const std::string& path) {
    return with_input(path, [](std::istream& in, const std::string& name) {
        return load_edge_list(in, name);
    });
}

LabeledGraph load_graph(const GraphFiles& files, IngestReport* report) {
    GraphBuilder builder;

    if (!files.ids.empty()) {
        with_input(files.ids, [&](std::istream& in, const std::string& name) {
            std::string line;
            int line_no = 0;
            while (std::getline(in, line)) {
                ++line_no;
                if (skippable(line)) continue;
                auto f = split_tsv(line);
                if (f.size() != 2 || f[1].empty()) {
                    parse_fail(name, line_no, "expected id<TAB>external");
                }
                builder.ensure_node(f[1]);
            }
            return 0;
        });
    }

    with_input(files.edges, [&](std::istream& in, const std::string& name) {
        parse_edges_into(builder, in, name);
        return 0;
    });

    if (!files.labels.empty()) {
        // First pass collects the label set, second assigns.
        std::vector<std::pair<std::string, std::string>> assignments;
        with_input(files.labels, [&](std::istream& in, const std::string& name) {
            std::string line;
            int line_no = 0;
            while (std::getline(in, line)) {
                ++line_no;
                if (skippable(line)) continue;
                auto f = split_tsv(line);
                if (f.size() != 2 || f[0].empty() || f[1].empty()) {
                    parse_fail(name, line_no, "expected node<TAB>label");
                }
                assignments.emplace_back(f[0], f[1]);
            }
            return 0;
        });
        std::vector<std::string> label_set;
        label_set.reserve(assignments.size());
        for (const auto& [node, label] : assignments) label_set.push_back(label);
        builder.set_label_set(std::move(label_set));
        for (const auto& [node, label] : assignments) {
            if (auto v = builder.find_node(node)) {
                builder.set_label(*v, label);
            } else if (report) {
                ++report->unresolved_labels;
            }
        }
    }

    if (!files.attributes.empty()) {
        ProfileMap profiles = with_input(files.attributes, [](std::istream& in, const std::string& name) {
            return read_profiles_csv(in, name);
        });
        builder.set_schema(profile_schema());
        for (const auto& [id, profile] : profiles) {
            auto v = builder.find_node(id);
            if (!v) {
                if (report) ++report->unresolved_profiles;
                continue;
            }
            builder.set_attribute(*v, 0, profile.age);
            builder.set_attribute(*v, 1, profile.gender);
            builder.set_attribute(*v, 2, profile.country);
            builder.set_attribute(*v, 3, profile.phone_provider);
        }
    }

    return builder.build();
}

void write_edge_list(const LabeledGraph& g, std::ostream& out) {
    std::vector<std::tuple<std::string, std::string, double>> rows;
    for (NodeId v = 0; v < g.node_count(); ++v) {
        for (const auto& [dst, w] : g.adjacency().out_edges(v)) {
            rows.emplace_back(g.external_id(v), g.external_id(dst), w);
        }
    }
    std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
        if (std::get<0>(a) != std::get<0>(b)) return std::get<0>(a) < std::get<0>(b);
        return std::get<1>(a) < std::get<1>(b);
    });
    for (const auto& [src, dst, w] : rows) {
        out << src << '\t' << dst << '\t' << format_double(w) << '\n';
    }
}

void write_label_sidecar(const LabeledGraph& g, std::ostream& out) {
    std::vector<NodeId> order(g.node_count());
    for (NodeId v = 0; v < g.node_count(); ++v) order[v] = v;
    std::sort(order.begin(), order.end(),
              [&](NodeId a, NodeId b) { return g.external_id(a) < g.external_id(b); });
    for (NodeId v : order) {
        if (g.label(v)) {
            out << g.external_id(v) << '\t' << *g.label(v) << '\n';
        }
    }
}

namespace {

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
    std::string quoted = "\"";
    for (char c : s) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    quoted += '"';
    return quoted;
}

}  // namespace

void write_attributes_csv(const LabeledGraph& g, std::ostream& out) {
    out << "person,age,gender,country,phone_provider\n";
    std::vector<NodeId> order(g.node_count());
    for (NodeId v = 0; v < g.node_count(); ++v) order[v] = v;
    std::sort(order.begin(), order.end(),
              [&](NodeId a, NodeId b) { return g.external_id(a) < g.external_id(b); });
    for (NodeId v : order) {
        out << csv_escape(g.external_id(v));
        for (std::size_t f = 0; f < g.schema().size(); ++f) {
            const Value& val = g.attribute(v, f);
            out << ',';
            if (is_numeric(val)) {
                out << format_double(as_numeric(val));
            } else if (is_nominal(val)) {
                out << csv_escape(as_nominal(val));
            }
        }
        out << '\n';
    }
}

void write_id_map(const LabeledGraph& g, std::ostream& out) {
    for (NodeId v = 0; v < g.node_count(); ++v) {
        out << v << '\t' << g.external_id(v) << '\n';
    }
}

}  // namespace netfex
