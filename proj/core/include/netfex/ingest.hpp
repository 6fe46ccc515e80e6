#pragma once

#include <cstddef>
#include <iosfwd>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "netfex/graph.hpp"

namespace netfex {

// One observed (participant, event) presence.
struct AttendanceRecord {
    std::string participant;
    std::string event;

    bool operator==(const AttendanceRecord&) const = default;
    auto operator<=>(const AttendanceRecord&) const = default;
};

// Raw per-person profile; missing fields stay missing.
struct Profile {
    Value age = missing_value();             // numeric
    Value gender = missing_value();          // nominal
    Value country = missing_value();         // nominal
    Value phone_provider = missing_value();  // nominal
};

using ProfileMap = std::map<std::string, Profile>;
using TargetMap = std::map<std::string, std::set<std::string>>;

struct IngestReport {
    std::size_t persons_raw = 0;
    std::size_t persons_kept = 0;
    std::size_t events = 0;
    std::size_t presences_raw = 0;
    std::size_t presences_kept = 0;
    std::size_t directed_edges = 0;
    std::size_t unresolved_profiles = 0;
    std::size_t unresolved_targets = 0;
    std::size_t unresolved_labels = 0;
};

// --- raw input readers; a path of "-" reads standard input ------------------

std::vector<AttendanceRecord> read_attendance_csv(std::istream& in, const std::string& name);
std::vector<AttendanceRecord> read_attendance_csv(const std::string& path);

ProfileMap read_profiles_csv(std::istream& in, const std::string& name);
ProfileMap read_profiles_csv(const std::string& path);

TargetMap read_targets_csv(std::istream& in, const std::string& name);
TargetMap read_targets_csv(const std::string& path);

// --- pipeline ---------------------------------------------------------------

// Drops every record of a participant with no target tags at all.
// Fills the persons/presences before-and-after counts of the report.
std::vector<AttendanceRecord> clean_participants(const std::vector<AttendanceRecord>& records,
                                                 const TargetMap& targets, IngestReport& report);

// Directed co-attendance projection. For participants i, j with event sets
// T_i, T_j and a non-empty intersection, edge i->j gets weight
// |T_i ∩ T_j| / |T_i|. Duplicate records collapse to one presence;
// participant ids are interned in lexicographic order, so any record order
// produces the identical graph.
LabeledGraph project_coattendance(const std::vector<AttendanceRecord>& records,
                                  IngestReport* report = nullptr);

// Copy of g with binary labels ('1' iff target_tag is in the node's tag set)
// and profile attributes attached; unresolvable map ids are counted, not fatal.
LabeledGraph attach_labels_and_attributes(const LabeledGraph& g, const ProfileMap& profiles,
                                          const std::string& target_tag, const TargetMap& targets,
                                          IngestReport* report = nullptr);

// --- persisted graph format ---------------------------------------------------
// edges:      TSV src<TAB>dst<TAB>weight, '#' comments
// labels:     TSV node<TAB>label
// attributes: profile CSV (person,age,gender,country,phone_provider)
// ids:        TSV id<TAB>external, one line per node (preserves isolated nodes
//             and the node order)

struct GraphFiles {
    std::string edges;       // required
    std::string labels;      // optional ("" = none)
    std::string attributes;  // optional
    std::string ids;         // optional
};

LabeledGraph load_edge_list(std::istream& in, const std::string& name);
LabeledGraph load_edge_list(const std::string& path);
LabeledGraph load_graph(const GraphFiles& files, IngestReport* report = nullptr);

// Canonical form: rows sorted lexicographically by (src, dst) external id.
void write_edge_list(const LabeledGraph& g, std::ostream& out);
void write_label_sidecar(const LabeledGraph& g, std::ostream& out);
void write_attributes_csv(const LabeledGraph& g, std::ostream& out);
void write_id_map(const LabeledGraph& g, std::ostream& out);

}  // namespace netfex
