// Acceptance suite: one self-contained check per release criterion, each
// printing a single [PASS]/[FAIL]/[SKIP] line. Exits non-zero when any
// criterion fails. The conditional source-data checks (criterion 7 and the
// second half of criterion 5) look for the raw CSVs under $AMD_DATA_DIR or
// ./data/amd and are skipped, not failed, when the files are absent.

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "netfex/evaluate.hpp"
#include "netfex/ingest.hpp"
#include "netfex/label_features.hpp"
#include "netfex/synthetic.hpp"
#include "test_support.hpp"

namespace fs = std::filesystem;
using namespace netfex;
using namespace netfex::testing;

namespace {

struct Outcome {
    enum class Kind { pass, fail, skip } kind = Kind::fail;
    std::string detail;
};

Outcome pass(std::string detail) { return {Outcome::Kind::pass, std::move(detail)}; }
Outcome fail(std::string detail) { return {Outcome::Kind::fail, std::move(detail)}; }
Outcome skip(std::string detail) { return {Outcome::Kind::skip, std::move(detail)}; }

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string fmt(double x) { return format_double(x); }

// --- criterion 1: betweenness vs path enumeration ----------------------------

Outcome betweenness_oracle_equivalence() {
    auto start = std::chrono::steady_clock::now();
    double max_dev = 0.0;
    for (std::uint64_t seed = 1; seed <= 200; ++seed) {
        std::mt19937_64 rng(seed);
        std::size_t n = 3 + static_cast<std::size_t>(uniform01(rng) * 7);  // 3..9
        Adjacency g = random_adjacency(n, 0.3, rng);
        for (DirectionMode dir : {DirectionMode::directed, DirectionMode::undirected_view}) {
            std::vector<double> expected = oracle_betweenness(g, dir);
            CentralityVector got = betweenness(g, dir);
            for (NodeId v = 0; v < n; ++v) {
                max_dev = std::max(max_dev, std::abs(got.values[v] - expected[v]));
            }
        }
    }
    double elapsed = seconds_since(start);
    if (max_dev > 1e-9) {
        return fail("max deviation " + fmt(max_dev) + " exceeds 1e-9");
    }
    if (elapsed >= 10.0) {
        return fail("took " + fmt(elapsed) + "s, budget 10s");
    }
    return pass("200 graphs, both modes, max deviation " + fmt(max_dev) + ", " + fmt(elapsed) +
                "s");
}

// --- criterion 2: strict lifting vs naive induced subgraph -------------------

Outcome lifter_oracle_equivalence() {
    auto start = std::chrono::steady_clock::now();
    const std::vector<std::pair<StructuralMeasure, std::string>> measures = {
        {[](const Adjacency& a, DirectionMode d) { return betweenness(a, d); }, "betweenness"},
        {[](const Adjacency& a, DirectionMode d) { return degree_centrality(a, d); }, "degree"},
        {[](const Adjacency& a, DirectionMode d) { return clustering_coefficient(a, d); },
         "clustering_coefficient"}};

    std::size_t comparisons = 0;
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
        std::mt19937_64 rng(seed);
        RandomLabeledSpec spec;
        spec.n = 4 + static_cast<std::size_t>(uniform01(rng) * 9);  // 4..12
        spec.edge_prob = 0.3;
        LabeledGraph g = random_labeled_graph(spec, rng);
        for (const auto& label : g.label_set()) {
            auto [oracle_adj, members] = oracle_induced_subgraph(g, label);
            for (DirectionMode dir : {DirectionMode::directed, DirectionMode::undirected_view}) {
                for (const auto& [measure, name] : measures) {
                    LabelFeatureVector lifted = lift(measure, name, g, label, dir,
                                                     LiftMode::strict);
                    CentralityVector expected = measure(oracle_adj, dir);
                    for (std::size_t s = 0; s < members.size(); ++s) {
                        ++comparisons;
                        if (!lifted.values[members[s]].has_value() ||
                            *lifted.values[members[s]] != expected.values[s]) {
                            return fail("mismatch at seed " + std::to_string(seed) + ", label " +
                                        label + ", measure " + name);
                        }
                    }
                    for (NodeId v = 0; v < g.node_count(); ++v) {
                        if (g.label(v) != label && lifted.values[v].has_value()) {
                            return fail("strict mode defined a value outside the subgraph");
                        }
                    }
                }
            }
        }
    }
    double elapsed = seconds_since(start);
    if (elapsed >= 10.0) {
        return fail("took " + fmt(elapsed) + "s, budget 10s");
    }
    return pass("100 graphs, 3 measures, both modes, " + std::to_string(comparisons) +
                " exact comparisons, " + fmt(elapsed) + "s");
}

// --- criterion 3: partition of unity ------------------------------------------

Outcome partition_of_unity() {
    double max_dev = 0.0;
    std::size_t nodes_checked = 0;
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
        std::mt19937_64 rng(seed);
        RandomLabeledSpec spec;
        spec.n = 5 + static_cast<std::size_t>(uniform01(rng) * 8);
        spec.label_set = seed % 3 == 0 ? std::vector<std::string>{"0", "1", "2"}
                                       : std::vector<std::string>{"0", "1"};
        LabeledGraph g = random_labeled_graph(spec, rng);
        for (DirectionMode dir : {DirectionMode::directed, DirectionMode::undirected_view}) {
            for (NodeId v = 0; v < g.node_count(); ++v) {
                if (g.labeled_neighbors(v, dir).empty()) continue;
                ++nodes_checked;
                double ncn_sum = 0.0, ncs_sum = 0.0;
                for (const auto& label : g.label_set()) {
                    auto a = ncn(g, label, v, dir);
                    auto s = ncs(g, label, v, dir);
                    if (!a || !s) return fail("undefined value despite labeled neighbors");
                    ncn_sum += *a;
                    ncs_sum += *s;
                }
                max_dev = std::max({max_dev, std::abs(ncn_sum - 1.0), std::abs(ncs_sum - 1.0)});
            }
        }
    }
    if (max_dev > 1e-9) {
        return fail("max deviation " + fmt(max_dev) + " exceeds 1e-9");
    }
    return pass("100 graphs, " + std::to_string(nodes_checked) + " node sums, max deviation " +
                fmt(max_dev));
}

// --- criterion 4: stump search vs enumeration; boosting error bound ----------

FeatureMatrix random_table(std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
    FeatureMatrix m;
    for (std::size_t c = 0; c < cols; ++c) {
        if (uniform01(rng) < 0.6) {
            m.columns.push_back({"n" + std::to_string(c), ColumnKind::numeric, {}});
        } else {
            m.columns.push_back({"c" + std::to_string(c), ColumnKind::nominal, {"a", "b", "c"}});
        }
    }
    m.columns.push_back({"class", ColumnKind::nominal, {"0", "1"}});
    for (std::size_t r = 0; r < rows; ++r) {
        std::vector<Value> row;
        for (std::size_t c = 0; c < cols; ++c) {
            if (uniform01(rng) < 0.1) {
                row.push_back(missing_value());
            } else if (m.columns[c].kind == ColumnKind::numeric) {
                row.push_back(Value{std::floor(uniform01(rng) * 10.0)});
            } else {
                row.push_back(Value{m.columns[c].domain[
                    static_cast<std::size_t>(uniform01(rng) * 3.0)]});
            }
        }
        row.push_back(Value{std::string(uniform01(rng) < 0.5 ? "0" : "1")});
        m.rows.push_back(std::move(row));
        m.row_ids.push_back(std::to_string(r));
    }
    return m;
}

Outcome stump_search_equivalence() {
    std::size_t datasets = 0;
    for (std::uint64_t seed = 1; seed <= 50; ++seed) {
        std::mt19937_64 rng(seed);
        std::size_t rows = 6 + static_cast<std::size_t>(uniform01(rng) * 25);  // 6..30
        std::size_t cols = 1 + static_cast<std::size_t>(uniform01(rng) * 5);   // 1..5
        FeatureMatrix m = random_table(rows, cols, rng);
        std::vector<std::size_t> all(rows);
        for (std::size_t r = 0; r < rows; ++r) all[r] = r;
        std::vector<double> weights(rows, 1.0 / static_cast<double>(rows));

        auto [stump, error] = best_stump(m, all, weights);
        double expected = oracle_best_stump_error(m, all, weights);
        if (error != expected) {
            return fail("seed " + std::to_string(seed) + ": selected stump error " + fmt(error) +
                        " vs enumerated minimum " + fmt(expected));
        }

        // Boosting error bound: while every kept round has e < 0.5, the bound
        // prod 2*sqrt(e(1-e)) never increases and the final 0-1 training
        // error stays at or below it.
        StumpEnsemble ensemble = train_adaboost(m, all, 10, 100.0);
        double bound = 1.0;
        for (double eps : ensemble.round_errors) {
            if (eps >= 0.5) {
                return fail("kept a round with weighted error >= 0.5");
            }
            double next = bound * 2.0 * std::sqrt(eps * (1.0 - eps));
            if (next > bound + 1e-12) {
                return fail("training error bound increased between rounds");
            }
            bound = next;
        }
        double final_error = ensemble_error(m, all, ensemble, ensemble.stumps.size());
        if (final_error > bound + 1e-12) {
            return fail("final training error " + fmt(final_error) + " above its bound " +
                        fmt(bound));
        }
        ++datasets;
    }
    return pass(std::to_string(datasets) +
                " datasets: exact stump-search match; error bound non-increasing and honored");
}

// --- criterion 5: desk-scale reproduction of the feature-set gap -------------

std::string amd_dir() {
    if (const char* env = std::getenv("AMD_DATA_DIR")) return env;
    return "data/amd";
}

bool amd_available() {
    fs::path dir = amd_dir();
    return fs::exists(dir / "attendance.csv") && fs::exists(dir / "profiles.csv") &&
           fs::exists(dir / "targets.csv");
}

Outcome feature_set_gap() {
    RunConfig config;
    config.folds = 10;
    config.seed = 7;
    config.threads = 0;
    config.masking = MaskingPolicy::transductive;

    LabeledGraph g = generate_homophily_graph(200, 0.5, 0.15, 0.03, {0.1, 1.0}, 7);
    double set1 = cross_validate(g, FeatureSetId::raw_attributes, config).mean.accuracy;
    double set3 = cross_validate(g, FeatureSetId::label_dependent, config).mean.accuracy;
    std::string detail = "protocol transductive; synthetic n=200 seed=7: set3 " + fmt(set3) +
                         " vs set1 " + fmt(set1);
    if (set3 - set1 < 0.15) {
        return fail(detail + "; gap " + fmt(set3 - set1) + " below 0.15");
    }

    if (!amd_available()) {
        return pass(detail + "; gap " + fmt(set3 - set1) +
                    " (source-data check skipped: files not present)");
    }

    fs::path dir = amd_dir();
    auto records = read_attendance_csv((dir / "attendance.csv").string());
    auto profiles = read_profiles_csv((dir / "profiles.csv").string());
    auto targets = read_targets_csv((dir / "targets.csv").string());
    IngestReport report;
    auto kept = clean_participants(records, targets, report);
    LabeledGraph net = project_coattendance(kept, &report);

    // First tag in lexicographic order stands in for one of the 20 datasets.
    std::string tag;
    for (const auto& [person, tags] : targets) {
        for (const auto& t : tags) {
            if (tag.empty() || t < tag) tag = t;
        }
    }
    LabeledGraph full = attach_labels_and_attributes(net, profiles, tag, targets, &report);
    double amd1 = cross_validate(full, FeatureSetId::raw_attributes, config).mean.accuracy;
    double amd3 = cross_validate(full, FeatureSetId::label_dependent, config).mean.accuracy;
    if (amd3 < 0.95) {
        return fail(detail + "; source data set3 " + fmt(amd3) + " below 0.95");
    }
    if (std::abs(amd1 - 0.76) > 0.05) {
        return fail(detail + "; source data set1 " + fmt(amd1) + " outside 0.76 +/- 0.05");
    }
    return pass(detail + "; source data (tag '" + tag + "'): set3 " + fmt(amd3) + ", set1 " +
                fmt(amd1));
}

// --- criterion 6: stability across 20 seeded datasets ------------------------

Outcome stability_gap() {
    std::vector<double> set1, set3;
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        RunConfig config;
        config.folds = 10;
        config.seed = seed;
        config.threads = 0;
        LabeledGraph g = generate_homophily_graph(200, 0.5, 0.15, 0.03, {0.1, 1.0}, seed);
        set1.push_back(cross_validate(g, FeatureSetId::raw_attributes, config).mean.accuracy);
        set3.push_back(cross_validate(g, FeatureSetId::label_dependent, config).mean.accuracy);
    }
    auto stdev = [](const std::vector<double>& v) {
        double mean = 0.0;
        for (double x : v) mean += x;
        mean /= static_cast<double>(v.size());
        double ss = 0.0;
        for (double x : v) ss += (x - mean) * (x - mean);
        return std::sqrt(ss / static_cast<double>(v.size()));
    };
    double s1 = stdev(set1);
    double s3 = stdev(set3);
    if (!(s3 < s1)) {
        return fail("std(set3) " + fmt(s3) + " not below std(set1) " + fmt(s1));
    }
    return pass("20 seeds: std(set3) " + fmt(s3) + " < std(set1) " + fmt(s1));
}

// --- criterion 7: source-data ingestion counts --------------------------------

Outcome ingestion_counts() {
    if (!amd_available()) {
        return skip("source CSVs not present under " + amd_dir());
    }
    fs::path dir = amd_dir();
    auto records = read_attendance_csv((dir / "attendance.csv").string());
    auto targets = read_targets_csv((dir / "targets.csv").string());
    IngestReport report;
    auto kept = clean_participants(records, targets, report);
    project_coattendance(kept, &report);

    std::ostringstream detail;
    detail << "persons " << report.persons_kept << "/334, talks " << report.events
           << "/99, presences " << report.presences_kept << "/3141, edges "
           << report.directed_edges;
    if (report.directed_edges != 68770) {
        detail << " (differs from 68770; cleaning ambiguity)";
    }
    if (report.persons_kept != 334 || report.events != 99 || report.presences_kept != 3141) {
        return fail(detail.str());
    }
    return pass(detail.str());
}

// --- criteria 8 and 9: determinism and round trips ----------------------------

std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("missing file: " + path.string());
    std::stringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

int run_command(const std::string& command) {
    int status = std::system(command.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

Outcome command_determinism() {
    const char* cli = std::getenv("NETFEX_CLI");
    if (cli == nullptr) {
        return fail("NETFEX_CLI not set; cannot exercise the command line");
    }
    fs::path dir = fs::temp_directory_path() / "netfex_acceptance";
    fs::remove_all(dir);
    fs::create_directories(dir);

    std::ofstream(dir / "attendance.csv")
        << "person,talk\na,t1\na,t2\na,t3\nb,t1\nb,t2\nc,t2\nc,t3\nd,t1\nd,t3\n";
    std::ofstream(dir / "profiles.csv")
        << "person,age,gender,country,phone_provider\na,31,f,pl,zip\nb,44,m,de,\nc,27,f,us,hop\nd,,m,,oak\n";
    std::ofstream(dir / "targets.csv")
        << "person,tags\na,activism|privacy\nb,privacy\nc,activism\nd,privacy\n";

    auto quiet = [&](const std::string& args) {
        return std::string(cli) + " " + args + " > " + (dir / "log").string() + " 2>&1";
    };

    std::vector<std::string> checked;
    for (int round : {1, 2}) {
        fs::path net = dir / ("net" + std::to_string(round));
        if (run_command(quiet("ingest --attendance " + (dir / "attendance.csv").string() +
                              " --profiles " + (dir / "profiles.csv").string() + " --targets " +
                              (dir / "targets.csv").string() + " --tag activism --out " +
                              net.string())) != 0) {
            return fail("ingest exited non-zero");
        }
        fs::path arff = dir / ("f" + std::to_string(round) + ".arff");
        fs::path csv = dir / ("f" + std::to_string(round) + ".csv");
        if (run_command(quiet("features --graph " + net.string() +
                              " --set 4 --format arff --seed 9 --out " + arff.string())) != 0 ||
            run_command(quiet("features --graph " + net.string() +
                              " --set 4 --format csv --seed 9 --out " + csv.string())) != 0) {
            return fail("features exited non-zero");
        }
        fs::path rep = dir / ("r" + std::to_string(round));
        if (run_command(quiet("evaluate --synthetic n=80,p_in=0.2,p_out=0.04 --sets 1,3 "
                              "--folds 5 --seed 11 --out " +
                              rep.string())) != 0) {
            return fail("evaluate exited non-zero");
        }
    }

    const std::vector<std::pair<std::string, std::string>> pairs = {
        {"net1/edges.tsv", "net2/edges.tsv"},
        {"net1/labels.tsv", "net2/labels.tsv"},
        {"net1/attributes.csv", "net2/attributes.csv"},
        {"net1/ids.tsv", "net2/ids.tsv"},
        {"f1.arff", "f2.arff"},
        {"f1.csv", "f2.csv"},
        {"r1.txt", "r2.txt"},
        {"r1_set1.csv", "r2_set1.csv"},
        {"r1_set3.csv", "r2_set3.csv"},
    };
    for (const auto& [a, b] : pairs) {
        if (slurp(dir / a) != slurp(dir / b)) {
            return fail(a + " differs between identical runs");
        }
    }
    fs::remove_all(dir);
    return pass(std::to_string(pairs.size()) +
                " artifacts byte-identical across repeated ingest/features/evaluate runs");
}

Outcome arff_round_trip() {
    LabeledGraph g = generate_homophily_graph(60, 0.5, 0.18, 0.04, {0.1, 1.0}, 11);
    RunConfig config;
    for (int set = 1; set <= 4; ++set) {
        FeatureMatrix m = build_features(g, feature_set_from_int(set), config);
        std::ostringstream first;
        write_arff(m, "acceptance", first);
        std::istringstream back(first.str());
        FeatureMatrix parsed = read_arff(back);
        std::ostringstream second;
        write_arff(parsed, parsed.relation, second);
        if (first.str() != second.str()) {
            return fail("set " + std::to_string(set) + " write-read-write changed bytes");
        }
    }
    return pass("feature sets 1-4: write-read-write byte-identical");
}

}  // namespace

int main() {
    struct Criterion {
        int number;
        std::string title;
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria = {
        {1, "betweenness oracle equivalence", betweenness_oracle_equivalence},
        {2, "lifter oracle equivalence", lifter_oracle_equivalence},
        {3, "NCN/NCS partition of unity", partition_of_unity},
        {4, "stump search equivalence and error bound", stump_search_equivalence},
        {5, "feature-set accuracy gap", feature_set_gap},
        {6, "label-dependent stability", stability_gap},
        {7, "co-attendance ingestion counts", ingestion_counts},
        {8, "command determinism", command_determinism},
        {9, "ARFF round trip", arff_round_trip},
    };

    int failures = 0;
    for (const auto& criterion : criteria) {
        Outcome outcome;
        try {
            outcome = criterion.run();
        } catch (const std::exception& e) {
            outcome = fail(std::string("exception: ") + e.what());
        }
        const char* tag = outcome.kind == Outcome::Kind::pass   ? "[PASS]"
                          : outcome.kind == Outcome::Kind::skip ? "[SKIP]"
                                                                : "[FAIL]";
        if (outcome.kind == Outcome::Kind::fail) ++failures;
        std::cout << tag << " criterion " << criterion.number << ": " << criterion.title << " - "
                  << outcome.detail << "\n";
    }
    if (failures > 0) {
        std::cout << failures << " criterion(s) failed\n";
    }
    return failures;
}
