// Command-line surface of the netfex toolkit: build a co-attendance network
// from raw interaction data, export per-node feature datasets, and evaluate
// them with boosted decision stumps under cross-validation.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include <CLI11.hpp>

#include "netfex/config.hpp"
#include "netfex/dataset.hpp"
#include "netfex/evaluate.hpp"
#include "netfex/ingest.hpp"
#include "netfex/synthetic.hpp"

namespace fs = std::filesystem;

namespace {

struct GraphArgs {
    std::string dir;
    std::string edges, labels, attributes, ids;

    netfex::GraphFiles resolve() const {
        netfex::GraphFiles files;
        if (!dir.empty()) {
            files.edges = (fs::path(dir) / "edges.tsv").string();
            fs::path lp = fs::path(dir) / "labels.tsv";
            fs::path ap = fs::path(dir) / "attributes.csv";
            fs::path ip = fs::path(dir) / "ids.tsv";
            if (fs::exists(lp)) files.labels = lp.string();
            if (fs::exists(ap)) files.attributes = ap.string();
            if (fs::exists(ip)) files.ids = ip.string();
        }
        if (!edges.empty()) files.edges = edges;
        if (!labels.empty()) files.labels = labels;
        if (!attributes.empty()) files.attributes = attributes;
        if (!ids.empty()) files.ids = ids;
        if (files.edges.empty()) {
            throw CLI::ValidationError("--graph or --edges is required");
        }
        return files;
    }
};

void add_graph_options(CLI::App* cmd, GraphArgs& args) {
    cmd->add_option("--graph", args.dir, "Directory with edges.tsv/labels.tsv/attributes.csv/ids.tsv");
    cmd->add_option("--edges", args.edges, "Edge list TSV (src<TAB>dst<TAB>weight), '-' for stdin");
    cmd->add_option("--labels", args.labels, "Label sidecar TSV (node<TAB>label)");
    cmd->add_option("--attributes", args.attributes, "Attribute CSV (person,age,gender,country,phone_provider)");
    cmd->add_option("--ids", args.ids, "Id map TSV (id<TAB>external)");
}

struct ConfigArgs {
    std::string config_file;
    std::string direction, lifting, masking, missing;
    int folds = -1, iterations = -1, threads = -1;
    double weight_threshold = -1.0;
    std::int64_t seed = -1;

    netfex::RunConfig resolve() const {
        netfex::RunConfig c;
        if (!config_file.empty()) c = netfex::load_config_file(config_file);
        if (!direction.empty()) c.direction = netfex::direction_mode_from_string(direction);
        if (!lifting.empty()) c.lifting = netfex::lift_mode_from_string(lifting);
        if (!masking.empty()) c.masking = netfex::masking_policy_from_string(masking);
        if (!missing.empty()) c.missing = netfex::missing_policy_from_string(missing);
        if (folds >= 0) c.folds = folds;
        if (iterations >= 0) c.iterations = iterations;
        if (threads >= 0) c.threads = threads;
        if (weight_threshold >= 0.0) c.weight_threshold = weight_threshold;
        if (seed >= 0) c.seed = static_cast<std::uint64_t>(seed);
        return c;
    }
};

void add_config_options(CLI::App* cmd, ConfigArgs& args, bool with_eval_knobs) {
    cmd->add_option("--config", args.config_file, "key = value config file; flags override it");
    cmd->add_option("--direction", args.direction,
                    "Adjacency mode: directed|undirected (default: undirected)")
        ->check(CLI::IsMember({"directed", "undirected"}));
    cmd->add_option("--lifting", args.lifting,
                    "Label lifting mode: augmented|strict (default: augmented)")
        ->check(CLI::IsMember({"augmented", "strict"}));
    cmd->add_option("--missing", args.missing,
                    "Undefined feature policy: marker|zero (default: marker)")
        ->check(CLI::IsMember({"marker", "zero"}));
    cmd->add_option("--seed", args.seed, "Seed for all randomness (default: 1)")
        ->check(CLI::NonNegativeNumber);
    cmd->add_option("--threads", args.threads, "Worker cap; 0 = hardware (default: 0)");
    if (with_eval_knobs) {
        cmd->add_option("--masking", args.masking,
                        "Label masking: transductive|fold-masked (default: transductive)")
            ->check(CLI::IsMember({"transductive", "fold-masked"}));
        cmd->add_option("--folds", args.folds, "Cross-validation folds, >= 2 (default: 10)")
            ->check(CLI::Range(2, 1000000));
        cmd->add_option("--iterations", args.iterations, "Boosting rounds (default: 10)")
            ->check(CLI::PositiveNumber);
        cmd->add_option("--weight-threshold", args.weight_threshold,
                        "Percent of row weight each stump trains on (default: 100)");
    }
}

void write_file(const std::string& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write file: " + path);
    out << contents;
    if (!out) throw std::runtime_error("write failed: " + path);
}

// --- ingest ------------------------------------------------------------------

struct IngestArgs {
    std::string attendance, profiles, targets, tag, out_dir;
    bool keep_isolated = false;
};

int run_ingest(const IngestArgs& args) {
    auto records = netfex::read_attendance_csv(args.attendance);
    auto profiles = netfex::read_profiles_csv(args.profiles);
    auto targets = netfex::read_targets_csv(args.targets);

    netfex::IngestReport report;
    auto kept = netfex::clean_participants(records, targets, report);
    netfex::LabeledGraph net = netfex::project_coattendance(kept, &report);

    if (args.keep_isolated) {
        // Profiled participants with tags but no co-attendance ties become
        // isolated nodes; the cleaning rule still applies.
        netfex::GraphBuilder builder;
        for (netfex::NodeId v = 0; v < net.node_count(); ++v) builder.add_node(net.external_id(v));
        for (const auto& [id, profile] : profiles) {
            auto it = targets.find(id);
            if (it != targets.end() && !it->second.empty()) builder.ensure_node(id);
        }
        for (netfex::NodeId v = 0; v < net.node_count(); ++v) {
            for (const auto& [dst, w] : net.adjacency().out_edges(v)) builder.add_edge(v, dst, w);
        }
        net = builder.build();
        report.persons_kept = net.node_count();
    }

    netfex::LabeledGraph graph =
        netfex::attach_labels_and_attributes(net, profiles, args.tag, targets, &report);

    fs::create_directories(args.out_dir);
    auto emit = [&](const char* name, auto&& writer) {
        std::ofstream out(fs::path(args.out_dir) / name, std::ios::binary);
        if (!out) throw std::runtime_error(std::string("cannot write ") + name);
        writer(graph, out);
        if (!out) throw std::runtime_error(std::string("write failed: ") + name);
    };
    emit("edges.tsv", [](const auto& g, auto& o) { netfex::write_edge_list(g, o); });
    emit("labels.tsv", [](const auto& g, auto& o) { netfex::write_label_sidecar(g, o); });
    emit("attributes.csv", [](const auto& g, auto& o) { netfex::write_attributes_csv(g, o); });
    emit("ids.tsv", [](const auto& g, auto& o) { netfex::write_id_map(g, o); });

    std::cout << "persons_raw      " << report.persons_raw << "\n"
              << "persons_kept     " << report.persons_kept << "\n"
              << "events           " << report.events << "\n"
              << "presences_raw    " << report.presences_raw << "\n"
              << "presences_kept   " << report.presences_kept << "\n"
              << "directed_edges   " << report.directed_edges << "\n"
              << "unresolved_profiles " << report.unresolved_profiles << "\n"
              << "unresolved_targets  " << report.unresolved_targets << "\n"
              << "written          " << args.out_dir << "\n";
    return 0;
}

// --- features ----------------------------------------------------------------

struct FeatureArgs {
    GraphArgs graph;
    ConfigArgs config;
    int set = 0;
    std::string format = "arff";
    std::string out;
    std::string relation = "netfex";
};

int run_features(const FeatureArgs& args) {
    netfex::RunConfig config = args.config.resolve();
    netfex::LabeledGraph g = netfex::load_graph(args.graph.resolve());
    netfex::FeatureMatrix m = netfex::build_features(g, netfex::feature_set_from_int(args.set), config);

    if (args.format == "arff") {
        netfex::write_arff_file(m, args.relation, args.out);
    } else {
        netfex::write_csv_file(m, args.out);
    }
    std::cout << "rows " << m.rows.size() << ", columns " << m.columns.size() << " -> " << args.out
              << "\n";
    return 0;
}

// --- evaluate ----------------------------------------------------------------

struct EvaluateArgs {
    GraphArgs graph;
    ConfigArgs config;
    bool use_synthetic = false;
    std::string synthetic;
    std::string sets = "1,2,3,4";
    std::string out;
    double label_fraction = 1.0;
    bool leakage_audit = false;
};

netfex::LabeledGraph synthetic_from_spec(const std::string& spec, std::uint64_t seed) {
    std::size_t n = 200;
    double balance = 0.5, p_in = 0.15, p_out = 0.03;
    netfex::WeightRange range;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        std::size_t eq = item.find('=');
        if (eq == std::string::npos) {
            throw std::runtime_error("bad synthetic spec item '" + item + "' (want key=value)");
        }
        std::string key = item.substr(0, eq);
        double value = netfex::parse_double(item.substr(eq + 1));
        if (key == "n") {
            n = static_cast<std::size_t>(value);
        } else if (key == "balance") {
            balance = value;
        } else if (key == "p_in") {
            p_in = value;
        } else if (key == "p_out") {
            p_out = value;
        } else if (key == "w_lo") {
            range.lo = value;
        } else if (key == "w_hi") {
            range.hi = value;
        } else {
            throw std::runtime_error("unknown synthetic spec key '" + key + "'");
        }
    }
    return netfex::generate_homophily_graph(n, balance, p_in, p_out, range, seed);
}

int run_evaluate(const EvaluateArgs& args) {
    netfex::RunConfig config = args.config.resolve();

    netfex::LabeledGraph g = args.use_synthetic
                                 ? synthetic_from_spec(args.synthetic, config.seed)
                                 : netfex::load_graph(args.graph.resolve());

    if (args.label_fraction < 1.0) {
        // Seeded choice of nodes that keep their labels.
        std::vector<netfex::NodeId> labeled = g.known_unknown_partition().first;
        std::mt19937_64 rng(config.seed + 1);
        for (std::size_t i = labeled.size(); i > 1; --i) {
            std::size_t j = static_cast<std::size_t>(netfex::uniform01(rng) * static_cast<double>(i));
            std::swap(labeled[i - 1], labeled[j]);
        }
        std::size_t hide_count = labeled.size() -
            static_cast<std::size_t>(args.label_fraction * static_cast<double>(labeled.size()));
        std::vector<netfex::NodeId> hide(labeled.begin(), labeled.begin() + hide_count);
        g = netfex::mask_labels(g, hide);
    }

    std::vector<netfex::FeatureSetId> sets;
    std::stringstream ss(args.sets);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) sets.push_back(netfex::feature_set_from_int(std::stoi(item)));
    }

    // The audit runs every set under both masking protocols so leakage shows
    // up as the transductive-minus-fold-masked gap.
    std::vector<netfex::MaskingPolicy> protocols =
        args.leakage_audit ? std::vector<netfex::MaskingPolicy>{netfex::MaskingPolicy::transductive,
                                                                netfex::MaskingPolicy::fold_masked}
                           : std::vector<netfex::MaskingPolicy>{config.masking};

    std::ostringstream text;
    std::vector<std::tuple<netfex::FeatureSetId, netfex::MaskingPolicy, netfex::EvalReport>> all;
    for (netfex::MaskingPolicy protocol : protocols) {
        netfex::RunConfig run = config;
        run.masking = protocol;
        std::vector<std::pair<netfex::FeatureSetId, netfex::EvalReport>> reports;
        for (netfex::FeatureSetId set : sets) {
            reports.emplace_back(set, netfex::cross_validate(g, set, run));
            all.emplace_back(set, protocol, reports.back().second);
        }
        text << netfex::report_table(reports);
        if (protocols.size() > 1 && protocol != protocols.back()) text << "\n";
    }

    std::cout << text.str();
    if (!args.out.empty()) {
        write_file(args.out + ".txt", text.str());
        for (const auto& [set, protocol, report] : all) {
            std::string name = args.out + "_set" + std::to_string(static_cast<int>(set));
            if (args.leakage_audit) {
                name += protocol == netfex::MaskingPolicy::transductive ? "_transductive"
                                                                        : "_fold_masked";
            }
            netfex::write_report_csv_file(report, name + ".csv");
        }
        std::cout << "written " << args.out << ".txt\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"social network feature extraction and evaluation toolkit"};
    app.require_subcommand(1);

    IngestArgs ingest_args;
    CLI::App* ingest = app.add_subcommand(
        "ingest", "Build a weighted directed co-attendance network from raw CSVs");
    ingest->add_option("--attendance", ingest_args.attendance, "Attendance CSV (person,talk)")
        ->required();
    ingest->add_option("--profiles", ingest_args.profiles,
                       "Profile CSV (person,age,gender,country,phone_provider)")
        ->required();
    ingest->add_option("--targets", ingest_args.targets, "Target CSV (person,tags; '|'-separated)")
        ->required();
    ingest->add_option("--tag", ingest_args.tag, "Target tag defining the positive class")
        ->required();
    ingest->add_option("--out", ingest_args.out_dir, "Output directory for the persisted graph")
        ->required();
    ingest->add_flag("--keep-isolated", ingest_args.keep_isolated,
                     "Keep tagged participants with no attendance as isolated nodes");

    FeatureArgs feature_args;
    auto configure_features = [&](CLI::App* cmd) {
        add_graph_options(cmd, feature_args.graph);
        add_config_options(cmd, feature_args.config, false);
        cmd->add_option("--set", feature_args.set, "Feature set: 1 raw, 2 structural, 3 label-dependent, 4 all")
            ->required()
            ->check(CLI::Range(1, 4));
        cmd->add_option("--format", feature_args.format, "Output format")
            ->check(CLI::IsMember({"arff", "csv"}))
            ->capture_default_str();
        cmd->add_option("--out", feature_args.out, "Output file")->required();
        cmd->add_option("--relation", feature_args.relation, "ARFF relation name")
            ->capture_default_str();
    };
    CLI::App* features =
        app.add_subcommand("features", "Compute a feature set and export it as ARFF or CSV");
    configure_features(features);
    CLI::App* exporter = app.add_subcommand("export", "Alias of features");
    configure_features(exporter);

    EvaluateArgs eval_args;
    CLI::App* evaluate = app.add_subcommand(
        "evaluate", "Cross-validate boosted decision stumps per feature set");
    add_graph_options(evaluate, eval_args.graph);
    add_config_options(evaluate, eval_args.config, true);
    CLI::Option* synthetic_opt =
        evaluate->add_option("--synthetic", eval_args.synthetic,
                             "Generate a homophilous graph instead of loading one; "
                             "key=value list (n, balance, p_in, p_out, w_lo, w_hi)")
            ->expected(0, 1);
    evaluate->add_option("--sets", eval_args.sets, "Comma-separated feature sets to evaluate")
        ->capture_default_str();
    evaluate->add_option("--label-fraction", eval_args.label_fraction,
                         "Fraction of labeled nodes kept labeled before evaluation")
        ->check(CLI::Range(0.0, 1.0))
        ->capture_default_str();
    evaluate->add_flag("--leakage-audit", eval_args.leakage_audit,
                       "Run each set under both transductive and fold-masked protocols");
    evaluate->add_option("--out", eval_args.out, "Report path prefix (.txt and per-set .csv)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }
    eval_args.use_synthetic = synthetic_opt->count() > 0;

    try {
        if (app.got_subcommand(ingest)) return run_ingest(ingest_args);
        if (app.got_subcommand(features)) return run_features(feature_args);
        if (app.got_subcommand(exporter)) return run_features(feature_args);
        if (app.got_subcommand(evaluate)) return run_evaluate(eval_args);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
