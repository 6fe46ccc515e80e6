#include "netfex/config.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "netfex/value.hpp"

namespace netfex {

std::string to_string(LiftMode m) {
    return m == LiftMode::augmented ? "augmented" : "strict";
}

std::string to_string(MaskingPolicy m) {
    return m == MaskingPolicy::transductive ? "transductive" : "fold-masked";
}

std::string to_string(MissingPolicy m) {
    return m == MissingPolicy::marker ? "marker" : "zero";
}

LiftMode lift_mode_from_string(const std::string& s) {
    if (s == "augmented") return LiftMode::augmented;
    if (s == "strict") return LiftMode::strict;
    throw std::invalid_argument("unknown lifting mode: '" + s + "'");
}

MaskingPolicy masking_policy_from_string(const std::string& s) {
    if (s == "transductive") return MaskingPolicy::transductive;
    if (s == "fold-masked" || s == "fold_masked") return MaskingPolicy::fold_masked;
    throw std::invalid_argument("unknown masking policy: '" + s + "'");
}

MissingPolicy missing_policy_from_string(const std::string& s) {
    if (s == "marker") return MissingPolicy::marker;
    if (s == "zero") return MissingPolicy::zero;
    throw std::invalid_argument("unknown missing-value policy: '" + s + "'");
}

std::vector<std::pair<std::string, std::string>> RunConfig::snapshot() const {
    return {
        {"direction_mode", to_string(direction)},
        {"lifting_mode", to_string(lifting)},
        {"masking_policy", to_string(masking)},
        {"missing_policy", to_string(missing)},
        {"folds", std::to_string(folds)},
        {"iterations", std::to_string(iterations)},
        {"weight_threshold", format_double(weight_threshold)},
        {"seed", std::to_string(seed)},
        {"threads", std::to_string(threads)},
    };
}

void RunConfig::apply(const std::string& key, const std::string& value) {
    if (key == "direction_mode") {
        direction = direction_mode_from_string(value);
    } else if (key == "lifting_mode") {
        lifting = lift_mode_from_string(value);
    } else if (key == "masking_policy") {
        masking = masking_policy_from_string(value);
    } else if (key == "missing_policy") {
        missing = missing_policy_from_string(value);
    } else if (key == "folds") {
        folds = std::stoi(value);
    } else if (key == "iterations") {
        iterations = std::stoi(value);
    } else if (key == "weight_threshold") {
        weight_threshold = parse_double(value);
    } else if (key == "seed") {
        seed = std::stoull(value);
    } else if (key == "threads") {
        threads = std::stoi(value);
    } else {
        throw std::invalid_argument("unknown config key: '" + key + "'");
    }
}

namespace {

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

}  // namespace

RunConfig load_config(std::istream& in) {
    RunConfig config;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        std::size_t eq = t.find('=');
        if (eq == std::string::npos) {
            throw std::runtime_error("config line " + std::to_string(line_no) +
                                     ": expected key = value");
        }
        config.apply(trim(t.substr(0, eq)), trim(t.substr(eq + 1)));
    }
    return config;
}

RunConfig load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open config file: " + path);
    }
    return load_config(in);
}

void write_config(const RunConfig& config, std::ostream& out) {
    for (const auto& [key, value] : config.snapshot()) {
        out << key << " = " << value << "\n";
    }
}

}  // namespace netfex
