#include "netfex/synthetic.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace netfex {

namespace {

std::string padded_id(std::size_t i, std::size_t n) {
    std::size_t width = 1;
    for (std::size_t m = n > 0 ? n - 1 : 0; m >= 10; m /= 10) ++width;
    std::string digits = std::to_string(i);
    return "n" + std::string(width - digits.size(), '0') + digits;
}

}  // namespace

LabeledGraph generate_homophily_graph(std::size_t n, double class_balance, double p_in,
                                      double p_out, WeightRange weights, std::uint64_t seed) {
    if (!(p_out >= 0.0 && p_out <= p_in && p_in <= 1.0)) {
        throw std::invalid_argument("require 0 <= p_out <= p_in <= 1");
    }
    if (class_balance < 0.0 || class_balance > 1.0) {
        throw std::invalid_argument("class_balance must be in [0, 1]");
    }
    if (weights.lo < 0.0 || weights.lo > weights.hi) {
        throw std::invalid_argument("require 0 <= weight lo <= hi");
    }

    std::mt19937_64 rng(seed);
    GraphBuilder builder;
    builder.set_schema({{"age", ColumnKind::numeric},
                        {"gender", ColumnKind::nominal},
                        {"country", ColumnKind::nominal},
                        {"phone_provider", ColumnKind::nominal}});
    builder.set_label_set({"0", "1"});

    static const std::vector<std::string> genders = {"f", "m"};
    static const std::vector<std::string> countries = {"at", "de", "fr", "pl", "us"};
    static const std::vector<std::string> providers = {"hop", "oak", "ray", "zip"};

    std::vector<bool> positive(n);
    for (std::size_t i = 0; i < n; ++i) {
        NodeId v = builder.add_node(padded_id(i, n));
        positive[i] = uniform01(rng) < class_balance;
        builder.set_label(v, positive[i] ? "1" : "0");
        builder.set_attribute(v, 0, Value{18.0 + uniform01(rng) * 62.0});
        builder.set_attribute(v, 1, Value{genders[static_cast<std::size_t>(uniform01(rng) * 2)]});
        builder.set_attribute(v, 2, Value{countries[static_cast<std::size_t>(uniform01(rng) * 5)]});
        builder.set_attribute(v, 3, Value{providers[static_cast<std::size_t>(uniform01(rng) * 4)]});
    }

    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            double p = positive[i] == positive[j] ? p_in : p_out;
            if (uniform01(rng) < p) {
                double w = weights.lo + uniform01(rng) * (weights.hi - weights.lo);
                builder.add_edge(static_cast<NodeId>(i), static_cast<NodeId>(j), w);
            }
        }
    }
    return builder.build();
}

}  // namespace netfex
