#pragma once

#include <cstdint>
#include <random>

#include "netfex/graph.hpp"

namespace netfex {

struct WeightRange {
    double lo = 0.1;
    double hi = 1.0;
};

// Uniform draw in [0, 1) from the top 53 bits of the generator, so sequences
// do not depend on the standard library's distribution implementation.
inline double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Planted two-class network: labels '1' with probability class_balance, a
// directed edge per ordered pair with probability p_in (same class) or p_out
// (different class), weights uniform in [lo, hi], plus dummy numeric and
// nominal attributes. Deterministic given the seed.
LabeledGraph generate_homophily_graph(std::size_t n, double class_balance, double p_in,
                                      double p_out, WeightRange weights, std::uint64_t seed);

}  // namespace netfex
