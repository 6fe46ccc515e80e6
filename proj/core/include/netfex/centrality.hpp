#pragma once

#include <functional>
#include <string>
#include <vector>

#include "netfex/graph.hpp"

namespace netfex {

// Per-node values of one structural measure over a graph view.
struct CentralityVector {
    std::string measure;
    DirectionMode dir = DirectionMode::undirected_view;
    std::vector<double> values;  // indexed by dense node id
};

// Shortest-path betweenness over unweighted hop counts, unnormalized.
// directed mode sums over ordered source/target pairs, undirected_view over
// unordered pairs. Pairs with no connecting path contribute nothing.
// Per-source passes run on `threads` workers with a fixed merge order, so
// results are reproducible for a fixed thread count.
CentralityVector betweenness(const Adjacency& g, DirectionMode dir, int threads = 1);

// Neighbor count over card(V)-1; 0 on graphs with fewer than 2 nodes.
CentralityVector degree_centrality(const Adjacency& g, DirectionMode dir);

// Edge density among a node's neighbors. Directed mode counts each
// orientation separately over k(k-1) slots; undirected_view counts each
// adjacent pair once over k(k-1)/2. Nodes with fewer than 2 neighbors get 0.
CentralityVector clustering_coefficient(const Adjacency& g, DirectionMode dir);

// Signature shared by the structural measures, used by the label lifter.
using StructuralMeasure = std::function<CentralityVector(const Adjacency&, DirectionMode)>;

}  // namespace netfex
