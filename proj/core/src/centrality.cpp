#include "netfex/centrality.hpp"

#include <algorithm>
#include <cstdint>
#include <vector>

#include "netfex/parallel.hpp"

namespace netfex {

namespace {

std::vector<std::vector<NodeId>> adjacency_lists(const Adjacency& g, DirectionMode dir) {
    std::vector<std::vector<NodeId>> lists(g.node_count());
    for (NodeId v = 0; v < g.node_count(); ++v) {
        lists[v] = g.neighbors(v, dir);
    }
    return lists;
}

// Per-worker buffers, reset per source instead of reallocated.
struct BrandesScratch {
    std::vector<std::int64_t> dist;
    std::vector<double> sigma;
    std::vector<double> delta;
    std::vector<std::vector<NodeId>> preds;
    std::vector<NodeId> order;

    explicit BrandesScratch(std::size_t n) : dist(n, -1), sigma(n, 0.0), delta(n, 0.0), preds(n) {
        order.reserve(n);
    }
};

// One source pass of the dependency-accumulation betweenness algorithm.
// Adds each node's pair-dependency for source s into acc.
void accumulate_source(NodeId s, const std::vector<std::vector<NodeId>>& adj,
                       BrandesScratch& scratch, std::vector<double>& acc) {
    auto& [dist, sigma, delta, preds, order] = scratch;
    for (NodeId v : order) {  // only the previous pass's reachable set is dirty
        dist[v] = -1;
        sigma[v] = 0.0;
        delta[v] = 0.0;
        preds[v].clear();
    }
    order.clear();

    dist[s] = 0;
    sigma[s] = 1.0;
    order.push_back(s);
    for (std::size_t head = 0; head < order.size(); ++head) {
        NodeId v = order[head];
        for (NodeId u : adj[v]) {
            if (dist[u] < 0) {
                dist[u] = dist[v] + 1;
                order.push_back(u);
            }
            if (dist[u] == dist[v] + 1) {
                sigma[u] += sigma[v];
                preds[u].push_back(v);
            }
        }
    }

    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        NodeId w = *it;
        for (NodeId v : preds[w]) {
            delta[v] += sigma[v] / sigma[w] * (1.0 + delta[w]);
        }
        if (w != s) acc[w] += delta[w];
    }
}

}  // namespace

CentralityVector betweenness(const Adjacency& g, DirectionMode dir, int threads) {
    const std::size_t n = g.node_count();
    CentralityVector result{"betweenness", dir, std::vector<double>(n, 0.0)};
    if (n < 3) return result;

    const auto adj = adjacency_lists(g, dir);
    int workers = std::min<std::size_t>(static_cast<std::size_t>(resolve_threads(threads)), n);
    std::vector<std::vector<double>> partial(workers, std::vector<double>(n, 0.0));
    parallel_for_chunks(n, workers, [&](std::size_t begin, std::size_t end, int w) {
        BrandesScratch scratch(n);
        for (std::size_t s = begin; s < end; ++s) {
            accumulate_source(static_cast<NodeId>(s), adj, scratch, partial[w]);
        }
    });
    for (const auto& part : partial) {
        for (std::size_t v = 0; v < n; ++v) result.values[v] += part[v];
    }

    if (dir == DirectionMode::undirected_view) {
        for (double& v : result.values) v *= 0.5;
    }
    return result;
}

CentralityVector degree_centrality(const Adjacency& g, DirectionMode dir) {
    const std::size_t n = g.node_count();
    CentralityVector result{"degree", dir, std::vector<double>(n, 0.0)};
    if (n < 2) return result;
    for (NodeId v = 0; v < n; ++v) {
        result.values[v] = static_cast<double>(g.neighbors(v, dir).size()) /
                           static_cast<double>(n - 1);
    }
    return result;
}

CentralityVector clustering_coefficient(const Adjacency& g, DirectionMode dir) {
    const std::size_t n = g.node_count();
    CentralityVector result{"clustering_coefficient", dir, std::vector<double>(n, 0.0)};
    std::vector<char> member(n, 0);
    for (NodeId v = 0; v < n; ++v) {
        const std::vector<NodeId> hood = g.neighbors(v, dir);
        const std::size_t k = hood.size();
        if (k < 2) continue;
        for (NodeId u : hood) member[u] = 1;

        std::size_t links = 0;
        for (NodeId u : hood) {
            if (dir == DirectionMode::directed) {
                for (const auto& [t, w] : g.out_edges(u)) {
                    if (member[t]) ++links;
                }
            } else {
                // Count each adjacent pair once via the (u < t) side.
                for (NodeId t : g.neighbors(u, dir)) {
                    if (member[t] && u < t) ++links;
                }
            }
        }
        for (NodeId u : hood) member[u] = 0;

        const double slots = dir == DirectionMode::directed
                                 ? static_cast<double>(k) * static_cast<double>(k - 1)
                                 : static_cast<double>(k) * static_cast<double>(k - 1) / 2.0;
        result.values[v] = static_cast<double>(links) / slots;
    }
    return result;
}

}  // namespace netfex
