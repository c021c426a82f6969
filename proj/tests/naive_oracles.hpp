#pragma once

// Test-only reference computations. They deliberately avoid the library's
// peeling and enumeration code paths.

#include <bit>
#include <cstdint>
#include <limits>
#include <vector>

#include "spcs/graph.hpp"

namespace spcs::testing {

// Pairwise adjacency count through has_edge.
inline std::uint32_t pairwise_min_degree(const Graph& g, const std::vector<NodeId>& s) {
    std::uint32_t best = std::numeric_limits<std::uint32_t>::max();
    for (NodeId v : s) {
        std::uint32_t d = 0;
        for (NodeId u : s)
            if (u != v && g.has_edge(u, v)) ++d;
        best = std::min(best, d);
    }
    return best;
}

// For each k, delete any node with fewer than k live neighbours until nothing
// changes; survivors have coreness >= k.
inline std::vector<std::uint32_t> iterated_deletion_coreness(const Graph& g) {
    const NodeId n = g.node_count();
    std::vector<std::uint32_t> coreness(n, 0);
    for (std::uint32_t k = 1;; ++k) {
        std::vector<bool> live(n, true);
        bool changed = true;
        while (changed) {
            changed = false;
            for (NodeId v = 0; v < n; ++v) {
                if (!live[v]) continue;
                std::uint32_t d = 0;
                for (NodeId u : g.neighbors(v)) d += live[u];
                if (d < k) {
                    live[v] = false;
                    changed = true;
                }
            }
        }
        bool any = false;
        for (NodeId v = 0; v < n; ++v)
            if (live[v]) {
                coreness[v] = k;
                any = true;
            }
        if (!any) return coreness;
    }
}

// Best core number over all t-subsets by scanning every bitmask (n <= 24).
inline std::uint32_t bitmask_best_core(const Graph& g, std::size_t t) {
    const NodeId n = g.node_count();
    std::vector<std::uint32_t> adj(n, 0);
    for (NodeId v = 0; v < n; ++v)
        for (NodeId u : g.neighbors(v)) adj[v] |= 1u << u;
    std::uint32_t best = 0;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        if (static_cast<std::size_t>(std::popcount(mask)) != t) continue;
        std::uint32_t low = std::numeric_limits<std::uint32_t>::max();
        for (NodeId v = 0; v < n; ++v)
            if (mask >> v & 1u) low = std::min<std::uint32_t>(low, std::popcount(adj[v] & mask));
        best = std::max(best, low);
    }
    return best;
}

inline bool induces_connected(const Graph& g, const NodeSet& s) {
    std::vector<std::uint8_t> mask(g.node_count(), 0);
    for (NodeId v : s) mask[v] = 1;
    return connected_components(g, mask).size() == 1;
}

}  // namespace spcs::testing
