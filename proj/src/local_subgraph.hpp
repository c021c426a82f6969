#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "spcs/graph.hpp"

namespace spcs::detail {

// Induced subgraph of a node set, re-indexed to [0, |set|) so the refinement
// loops work on compact arrays.
struct LocalSubgraph {
    std::vector<NodeId> global;
    std::vector<std::size_t> offsets;
    std::vector<std::uint32_t> adjacency;

    LocalSubgraph(const Graph& g, const NodeSet& set) : global(set.begin(), set.end()) {
        constexpr auto absent = std::numeric_limits<std::uint32_t>::max();
        std::vector<std::uint32_t> local(g.node_count(), absent);
        for (std::uint32_t i = 0; i < global.size(); ++i) local[global[i]] = i;
        offsets.assign(global.size() + 1, 0);
        for (std::uint32_t i = 0; i < global.size(); ++i) {
            for (NodeId u : g.neighbors(global[i]))
                if (local[u] != absent) adjacency.push_back(local[u]);
            offsets[i + 1] = adjacency.size();
        }
    }

    std::uint32_t size() const { return static_cast<std::uint32_t>(global.size()); }
    std::span<const std::uint32_t> neighbors(std::uint32_t i) const {
        return {adjacency.data() + offsets[i], adjacency.data() + offsets[i + 1]};
    }
    std::uint32_t degree(std::uint32_t i) const { return static_cast<std::uint32_t>(offsets[i + 1] - offsets[i]); }

    NodeSet to_global(std::span<const std::uint32_t> locals) const {
        std::vector<NodeId> ids;
        ids.reserve(locals.size());
        for (auto i : locals) ids.push_back(global[i]);
        return NodeSet(std::move(ids));
    }
};

}  // namespace spcs::detail
