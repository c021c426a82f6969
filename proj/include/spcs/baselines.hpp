#pragma once

#include <cstddef>
#include <cstdint>

#include "spcs/core_decomp.hpp"
#include "spcs/engine.hpp"
#include "spcs/graph.hpp"

namespace spcs {

/// Random single-node deletion from each maximal k-core (k from the upper
/// bound down to 2). A node is removed only if every remaining member keeps
/// >= k neighbours; a component is abandoned once it is critical, i.e. no
/// single member can be removed. Falls back to BFS like tsize_kcore.
SearchResult critical_search(const Graph& g, std::size_t t, std::uint64_t seed);
SearchResult critical_search(const Graph& g, const CorenessTable& ct, std::size_t t, std::uint64_t seed);

/// Greedy growth from a maximum-coreness seed: repeatedly add the frontier
/// node with the most edges into the set (ties: higher coreness, then
/// random). This is a reconstruction adapted to a fixed target size, and
/// results carry reconstruction = true.
SearchResult s_greedy_search(const Graph& g, std::size_t t, std::uint64_t seed);
SearchResult s_greedy_search(const Graph& g, const CorenessTable& ct, std::size_t t, std::uint64_t seed);

}  // namespace spcs
