#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

#include "spcs/graph.hpp"

// Small named graphs and random models used by tests, benchmarks and the
// acceptance suite. Fixture labels are 1-based ("1", "2", ...) unless noted.
namespace spcs::gen {

Graph complete(NodeId n);
Graph path(NodeId n);
Graph cycle(NodeId n);
/// Center labelled "c", leaves "l1".."l<leaves>".
Graph star(NodeId leaves);
/// Outer 5-cycle 1..5, spokes i -- i+5, inner pentagram on 6..10.
Graph petersen();
/// K6 minus the perfect matching {1,4}, {2,5}, {3,6}.
Graph octahedron();
/// K4 on 1..4 plus the path 4 - 5 - 6.
Graph k4_with_pendant_path();
/// Vertex-disjoint copies of K_size (disconnected; labels run on).
Graph disjoint_cliques(NodeId copies, NodeId size);

/// G(n, p), then one random edge between consecutive components so the
/// result is connected on exactly n nodes.
Graph connected_gnp(NodeId n, double p, std::mt19937_64& rng);

/// m distinct uniform edges on n nodes, joined into one component as above.
Graph connected_gnm(NodeId n, std::size_t m, std::mt19937_64& rng);

}  // namespace spcs::gen
