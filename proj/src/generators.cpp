#include "spcs/generators.hpp"

#include <string>
#include <unordered_set>

namespace spcs::gen {

namespace {

std::vector<std::string> one_based(NodeId n) {
    std::vector<std::string> labels;
    for (NodeId v = 1; v <= n; ++v) labels.push_back(std::to_string(v));
    return labels;
}

Graph build(NodeId n, const std::vector<Edge>& edges) { return Graph::from_edges(n, edges, one_based(n)); }

Graph join_components(const Graph& g, std::vector<Edge> edges, std::mt19937_64& rng) {
    auto components = connected_components(g);
    for (std::size_t i = 1; i < components.size(); ++i) {
        const auto& a = components[i - 1];
        const auto& b = components[i];
        std::uniform_int_distribution<std::size_t> pa(0, a.size() - 1);
        std::uniform_int_distribution<std::size_t> pb(0, b.size() - 1);
        edges.emplace_back(a.members()[pa(rng)], b.members()[pb(rng)]);
    }
    return build(g.node_count(), edges);
}

}  // namespace

Graph complete(NodeId n) {
    std::vector<Edge> edges;
    for (NodeId u = 0; u < n; ++u)
        for (NodeId v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return build(n, edges);
}

Graph path(NodeId n) {
    std::vector<Edge> edges;
    for (NodeId v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    return build(n, edges);
}

Graph cycle(NodeId n) {
    std::vector<Edge> edges;
    for (NodeId v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
    return build(n, edges);
}

Graph star(NodeId leaves) {
    std::vector<Edge> edges;
    std::vector<std::string> labels{"c"};
    for (NodeId v = 1; v <= leaves; ++v) {
        edges.emplace_back(0, v);
        labels.push_back("l" + std::to_string(v));
    }
    return Graph::from_edges(leaves + 1, edges, std::move(labels));
}

Graph petersen() {
    std::vector<Edge> edges;
    for (NodeId i = 0; i < 5; ++i) {
        edges.emplace_back(i, (i + 1) % 5);
        edges.emplace_back(i, i + 5);
        edges.emplace_back(i + 5, (i + 2) % 5 + 5);
    }
    return build(10, edges);
}

Graph octahedron() {
    std::vector<Edge> edges;
    for (NodeId u = 0; u < 6; ++u)
        for (NodeId v = u + 1; v < 6; ++v)
            if (v != u + 3) edges.emplace_back(u, v);
    return build(6, edges);
}

Graph k4_with_pendant_path() {
    std::vector<Edge> edges{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {3, 4}, {4, 5}};
    return build(6, edges);
}

Graph disjoint_cliques(NodeId copies, NodeId size) {
    std::vector<Edge> edges;
    for (NodeId c = 0; c < copies; ++c)
        for (NodeId u = 0; u < size; ++u)
            for (NodeId v = u + 1; v < size; ++v) edges.emplace_back(c * size + u, c * size + v);
    return build(copies * size, edges);
}

Graph connected_gnp(NodeId n, double p, std::mt19937_64& rng) {
    std::bernoulli_distribution coin(p);
    std::vector<Edge> edges;
    for (NodeId u = 0; u < n; ++u)
        for (NodeId v = u + 1; v < n; ++v)
            if (coin(rng)) edges.emplace_back(u, v);
    return join_components(build(n, edges), edges, rng);
}

Graph connected_gnm(NodeId n, std::size_t m, std::mt19937_64& rng) {
    std::uniform_int_distribution<NodeId> pick(0, n - 1);
    std::unordered_set<std::uint64_t> seen;
    std::vector<Edge> edges;
    edges.reserve(m);
    const std::size_t possible = static_cast<std::size_t>(n) * (n - 1) / 2;
    while (edges.size() < std::min(m, possible)) {
        NodeId u = pick(rng), v = pick(rng);
        if (u == v) continue;
        if (u > v) std::swap(u, v);
        if (seen.insert(static_cast<std::uint64_t>(u) << 32 | v).second) edges.emplace_back(u, v);
    }
    return join_components(build(n, edges), edges, rng);
}

}  // namespace spcs::gen
