#include "spcs/baselines.hpp"

#include <algorithm>
#include <optional>
#include <queue>
#include <tuple>

#include "local_subgraph.hpp"

namespace spcs {

namespace {

// Shrinks one k-core component by random admissible deletions. Members are
// drawn with replacement; `tried` holds the epoch in which a member was last
// found non-removable, and the epoch advances on every successful removal.
std::optional<NodeSet> shrink_until_critical(const Graph& g, const NodeSet& component, std::uint32_t k,
                                             std::size_t t, Rng& rng) {
    const detail::LocalSubgraph sub(g, component);
    std::vector<std::uint32_t> members(sub.size());
    std::vector<std::uint32_t> position(sub.size());
    std::vector<std::uint32_t> degree(sub.size());
    std::vector<std::uint8_t> alive(sub.size(), 1);
    std::vector<std::uint64_t> tried(sub.size(), 0);
    for (std::uint32_t i = 0; i < sub.size(); ++i) {
        members[i] = i;
        position[i] = i;
        degree[i] = sub.degree(i);
    }

    std::uint64_t epoch = 1;
    std::size_t tried_count = 0;
    while (members.size() > t) {
        std::uniform_int_distribution<std::size_t> pick(0, members.size() - 1);
        const std::uint32_t v = members[pick(rng)];
        if (tried[v] == epoch) continue;

        bool removable = true;
        for (auto u : sub.neighbors(v))
            if (alive[u] && degree[u] <= k) {
                removable = false;
                break;
            }
        if (!removable) {
            tried[v] = epoch;
            if (++tried_count == members.size()) return std::nullopt;
            continue;
        }

        alive[v] = 0;
        for (auto u : sub.neighbors(v))
            if (alive[u]) --degree[u];
        const std::uint32_t last = members.back();
        members[position[v]] = last;
        position[last] = position[v];
        members.pop_back();
        ++epoch;
        tried_count = 0;
    }
    return sub.to_global(members);
}

}  // namespace

SearchResult critical_search(const Graph& g, const CorenessTable& ct, std::size_t t, std::uint64_t seed) {
    require_searchable(g, t);
    const auto start = std::chrono::steady_clock::now();
    Rng rng(seed);
    const std::uint32_t bound = upper_bound_k(ct, t);
    auto finish = [&](NodeSet nodes, bool fallback) {
        SearchResult r = make_result(g, std::move(nodes), bound, Algorithm::critical, seed);
        r.fallback = fallback;
        r.elapsed = std::chrono::steady_clock::now() - start;
        return r;
    };

    if (t == 1) return finish(NodeSet({ct.densest_node()}), false);
    for (std::uint32_t k = bound; k > 1; --k) {
        for (const auto& component : get_kcore_td(g, ct, k, t)) {
            if (component.size() == t) return finish(component, false);
            if (auto found = shrink_until_critical(g, component, k, t, rng)) return finish(std::move(*found), false);
        }
    }
    return finish(bfs_connected_subset(g, ct.densest_node(), t), true);
}

SearchResult critical_search(const Graph& g, std::size_t t, std::uint64_t seed) {
    const auto start = std::chrono::steady_clock::now();
    SearchResult r = critical_search(g, core_decompose(g), t, seed);
    r.elapsed = std::chrono::steady_clock::now() - start;
    return r;
}

SearchResult s_greedy_search(const Graph& g, const CorenessTable& ct, std::size_t t, std::uint64_t seed) {
    require_searchable(g, t);
    const auto start = std::chrono::steady_clock::now();
    Rng rng(seed);
    const std::uint32_t bound = upper_bound_k(ct, t);

    std::vector<NodeId> top;
    for (NodeId v = 0; v < g.node_count(); ++v)
        if (ct.coreness(v) == ct.degeneracy()) top.push_back(v);
    std::uniform_int_distribution<std::size_t> pick_seed(0, top.size() - 1);

    std::vector<NodeId> members{top[pick_seed(rng)]};
    std::vector<std::uint8_t> in(g.node_count(), 0);
    std::vector<std::uint32_t> links(g.node_count(), 0);
    std::vector<std::uint64_t> tie_key(g.node_count(), 0);
    using Entry = std::tuple<std::uint32_t, std::uint32_t, std::uint64_t, NodeId>;
    std::priority_queue<Entry> frontier;

    auto admit = [&](NodeId v) {
        in[v] = 1;
        for (NodeId u : g.neighbors(v)) {
            if (in[u]) continue;
            if (links[u]++ == 0) tie_key[u] = rng();
            frontier.emplace(links[u], ct.coreness(u), tie_key[u], u);
        }
    };
    admit(members.front());
    while (members.size() < t) {
        auto [count, coreness, key, v] = frontier.top();
        frontier.pop();
        if (in[v] || count != links[v]) continue;
        members.push_back(v);
        admit(v);
    }

    SearchResult r = make_result(g, NodeSet(std::move(members)), bound, Algorithm::s_greedy, seed);
    r.reconstruction = true;
    r.elapsed = std::chrono::steady_clock::now() - start;
    return r;
}

SearchResult s_greedy_search(const Graph& g, std::size_t t, std::uint64_t seed) {
    const auto start = std::chrono::steady_clock::now();
    SearchResult r = s_greedy_search(g, core_decompose(g), t, seed);
    r.elapsed = std::chrono::steady_clock::now() - start;
    return r;
}

}  // namespace spcs
