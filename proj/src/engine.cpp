#include "spcs/engine.hpp"

#include <algorithm>
#include <queue>
#include <string>
#include <tuple>

#include "spcs/errors.hpp"

namespace spcs {

std::string_view to_string(Algorithm a) {
    switch (a) {
        case Algorithm::top_down: return "td";
        case Algorithm::bottom_up: return "bu";
        case Algorithm::critical: return "critical";
        case Algorithm::s_greedy: return "sgreedy";
        case Algorithm::oracle: return "oracle";
    }
    return "unknown";
}

void StrategyParams::validate() const {
    if (max_restarts_per_k < 1) throw ConfigError("max_restarts_per_k must be at least 1");
}

SearchResult make_result(const Graph& g, NodeSet nodes, std::uint32_t upper_bound, Algorithm algorithm,
                         std::uint64_t seed) {
    SearchResult r;
    r.core_number = static_cast<std::uint32_t>(induced_min_degree(g, nodes));
    r.nodes = std::move(nodes);
    r.upper_bound = upper_bound;
    r.optimal = r.core_number == upper_bound;
    r.algorithm = algorithm;
    r.seed = seed;
    return r;
}

void require_searchable(const Graph& g, std::size_t t) {
    if (t == 0 || t > g.node_count())
        throw SizeError("t=" + std::to_string(t) + " outside [1, " + std::to_string(g.node_count()) + "]");
    if (!is_connected(g)) throw ContractError("graph must be connected; restrict it to its largest component");
}

std::uint32_t search_upper_bound(const Graph& g, const CorenessTable& ct, std::size_t t, BoundMode mode) {
    return mode == BoundMode::total ? upper_bound_k(ct, t) : upper_bound_k_per_component(g, ct, t);
}

void require_k_core(const Graph& g, const NodeSet& h, std::uint32_t k) {
    if (h.empty() || induced_min_degree(g, h) < k) throw ContractError("input set does not induce a k-core");
}

namespace {

void sort_largest_first(std::vector<NodeSet>& sets) {
    std::stable_sort(sets.begin(), sets.end(), [](const NodeSet& a, const NodeSet& b) { return a.size() > b.size(); });
}

void order_candidates(std::vector<NodeSet>& candidates, CandidateOrder order, Rng& rng) {
    if (order == CandidateOrder::random)
        std::shuffle(candidates.begin(), candidates.end(), rng);
    else
        sort_largest_first(candidates);
}

}  // namespace

std::vector<NodeSet> get_kcore_td(const Graph& g, const CorenessTable& ct, std::uint32_t k, std::size_t t) {
    auto cores = maximal_k_cores(g, ct, k);
    std::erase_if(cores, [t](const NodeSet& c) { return c.size() < t; });
    sort_largest_first(cores);
    return cores;
}

std::vector<NodeSet> get_kcore_bu(const Graph& g, const CorenessTable& ct, std::uint32_t k, std::size_t t,
                                  Rng& rng) {
    std::vector<NodeSet> out;
    for (auto& component : maximal_k_cores(g, ct, k)) {
        if (component.size() <= t) {
            out.push_back(std::move(component));
            continue;
        }
        std::vector<NodeId> members(component.begin(), component.end());
        // Partial Fisher-Yates: the first t slots are a uniform t-subset.
        for (std::size_t i = 0; i < t; ++i) {
            std::uniform_int_distribution<std::size_t> pick(i, members.size() - 1);
            std::swap(members[i], members[pick(rng)]);
        }
        members.resize(t);
        for (auto& core : maximal_k_cores_within(g, NodeSet(std::move(members)), k)) out.push_back(std::move(core));
    }
    return out;
}

std::optional<NodeSet> size_refinement_bu(const Graph& g, const NodeSet& h, std::uint32_t k, std::size_t t,
                                          GrowthRule rule, Rng& rng) {
    if (h.size() > t) throw ContractError("bottom-up refinement needs at most t nodes");
    if (k == 0) throw ContractError("bottom-up refinement needs k >= 1");
    require_k_core(g, h, k);

    std::vector<NodeId> members(h.begin(), h.end());
    std::vector<std::uint8_t> in(g.node_count(), 0);
    std::vector<std::uint32_t> inside_count(g.node_count(), 0);
    const bool greedy = rule == GrowthRule::max_in_neighbors;

    // Greedy rule: lazy max-heap of (count, tie-break key, node); entries whose
    // count is stale are skipped on pop. Keys are drawn when a node is first
    // touched, which breaks count ties uniformly at random.
    using Entry = std::tuple<std::uint32_t, std::uint64_t, NodeId>;
    std::priority_queue<Entry> heap;
    std::vector<std::uint64_t> tie_key(greedy ? g.node_count() : 0);
    // Random rule: swap-remove pool of eligible nodes.
    std::vector<NodeId> pool;

    auto touch = [&](NodeId u) {
        const auto c = ++inside_count[u];
        if (greedy) {
            if (c == 1) tie_key[u] = rng();
            if (c >= k) heap.emplace(c, tie_key[u], u);
        } else if (c == k) {
            pool.push_back(u);
        }
    };
    for (NodeId v : members) in[v] = 1;
    for (NodeId v : members)
        for (NodeId u : g.neighbors(v))
            if (!in[u]) touch(u);

    while (members.size() < t) {
        NodeId next;
        if (rule == GrowthRule::max_in_neighbors) {
            for (;;) {
                if (heap.empty()) return std::nullopt;
                auto [count, key, v] = heap.top();
                heap.pop();
                if (!in[v] && count == inside_count[v]) {
                    next = v;
                    break;
                }
            }
        } else {
            if (pool.empty()) return std::nullopt;
            std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
            const std::size_t i = pick(rng);
            next = pool[i];
            pool[i] = pool.back();
            pool.pop_back();
        }
        members.push_back(next);
        in[next] = 1;
        for (NodeId u : g.neighbors(next))
            if (!in[u]) touch(u);
    }
    return NodeSet(std::move(members));
}

SearchResult tsize_kcore(const Graph& g, const CorenessTable& ct, std::size_t t, const StrategyParams& params,
                         std::uint64_t seed) {
    params.validate();
    require_searchable(g, t);
    const auto start = std::chrono::steady_clock::now();
    const Algorithm algorithm =
        params.strategy == Strategy::top_down ? Algorithm::top_down : Algorithm::bottom_up;
    Rng rng(seed);
    const std::uint32_t bound = search_upper_bound(g, ct, t, params.bound_mode);

    auto finish = [&](NodeSet nodes, bool fallback) {
        SearchResult r = make_result(g, std::move(nodes), bound, algorithm, seed);
        r.fallback = fallback;
        r.elapsed = std::chrono::steady_clock::now() - start;
        return r;
    };

    if (t == 1) return finish(NodeSet({ct.densest_node()}), false);

    for (std::uint32_t k = bound; k > 1; --k) {
        if (params.strategy == Strategy::top_down) {
            for (const auto& h : get_kcore_td(g, ct, k, t)) {
                if (h.size() == t) return finish(h, false);
                if (auto refined = size_refinement_td(g, h, k, t, params.td_removal_order, rng))
                    return finish(std::move(*refined), false);
            }
        } else {
            for (unsigned attempt = 0; attempt < params.max_restarts_per_k; ++attempt) {
                auto candidates = get_kcore_bu(g, ct, k, t, rng);
                order_candidates(candidates, params.bu_candidate_order, rng);
                for (const auto& h : candidates) {
                    if (h.size() == t) return finish(h, false);
                    if (auto grown = size_refinement_bu(g, h, k, t, params.bu_growth_rule, rng))
                        return finish(std::move(*grown), false);
                }
            }
        }
    }
    return finish(bfs_connected_subset(g, ct.densest_node(), t), true);
}

SearchResult tsize_kcore(const Graph& g, std::size_t t, const StrategyParams& params, std::uint64_t seed) {
    const auto start = std::chrono::steady_clock::now();
    const CorenessTable ct = core_decompose(g);
    SearchResult r = tsize_kcore(g, ct, t, params, seed);
    r.elapsed = std::chrono::steady_clock::now() - start;
    return r;
}

}  // namespace spcs
