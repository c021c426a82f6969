#include "spcs/core_decomp.hpp"

#include <algorithm>
#include <atomic>
#include <string>

#include "spcs/errors.hpp"

namespace spcs {

CorenessTable::CorenessTable(std::vector<std::uint32_t> coreness) : coreness_(std::move(coreness)) {
    for (auto c : coreness_) degeneracy_ = std::max(degeneracy_, c);
    if (coreness_.empty()) return;
    at_or_above_.assign(degeneracy_ + 2, 0);
    for (auto c : coreness_) ++at_or_above_[c];
    for (std::uint32_t k = degeneracy_; k-- > 0;) at_or_above_[k] += at_or_above_[k + 1];
    at_or_above_.pop_back();
}

NodeId CorenessTable::densest_node() const {
    return static_cast<NodeId>(std::max_element(coreness_.begin(), coreness_.end()) - coreness_.begin());
}

std::vector<std::uint8_t> CorenessTable::mask_at_or_above(std::uint32_t k) const {
    std::vector<std::uint8_t> mask(coreness_.size());
    for (std::size_t v = 0; v < coreness_.size(); ++v) mask[v] = coreness_[v] >= k;
    return mask;
}

CorenessTable core_decompose(const Graph& g) {
    const NodeId n = g.node_count();
    if (n == 0) return CorenessTable{};
    const std::size_t max_deg = g.max_degree();

    // Nodes sorted by current degree; bin_start[d] is the first slot of degree d.
    std::vector<std::uint32_t> degree(n);
    std::vector<std::size_t> bin_start(max_deg + 2, 0);
    for (NodeId v = 0; v < n; ++v) {
        degree[v] = static_cast<std::uint32_t>(g.degree(v));
        ++bin_start[degree[v] + 1];
    }
    for (std::size_t d = 1; d < bin_start.size(); ++d) bin_start[d] += bin_start[d - 1];
    std::vector<NodeId> order(n);
    std::vector<std::size_t> position(n);
    {
        auto next = bin_start;
        for (NodeId v = 0; v < n; ++v) {
            position[v] = next[degree[v]]++;
            order[position[v]] = v;
        }
    }

    for (std::size_t i = 0; i < n; ++i) {
        const NodeId v = order[i];
        for (NodeId u : g.neighbors(v)) {
            if (degree[u] <= degree[v]) continue;
            // Swap u with the first node of its bin, then shrink the bin.
            const std::uint32_t du = degree[u];
            const std::size_t pw = bin_start[du];
            const NodeId w = order[pw];
            if (u != w) {
                std::swap(order[position[u]], order[pw]);
                std::swap(position[u], position[w]);
            }
            ++bin_start[du];
            --degree[u];
        }
    }
    return CorenessTable(std::move(degree));
}

CorenessTable core_decompose_parallel(const Graph& g) {
    const NodeId n = g.node_count();
    if (n == 0) return CorenessTable{};
    std::vector<std::uint32_t> degree(n);
    #pragma omp parallel for schedule(static)
    for (NodeId v = 0; v < n; ++v) degree[v] = static_cast<std::uint32_t>(g.degree(v));

    std::vector<NodeId> frontier;
    std::vector<NodeId> next;
    std::size_t processed = 0;
    for (std::uint32_t level = 0; processed < n; ++level) {
        frontier.clear();
        #pragma omp parallel
        {
            std::vector<NodeId> local;
            #pragma omp for schedule(static) nowait
            for (NodeId v = 0; v < n; ++v)
                if (degree[v] == level) local.push_back(v);
            #pragma omp critical
            frontier.insert(frontier.end(), local.begin(), local.end());
        }

        while (!frontier.empty()) {
            processed += frontier.size();
            next.clear();
            const std::size_t width = frontier.size();
            #pragma omp parallel
            {
                std::vector<NodeId> local;
                #pragma omp for schedule(dynamic, 64) nowait
                for (std::size_t i = 0; i < width; ++i) {
                    for (NodeId u : g.neighbors(frontier[i])) {
                        std::atomic_ref<std::uint32_t> du(degree[u]);
                        if (du.load(std::memory_order_relaxed) <= level) continue;
                        const std::uint32_t before = du.fetch_sub(1, std::memory_order_relaxed);
                        if (before == level + 1) local.push_back(u);
                        // Lost a race with another frontier node: u already sits at level.
                        if (before <= level) du.fetch_add(1, std::memory_order_relaxed);
                    }
                }
                #pragma omp critical
                next.insert(next.end(), local.begin(), local.end());
            }
            frontier.swap(next);
        }
    }
    // Every node ends with degree equal to the level at which it was peeled.
    return CorenessTable(std::move(degree));
}

std::vector<NodeSet> maximal_k_cores(const Graph& g, const CorenessTable& ct, std::uint32_t k) {
    if (ct.node_count() != g.node_count()) throw ContractError("coreness table does not match graph");
    if (k > ct.degeneracy()) return {};
    return connected_components(g, ct.mask_at_or_above(k));
}

std::vector<NodeSet> maximal_k_cores_within(const Graph& g, const NodeSet& within, std::uint32_t k) {
    std::vector<std::uint8_t> in(g.node_count(), 0);
    for (NodeId v : within) in[v] = 1;
    std::vector<std::uint32_t> degree(g.node_count(), 0);
    std::vector<NodeId> doomed;
    for (NodeId v : within)
        for (NodeId u : g.neighbors(v)) degree[v] += in[u];
    for (NodeId v : within)
        if (degree[v] < k) {
            in[v] = 0;
            doomed.push_back(v);
        }
    while (!doomed.empty()) {
        const NodeId v = doomed.back();
        doomed.pop_back();
        for (NodeId u : g.neighbors(v)) {
            if (!in[u]) continue;
            if (--degree[u] < k) {
                in[u] = 0;
                doomed.push_back(u);
            }
        }
    }
    return connected_components(g, in);
}

std::uint32_t upper_bound_k(const CorenessTable& ct, std::size_t t) {
    if (t == 0 || t > ct.node_count())
        throw SizeError("t=" + std::to_string(t) + " outside [1, " + std::to_string(ct.node_count()) + "]");
    std::uint32_t k = ct.degeneracy();
    while (ct.size_at_or_above(k) < t) --k;
    return k;
}

std::uint32_t upper_bound_k_per_component(const Graph& g, const CorenessTable& ct, std::size_t t) {
    for (std::uint32_t k = upper_bound_k(ct, t); k > 0; --k) {
        for (const auto& component : maximal_k_cores(g, ct, k))
            if (component.size() >= t) return k;
    }
    return 0;
}

}  // namespace spcs
