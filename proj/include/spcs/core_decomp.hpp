#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "spcs/graph.hpp"

namespace spcs {

/// Per-node core numbers from one peeling pass over a graph.
class CorenessTable {
public:
    CorenessTable() = default;
    explicit CorenessTable(std::vector<std::uint32_t> coreness);

    std::uint32_t coreness(NodeId v) const { return coreness_[v]; }
    std::span<const std::uint32_t> values() const { return coreness_; }
    std::size_t node_count() const { return coreness_.size(); }
    std::uint32_t degeneracy() const { return degeneracy_; }
    /// Lowest id among the nodes of maximum coreness.
    NodeId densest_node() const;

    /// Number of nodes with coreness >= k; zero once k exceeds the degeneracy.
    std::size_t size_at_or_above(std::uint32_t k) const {
        return k < at_or_above_.size() ? at_or_above_[k] : 0;
    }

    /// mask[v] == 1 iff coreness(v) >= k.
    std::vector<std::uint8_t> mask_at_or_above(std::uint32_t k) const;

    friend bool operator==(const CorenessTable& a, const CorenessTable& b) {
        return a.coreness_ == b.coreness_;
    }

private:
    std::vector<std::uint32_t> coreness_;
    std::vector<std::size_t> at_or_above_;
    std::uint32_t degeneracy_ = 0;
};

/// Bucket-queue peeling in O(n + m). Serial reference implementation.
CorenessTable core_decompose(const Graph& g);

/// Level-synchronous parallel peeling (OpenMP). Produces the same table as
/// core_decompose; peel order within a level is unspecified.
CorenessTable core_decompose_parallel(const Graph& g);

/// Connected components of the k-core of g, ordered by smallest member.
/// Empty when k exceeds the degeneracy.
std::vector<NodeSet> maximal_k_cores(const Graph& g, const CorenessTable& ct, std::uint32_t k);

/// Connected components of the k-core of the subgraph induced by `within`.
std::vector<NodeSet> maximal_k_cores_within(const Graph& g, const NodeSet& within, std::uint32_t k);

enum class BoundMode { total, per_component };

/// Largest k such that at least t nodes have coreness >= k. Any t-node
/// subgraph with minimum degree k sits inside the k-core, so no size-t
/// subgraph beats this value.
std::uint32_t upper_bound_k(const CorenessTable& ct, std::size_t t);

/// Largest k whose k-core has a single connected component of size >= t.
/// Tighter in practice but not a sound bound when solutions may straddle
/// components.
std::uint32_t upper_bound_k_per_component(const Graph& g, const CorenessTable& ct, std::size_t t);

}  // namespace spcs
