#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace spcs {

using NodeId = std::uint32_t;
using Edge = std::pair<NodeId, NodeId>;

/// A set of internal node ids, kept sorted and duplicate-free.
class NodeSet {
public:
    NodeSet() = default;

    /// Sorts `members`; throws ContractError if an id appears twice.
    explicit NodeSet(std::vector<NodeId> members);

    /// Caller guarantees `members` is strictly increasing.
    static NodeSet from_sorted(std::vector<NodeId> members);

    std::span<const NodeId> members() const { return members_; }
    std::size_t size() const { return members_.size(); }
    bool empty() const { return members_.empty(); }
    bool contains(NodeId v) const;

    auto begin() const { return members_.begin(); }
    auto end() const { return members_.end(); }

    friend bool operator==(const NodeSet&, const NodeSet&) = default;

private:
    std::vector<NodeId> members_;
};

/// Immutable undirected simple graph in compressed adjacency form.
///
/// Internal ids are dense in [0, n). Each node keeps the external label it had
/// in the source file so results can be reported in the caller's id space.
class Graph {
public:
    Graph() = default;

    /// Builds a graph on nodes [0, n). Self-loops are dropped and duplicate or
    /// reversed edges merged. `labels` defaults to the decimal internal ids.
    static Graph from_edges(NodeId n, std::span<const Edge> edges,
                            std::vector<std::string> labels = {});

    NodeId node_count() const { return static_cast<NodeId>(labels_.size()); }
    std::size_t edge_count() const { return adjacency_.size() / 2; }

    std::span<const NodeId> neighbors(NodeId v) const {
        return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
    }
    std::size_t degree(NodeId v) const { return offsets_[v + 1] - offsets_[v]; }
    std::size_t max_degree() const;
    bool has_edge(NodeId u, NodeId v) const;

    const std::string& label(NodeId v) const { return labels_[v]; }
    /// Linear scan; meant for tests and small lookups.
    std::optional<NodeId> find_label(std::string_view label) const;
    /// Looks up every label, throwing ContractError on an unknown one.
    NodeSet nodes_by_label(std::initializer_list<std::string_view> labels) const;

    /// Subgraph induced by `keep`, relabelled densely in increasing id order.
    Graph induced(const NodeSet& keep) const;

private:
    std::vector<std::size_t> offsets_{0};
    std::vector<NodeId> adjacency_;
    std::vector<std::string> labels_;
};

/// Parses a SNAP/KONECT style edge list. Lines starting with '#' or '%' and
/// blank lines are skipped; every other line must hold exactly two tokens.
Graph parse_edge_list(std::istream& in, bool restrict_to_lcc = true);
Graph load_edge_list(const std::filesystem::path& path, bool restrict_to_lcc = true);

/// Writes one "label label" line per edge.
void write_edge_list(const Graph& g, std::ostream& out);

/// Core number of G[s]: the minimum number of neighbours a member has inside s.
std::size_t induced_min_degree(const Graph& g, const NodeSet& s);

/// The first t nodes in BFS order from `seed`, neighbours visited in id order.
NodeSet bfs_connected_subset(const Graph& g, NodeId seed, std::size_t t);

/// Connected components of the subgraph induced by nodes with mask[v] != 0,
/// ordered by their smallest member.
std::vector<NodeSet> connected_components(const Graph& g, std::span<const std::uint8_t> mask);
std::vector<NodeSet> connected_components(const Graph& g);

bool is_connected(const Graph& g);

/// The largest connected component (ties go to the one with the smallest id).
Graph largest_component(const Graph& g);

}  // namespace spcs
