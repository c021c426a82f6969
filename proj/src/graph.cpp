#include "spcs/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <unordered_map>

#include "spcs/errors.hpp"

namespace spcs {

NodeSet::NodeSet(std::vector<NodeId> members) : members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    if (std::adjacent_find(members_.begin(), members_.end()) != members_.end())
        throw ContractError("node set contains a duplicate id");
}

NodeSet NodeSet::from_sorted(std::vector<NodeId> members) {
    NodeSet s;
    s.members_ = std::move(members);
    return s;
}

bool NodeSet::contains(NodeId v) const {
    return std::binary_search(members_.begin(), members_.end(), v);
}

Graph Graph::from_edges(NodeId n, std::span<const Edge> edges, std::vector<std::string> labels) {
    if (labels.empty()) {
        labels.reserve(n);
        for (NodeId v = 0; v < n; ++v) labels.push_back(std::to_string(v));
    }
    if (labels.size() != n) throw ContractError("label table size differs from node count");

    Graph g;
    g.labels_ = std::move(labels);
    std::vector<std::size_t> degree(n, 0);
    for (auto [u, v] : edges) {
        if (u >= n || v >= n) throw ContractError("edge endpoint out of range");
        if (u == v) continue;
        ++degree[u];
        ++degree[v];
    }
    g.offsets_.assign(n + 1, 0);
    for (NodeId v = 0; v < n; ++v) g.offsets_[v + 1] = g.offsets_[v] + degree[v];
    std::vector<NodeId> raw(g.offsets_[n]);
    std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
    for (auto [u, v] : edges) {
        if (u == v) continue;
        raw[cursor[u]++] = v;
        raw[cursor[v]++] = u;
    }

    // Sort and dedup each list, then compact.
    std::vector<std::size_t> offsets(n + 1, 0);
    std::size_t write = 0;
    for (NodeId v = 0; v < n; ++v) {
        auto first = raw.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v]);
        auto last = raw.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v + 1]);
        std::sort(first, last);
        last = std::unique(first, last);
        for (auto it = first; it != last; ++it) raw[write++] = *it;
        offsets[v + 1] = write;
    }
    raw.resize(write);
    raw.shrink_to_fit();
    g.adjacency_ = std::move(raw);
    g.offsets_ = std::move(offsets);
    return g;
}

std::size_t Graph::max_degree() const {
    std::size_t best = 0;
    for (NodeId v = 0; v < node_count(); ++v) best = std::max(best, degree(v));
    return best;
}

bool Graph::has_edge(NodeId u, NodeId v) const {
    auto nbrs = neighbors(u);
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::optional<NodeId> Graph::find_label(std::string_view label) const {
    for (NodeId v = 0; v < node_count(); ++v)
        if (labels_[v] == label) return v;
    return std::nullopt;
}

NodeSet Graph::nodes_by_label(std::initializer_list<std::string_view> labels) const {
    std::vector<NodeId> ids;
    for (auto label : labels) {
        auto id = find_label(label);
        if (!id) throw ContractError("unknown node label '" + std::string(label) + "'");
        ids.push_back(*id);
    }
    return NodeSet(std::move(ids));
}

Graph Graph::induced(const NodeSet& keep) const {
    constexpr NodeId absent = std::numeric_limits<NodeId>::max();
    std::vector<NodeId> remap(node_count(), absent);
    std::vector<std::string> labels;
    labels.reserve(keep.size());
    NodeId next = 0;
    for (NodeId v : keep) {
        remap[v] = next++;
        labels.push_back(labels_[v]);
    }
    std::vector<Edge> edges;
    for (NodeId v : keep)
        for (NodeId u : neighbors(v))
            if (v < u && remap[u] != absent) edges.emplace_back(remap[v], remap[u]);
    return from_edges(next, edges, std::move(labels));
}

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f'; }

std::vector<std::string_view> split_tokens(std::string_view line) {
    std::vector<std::string_view> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && is_space(line[i])) ++i;
        std::size_t start = i;
        while (i < line.size() && !is_space(line[i])) ++i;
        if (i > start) tokens.push_back(line.substr(start, i - start));
    }
    return tokens;
}

}  // namespace

Graph parse_edge_list(std::istream& in, bool restrict_to_lcc) {
    std::unordered_map<std::string, NodeId> ids;
    std::vector<std::string> labels;
    std::vector<Edge> edges;
    auto intern = [&](std::string_view token) {
        auto [it, inserted] = ids.try_emplace(std::string(token), static_cast<NodeId>(labels.size()));
        if (inserted) labels.emplace_back(token);
        return it->second;
    };

    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto tokens = split_tokens(line);
        if (tokens.empty()) continue;
        if (tokens[0].front() == '#' || tokens[0].front() == '%') continue;
        if (tokens.size() != 2)
            throw ParseError(line_no, "expected 2 tokens, found " + std::to_string(tokens.size()));
        NodeId u = intern(tokens[0]);
        NodeId v = intern(tokens[1]);
        // Self-loops still register their endpoint so it can appear as an
        // isolated node when the LCC restriction is off.
        edges.emplace_back(u, v);
    }
    if (in.bad()) throw IoError("read failure while parsing edge list");

    const auto n = static_cast<NodeId>(labels.size());
    Graph g = Graph::from_edges(n, edges, std::move(labels));
    if (restrict_to_lcc && g.node_count() > 0) g = largest_component(g);
    if (g.edge_count() == 0) throw EmptyGraphError();
    return g;
}

Graph load_edge_list(const std::filesystem::path& path, bool restrict_to_lcc) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open '" + path.string() + "'");
    return parse_edge_list(in, restrict_to_lcc);
}

void write_edge_list(const Graph& g, std::ostream& out) {
    for (NodeId v = 0; v < g.node_count(); ++v)
        for (NodeId u : g.neighbors(v))
            if (v < u) out << g.label(v) << ' ' << g.label(u) << '\n';
}

std::size_t induced_min_degree(const Graph& g, const NodeSet& s) {
    if (s.empty()) throw ContractError("induced_min_degree of an empty set");
    std::vector<std::uint8_t> in(g.node_count(), 0);
    for (NodeId v : s) {
        if (v >= g.node_count()) throw ContractError("node id out of range");
        in[v] = 1;
    }
    std::size_t best = std::numeric_limits<std::size_t>::max();
    for (NodeId v : s) {
        std::size_t d = 0;
        for (NodeId u : g.neighbors(v)) d += in[u];
        best = std::min(best, d);
    }
    return best;
}

NodeSet bfs_connected_subset(const Graph& g, NodeId seed, std::size_t t) {
    if (t == 0 || t > g.node_count())
        throw SizeError("t=" + std::to_string(t) + " outside [1, " + std::to_string(g.node_count()) + "]");
    if (seed >= g.node_count()) throw ContractError("seed node out of range");
    std::vector<std::uint8_t> seen(g.node_count(), 0);
    std::vector<NodeId> order{seed};
    order.reserve(t);
    seen[seed] = 1;
    for (std::size_t head = 0; head < order.size() && order.size() < t; ++head) {
        for (NodeId u : g.neighbors(order[head])) {
            if (seen[u]) continue;
            seen[u] = 1;
            order.push_back(u);
            if (order.size() == t) break;
        }
    }
    if (order.size() < t) throw ContractError("seed component has fewer than t nodes");
    return NodeSet(std::move(order));
}

std::vector<NodeSet> connected_components(const Graph& g, std::span<const std::uint8_t> mask) {
    std::vector<std::uint8_t> seen(g.node_count(), 0);
    std::vector<NodeSet> components;
    std::vector<NodeId> queue;
    for (NodeId root = 0; root < g.node_count(); ++root) {
        if (!mask[root] || seen[root]) continue;
        queue.assign(1, root);
        seen[root] = 1;
        for (std::size_t head = 0; head < queue.size(); ++head)
            for (NodeId u : g.neighbors(queue[head]))
                if (mask[u] && !seen[u]) {
                    seen[u] = 1;
                    queue.push_back(u);
                }
        components.emplace_back(queue);
    }
    return components;
}

std::vector<NodeSet> connected_components(const Graph& g) {
    std::vector<std::uint8_t> all(g.node_count(), 1);
    return connected_components(g, all);
}

bool is_connected(const Graph& g) {
    return g.node_count() > 0 && connected_components(g).size() == 1;
}

Graph largest_component(const Graph& g) {
    auto components = connected_components(g);
    if (components.empty()) return g;
    auto largest = std::max_element(components.begin(), components.end(),
                                    [](const NodeSet& a, const NodeSet& b) { return a.size() < b.size(); });
    if (largest->size() == g.node_count()) return g;
    return g.induced(*largest);
}

}  // namespace spcs
