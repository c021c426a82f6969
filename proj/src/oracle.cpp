#include "spcs/oracle.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <string>

#include "spcs/core_decomp.hpp"
#include "spcs/errors.hpp"

namespace spcs {

std::uint64_t binomial(std::uint64_t n, std::uint64_t t) {
    if (t > n) return 0;
    t = std::min(t, n - t);
    unsigned __int128 result = 1;
    for (std::uint64_t i = 1; i <= t; ++i) {
        result = result * (n - t + i) / i;
        if (result > std::numeric_limits<std::uint64_t>::max()) return std::numeric_limits<std::uint64_t>::max();
    }
    return static_cast<std::uint64_t>(result);
}

namespace {

// Scores t-subsets. Graphs with at most 64 nodes use bitmask adjacency.
class SubsetScorer {
public:
    explicit SubsetScorer(const Graph& g) : g_(g), in_(g.node_count(), 0) {
        if (g.node_count() <= 64) {
            masks_.assign(g.node_count(), 0);
            for (NodeId v = 0; v < g.node_count(); ++v)
                for (NodeId u : g.neighbors(v)) masks_[v] |= std::uint64_t{1} << u;
        }
    }

    std::uint32_t score(const std::vector<NodeId>& subset) {
        std::uint32_t best = std::numeric_limits<std::uint32_t>::max();
        if (!masks_.empty()) {
            std::uint64_t set = 0;
            for (NodeId v : subset) set |= std::uint64_t{1} << v;
            for (NodeId v : subset) best = std::min<std::uint32_t>(best, std::popcount(masks_[v] & set));
            return best;
        }
        for (NodeId v : subset) in_[v] = 1;
        for (NodeId v : subset) {
            std::uint32_t d = 0;
            for (NodeId u : g_.neighbors(v)) d += in_[u];
            best = std::min(best, d);
        }
        for (NodeId v : subset) in_[v] = 0;
        return best;
    }

private:
    const Graph& g_;
    std::vector<std::uint64_t> masks_;
    std::vector<std::uint8_t> in_;
};

// Lexicographic successor of a t-combination of [0, n) whose first element
// stays fixed when `fixed_prefix` is 1. Returns false when exhausted.
bool next_combination(std::vector<NodeId>& c, NodeId n, std::size_t fixed_prefix) {
    const std::size_t t = c.size();
    std::size_t i = t;
    while (i > fixed_prefix) {
        --i;
        if (c[i] < n - (t - i)) {
            ++c[i];
            for (std::size_t j = i + 1; j < t; ++j) c[j] = c[j - 1] + 1;
            return true;
        }
    }
    return false;
}

struct Best {
    std::uint32_t core = 0;
    std::vector<NodeId> witness;
};

// Scans combinations from `start` in lexicographic order, stopping early once
// `cap` is reached; no later subset can beat it or precede the witness.
Best scan(SubsetScorer& scorer, std::vector<NodeId> combo, NodeId n, std::size_t fixed_prefix, std::uint32_t cap) {
    Best best;
    bool have = false;
    do {
        const std::uint32_t s = scorer.score(combo);
        if (!have || s > best.core) {
            best.core = s;
            best.witness = combo;
            have = true;
            if (s >= cap) break;
        }
    } while (next_combination(combo, n, fixed_prefix));
    return best;
}

std::uint32_t check_and_cap(const Graph& g, std::size_t t, std::uint64_t budget) {
    const NodeId n = g.node_count();
    if (t == 0 || t > n) throw SizeError("t=" + std::to_string(t) + " outside [1, " + std::to_string(n) + "]");
    const std::uint64_t subsets = binomial(n, t);
    if (subsets > budget)
        throw BudgetError("C(" + std::to_string(n) + ", " + std::to_string(t) + ") subsets exceed the budget of " +
                          std::to_string(budget));
    return std::min<std::uint32_t>(upper_bound_k(core_decompose(g), t), static_cast<std::uint32_t>(t - 1));
}

std::vector<NodeId> first_combination(NodeId first, std::size_t t) {
    std::vector<NodeId> c(t);
    for (std::size_t i = 0; i < t; ++i) c[i] = first + static_cast<NodeId>(i);
    return c;
}

}  // namespace

OracleResult exact_spcs(const Graph& g, std::size_t t, std::uint64_t budget) {
    const std::uint32_t cap = check_and_cap(g, t, budget);
    SubsetScorer scorer(g);
    Best best = scan(scorer, first_combination(0, t), g.node_count(), 0, cap);
    return {best.core, NodeSet::from_sorted(std::move(best.witness))};
}

OracleResult exact_spcs_parallel(const Graph& g, std::size_t t, std::uint64_t budget) {
    const std::uint32_t cap = check_and_cap(g, t, budget);
    const NodeId n = g.node_count();
    const auto prefixes = static_cast<std::int64_t>(n - t + 1);
    std::vector<Best> per_prefix(static_cast<std::size_t>(prefixes));

    #pragma omp parallel
    {
        SubsetScorer scorer(g);
        #pragma omp for schedule(dynamic, 1)
        for (std::int64_t first = 0; first < prefixes; ++first)
            per_prefix[static_cast<std::size_t>(first)] =
                scan(scorer, first_combination(static_cast<NodeId>(first), t), n, 1, cap);
    }

    // Ties keep the smallest first member, which is the lexicographic minimum.
    std::size_t winner = 0;
    for (std::size_t i = 1; i < per_prefix.size(); ++i)
        if (per_prefix[i].core > per_prefix[winner].core) winner = i;
    return {per_prefix[winner].core, NodeSet::from_sorted(std::move(per_prefix[winner].witness))};
}

}  // namespace spcs
