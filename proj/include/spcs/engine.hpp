#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string_view>
#include <vector>

#include "spcs/core_decomp.hpp"
#include "spcs/graph.hpp"

namespace spcs {

using Rng = std::mt19937_64;

enum class Algorithm { top_down, bottom_up, critical, s_greedy, oracle };

enum class Strategy { top_down, bottom_up };
enum class CandidateOrder { largest_first, random };
enum class GrowthRule { max_in_neighbors, random_eligible };
enum class RemovalOrder { random, lowest_degree_first };

std::string_view to_string(Algorithm a);

struct StrategyParams {
    Strategy strategy = Strategy::top_down;
    CandidateOrder bu_candidate_order = CandidateOrder::largest_first;
    GrowthRule bu_growth_rule = GrowthRule::max_in_neighbors;
    RemovalOrder td_removal_order = RemovalOrder::random;
    // GetKcore-BU plus refinement is re-run this many times before k drops.
    unsigned max_restarts_per_k = 1;
    BoundMode bound_mode = BoundMode::total;

    /// Throws ConfigError on an out-of-range field.
    void validate() const;
};

struct SearchResult {
    NodeSet nodes;
    std::uint32_t core_number = 0;
    std::uint32_t upper_bound = 0;
    bool optimal = false;
    Algorithm algorithm = Algorithm::top_down;
    std::chrono::nanoseconds elapsed{0};
    std::uint64_t seed = 0;
    // The BFS fallback produced the answer.
    bool fallback = false;
    // Produced by a reconstructed baseline rather than a published procedure.
    bool reconstruction = false;
};

/// Throws ContractError unless h is non-empty and induces a k-core.
void require_k_core(const Graph& g, const NodeSet& h, std::uint32_t k);

/// Fills core_number by recomputing the induced minimum degree of `nodes`.
SearchResult make_result(const Graph& g, NodeSet nodes, std::uint32_t upper_bound, Algorithm algorithm,
                         std::uint64_t seed);

/// Checks 1 <= t <= n (SizeError) and that g is connected (ContractError).
void require_searchable(const Graph& g, std::size_t t);

/// Bound used to seed the k loop, per params.bound_mode.
std::uint32_t search_upper_bound(const Graph& g, const CorenessTable& ct, std::size_t t, BoundMode mode);

/// Size-prescribed k-core search. Tries k from the upper bound down to 2
/// using the configured strategy, falling back to a BFS-connected set.
/// The overload without a coreness table decomposes g first and includes
/// that in `elapsed`.
SearchResult tsize_kcore(const Graph& g, std::size_t t, const StrategyParams& params, std::uint64_t seed);
SearchResult tsize_kcore(const Graph& g, const CorenessTable& ct, std::size_t t, const StrategyParams& params,
                         std::uint64_t seed);

/// Maximal k-core components with at least t nodes, largest first.
std::vector<NodeSet> get_kcore_td(const Graph& g, const CorenessTable& ct, std::uint32_t k, std::size_t t);

/// Shrinks the k-core h towards t nodes by removing one node at a time and
/// keeping the largest surviving k-core component. std::nullopt when a full
/// pass over h makes no progress.
std::optional<NodeSet> size_refinement_td(const Graph& g, const NodeSet& h, std::uint32_t k, std::size_t t,
                                          RemovalOrder order, Rng& rng);

/// Components of size <= t are kept whole; larger ones are cut to t random
/// nodes and replaced by the k-core components of what is left.
std::vector<NodeSet> get_kcore_bu(const Graph& g, const CorenessTable& ct, std::uint32_t k, std::size_t t, Rng& rng);

/// Grows the k-core h by adding outside nodes with >= k neighbours in h
/// until it has t nodes. std::nullopt when no node qualifies first.
std::optional<NodeSet> size_refinement_bu(const Graph& g, const NodeSet& h, std::uint32_t k, std::size_t t,
                                          GrowthRule rule, Rng& rng);

}  // namespace spcs
