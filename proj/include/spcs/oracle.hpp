#pragma once

#include <cstddef>
#include <cstdint>

#include "spcs/graph.hpp"

namespace spcs {

inline constexpr std::uint64_t default_oracle_budget = 10'000'000;

struct OracleResult {
    std::uint32_t core_number = 0;
    // Lexicographically least t-subset achieving core_number.
    NodeSet witness;
};

/// C(n, t), saturating at UINT64_MAX.
std::uint64_t binomial(std::uint64_t n, std::uint64_t t);

/// Exhaustive SPCS: the best induced minimum degree over all t-subsets.
/// Throws BudgetError when C(n, t) exceeds `budget` and SizeError when t is
/// outside [1, n]. Serial reference implementation.
OracleResult exact_spcs(const Graph& g, std::size_t t, std::uint64_t budget = default_oracle_budget);

/// Same result as exact_spcs; subsets are split by their first member across
/// OpenMP threads and merged by a max-reduction.
OracleResult exact_spcs_parallel(const Graph& g, std::size_t t, std::uint64_t budget = default_oracle_budget);

}  // namespace spcs
