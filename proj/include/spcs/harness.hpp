#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include "spcs/engine.hpp"
#include "spcs/graph.hpp"
#include "spcs/oracle.hpp"

namespace spcs {

/// Target size: an absolute node count or a fraction of n in (0, 1].
using TSpec = std::variant<std::size_t, double>;

struct ExperimentConfig {
    std::filesystem::path input_path;
    Algorithm algorithm = Algorithm::top_down;
    TSpec t_spec = std::size_t{1};
    unsigned repetitions = 200;
    std::uint64_t base_seed = 0;
    bool lcc = true;
    std::filesystem::path output_path;
    StrategyParams strategy_params;
    // Repetitions run concurrently on this many OpenMP threads.
    int threads = 1;
    std::uint64_t oracle_budget = default_oracle_budget;

    void validate() const;
};

/// Fractions round half up; the result is clamped to [1, n]. Throws
/// ConfigError for a fraction outside (0, 1] and SizeError for an absolute t
/// outside [1, n].
std::size_t resolve_t(const TSpec& spec, std::size_t n);

struct ExperimentReport {
    std::string dataset;
    Algorithm algorithm = Algorithm::top_down;
    Graph graph;
    std::size_t t = 0;
    double decomp_ms = 0;
    std::vector<SearchResult> runs;

    double mean_core_number() const;
    double mean_upper_bound() const;
    double mean_elapsed_ms() const;
    double optimal_fraction() const;
};

/// Loads the graph, decomposes it once, then runs `repetitions` searches
/// with seeds base_seed, base_seed + 1, ...
ExperimentReport run_experiment(const ExperimentConfig& config);

/// Same protocol on an already loaded graph.
ExperimentReport run_experiment(const ExperimentConfig& config, Graph g, std::string dataset);

/// Column order: dataset,algorithm,n,m,t,rep,seed,core_number,upper_bound,
/// optimal,elapsed_ms,decomp_ms. One row per repetition, then a summary row
/// with rep = "summary" holding means and the fraction of optimal runs.
void write_csv(const ExperimentReport& report, std::ostream& out);

/// One line per repetition: rep, a tab, then the member labels.
void write_node_sets(const ExperimentReport& report, std::ostream& out);

/// CSV label for an algorithm; the greedy baseline is marked as a reconstruction.
std::string algorithm_label(Algorithm a);

}  // namespace spcs
