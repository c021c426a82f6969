#include "spcs/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <exception>
#include <iomanip>
#include <numeric>
#include <ostream>

#include "spcs/baselines.hpp"
#include "spcs/core_decomp.hpp"
#include "spcs/errors.hpp"

namespace spcs {

void ExperimentConfig::validate() const {
    if (repetitions < 1) throw ConfigError("repetitions must be at least 1");
    if (threads < 1) throw ConfigError("threads must be at least 1");
    if (const double* f = std::get_if<double>(&t_spec); f && !(*f > 0.0 && *f <= 1.0))
        throw ConfigError("fractional t must lie in (0, 1]");
    if (const std::size_t* t = std::get_if<std::size_t>(&t_spec); t && *t == 0)
        throw ConfigError("t must be at least 1");
    strategy_params.validate();
}

std::size_t resolve_t(const TSpec& spec, std::size_t n) {
    if (const double* f = std::get_if<double>(&spec)) {
        if (!(*f > 0.0 && *f <= 1.0)) throw ConfigError("fractional t must lie in (0, 1]");
        const auto t = static_cast<std::size_t>(std::floor(*f * static_cast<double>(n) + 0.5));
        return std::clamp<std::size_t>(t, 1, n);
    }
    const std::size_t t = std::get<std::size_t>(spec);
    if (t == 0 || t > n)
        throw SizeError("t=" + std::to_string(t) + " outside [1, " + std::to_string(n) + "]");
    return t;
}

namespace {

double to_ms(std::chrono::nanoseconds d) { return std::chrono::duration<double, std::milli>(d).count(); }

template <class F>
double mean_of(const std::vector<SearchResult>& runs, F field) {
    if (runs.empty()) return 0;
    double sum = 0;
    for (const auto& r : runs) sum += static_cast<double>(field(r));
    return sum / static_cast<double>(runs.size());
}

SearchResult run_once(const ExperimentConfig& config, const Graph& g, const CorenessTable& ct, std::size_t t,
                      std::uint64_t seed) {
    switch (config.algorithm) {
        case Algorithm::top_down:
        case Algorithm::bottom_up: {
            StrategyParams params = config.strategy_params;
            params.strategy = config.algorithm == Algorithm::top_down ? Strategy::top_down : Strategy::bottom_up;
            return tsize_kcore(g, ct, t, params, seed);
        }
        case Algorithm::critical: return critical_search(g, ct, t, seed);
        case Algorithm::s_greedy: return s_greedy_search(g, ct, t, seed);
        case Algorithm::oracle: {
            const auto start = std::chrono::steady_clock::now();
            OracleResult exact = exact_spcs(g, t, config.oracle_budget);
            SearchResult r = make_result(g, std::move(exact.witness), upper_bound_k(ct, t), Algorithm::oracle, seed);
            r.elapsed = std::chrono::steady_clock::now() - start;
            return r;
        }
    }
    throw ConfigError("unknown algorithm");
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string quoted = "\"";
    for (char c : s) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    return quoted + '"';
}

}  // namespace

double ExperimentReport::mean_core_number() const {
    return mean_of(runs, [](const SearchResult& r) { return r.core_number; });
}
double ExperimentReport::mean_upper_bound() const {
    return mean_of(runs, [](const SearchResult& r) { return r.upper_bound; });
}
double ExperimentReport::mean_elapsed_ms() const {
    return mean_of(runs, [](const SearchResult& r) { return to_ms(r.elapsed); });
}
double ExperimentReport::optimal_fraction() const {
    return mean_of(runs, [](const SearchResult& r) { return r.optimal ? 1 : 0; });
}

ExperimentReport run_experiment(const ExperimentConfig& config) {
    config.validate();
    Graph g = load_edge_list(config.input_path, config.lcc);
    return run_experiment(config, std::move(g), config.input_path.stem().string());
}

ExperimentReport run_experiment(const ExperimentConfig& config, Graph g, std::string dataset) {
    config.validate();
    ExperimentReport report;
    report.dataset = std::move(dataset);
    report.algorithm = config.algorithm;
    report.t = resolve_t(config.t_spec, g.node_count());
    require_searchable(g, report.t);
    if (config.algorithm == Algorithm::oracle && binomial(g.node_count(), report.t) > config.oracle_budget)
        throw BudgetError("C(" + std::to_string(g.node_count()) + ", " + std::to_string(report.t) +
                          ") subsets exceed the oracle budget of " + std::to_string(config.oracle_budget));

    const auto decomp_start = std::chrono::steady_clock::now();
    const CorenessTable ct = core_decompose_parallel(g);
    report.decomp_ms = to_ms(std::chrono::steady_clock::now() - decomp_start);

    const auto reps = static_cast<std::int64_t>(config.repetitions);
    report.runs.resize(config.repetitions);
    std::exception_ptr failure;
    #pragma omp parallel for schedule(dynamic, 1) num_threads(config.threads)
    for (std::int64_t rep = 0; rep < reps; ++rep) {
        try {
            report.runs[static_cast<std::size_t>(rep)] =
                run_once(config, g, ct, report.t, config.base_seed + static_cast<std::uint64_t>(rep));
        } catch (...) {
            #pragma omp critical
            if (!failure) failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);
    report.graph = std::move(g);
    return report;
}

std::string algorithm_label(Algorithm a) {
    if (a == Algorithm::s_greedy) return "sgreedy_reconstruction";
    return std::string(to_string(a));
}

void write_csv(const ExperimentReport& report, std::ostream& out) {
    const std::string prefix = csv_field(report.dataset) + ',' + algorithm_label(report.algorithm) + ',' +
                               std::to_string(report.graph.node_count()) + ',' +
                               std::to_string(report.graph.edge_count()) + ',' + std::to_string(report.t) + ',';
    out << "dataset,algorithm,n,m,t,rep,seed,core_number,upper_bound,optimal,elapsed_ms,decomp_ms\n";
    out << std::fixed;
    for (std::size_t rep = 0; rep < report.runs.size(); ++rep) {
        const auto& r = report.runs[rep];
        out << prefix << rep << ',' << r.seed << ',' << r.core_number << ',' << r.upper_bound << ','
            << (r.optimal ? 1 : 0) << ',' << std::setprecision(3) << to_ms(r.elapsed) << ',' << report.decomp_ms
            << '\n';
    }
    out << prefix << "summary,," << std::setprecision(6) << report.mean_core_number() << ','
        << report.mean_upper_bound() << ',' << report.optimal_fraction() << ',' << report.mean_elapsed_ms() << ','
        << std::setprecision(3) << report.decomp_ms << '\n';
    out << std::defaultfloat;
}

void write_node_sets(const ExperimentReport& report, std::ostream& out) {
    for (std::size_t rep = 0; rep < report.runs.size(); ++rep) {
        out << rep << '\t';
        bool first = true;
        for (NodeId v : report.runs[rep].nodes) {
            out << (first ? "" : " ") << report.graph.label(v);
            first = false;
        }
        out << '\n';
    }
}

}  // namespace spcs
