// spcs: run size-prescribed k-core search experiments over an edge list and
// emit one CSV row per repetition plus a summary row.

#include <fstream>
#include <iostream>
#include <map>
#include <optional>

#include "CLI11.hpp"
#include "spcs/errors.hpp"
#include "spcs/harness.hpp"

namespace {

enum ExitCode : int {
    ok = 0,
    parse_failure = 2,
    config_failure = 3,
    budget_failure = 4,
    io_failure = 5,
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Size-prescribed k-core search benchmark harness"};

    spcs::ExperimentConfig config;
    std::string input;
    std::string out_path;
    std::string nodes_out;
    std::optional<std::size_t> t_abs;
    std::optional<double> t_frac;
    bool no_lcc = false;

    const std::map<std::string, spcs::Algorithm> algorithms{{"td", spcs::Algorithm::top_down},
                                                            {"bu", spcs::Algorithm::bottom_up},
                                                            {"critical", spcs::Algorithm::critical},
                                                            {"sgreedy", spcs::Algorithm::s_greedy},
                                                            {"oracle", spcs::Algorithm::oracle}};
    const std::map<std::string, spcs::GrowthRule> growth{{"max", spcs::GrowthRule::max_in_neighbors},
                                                         {"random", spcs::GrowthRule::random_eligible}};
    const std::map<std::string, spcs::RemovalOrder> removal{{"random", spcs::RemovalOrder::random},
                                                            {"lowdeg", spcs::RemovalOrder::lowest_degree_first}};
    const std::map<std::string, spcs::CandidateOrder> candidates{{"largest", spcs::CandidateOrder::largest_first},
                                                                 {"random", spcs::CandidateOrder::random}};
    const std::map<std::string, spcs::BoundMode> bounds{{"total", spcs::BoundMode::total},
                                                        {"component", spcs::BoundMode::per_component}};

    app.add_option("--input", input, "Edge-list file (SNAP/KONECT format)")->required();
    std::string algo, bu_growth = "max", td_order = "random", bu_order = "largest", bound = "total";
    app.add_option("--algo", algo, "Algorithm")->required()->check(CLI::IsMember(algorithms));
    auto* t_opt = app.add_option("--t", t_abs, "Target size as a node count");
    auto* frac_opt = app.add_option("--t-frac", t_frac, "Target size as a fraction of n, in (0, 1]");
    t_opt->excludes(frac_opt);
    app.add_option("--reps", config.repetitions, "Repetitions")->capture_default_str();
    app.add_option("--seed", config.base_seed, "Seed of the first repetition")->capture_default_str();
    app.add_flag("--no-lcc", no_lcc, "Keep the whole graph instead of its largest component");
    app.add_option("--out", out_path, "CSV output path (default: stdout)");
    app.add_option("--restarts", config.strategy_params.max_restarts_per_k, "Bottom-up attempts per k")
        ->capture_default_str();
    app.add_option("--bu-growth", bu_growth, "Bottom-up growth rule")->check(CLI::IsMember(growth))->capture_default_str();
    app.add_option("--td-order", td_order, "Top-down removal order")->check(CLI::IsMember(removal))->capture_default_str();
    app.add_option("--bu-order", bu_order, "Bottom-up candidate order")
        ->check(CLI::IsMember(candidates))
        ->capture_default_str();
    app.add_option("--bound", bound, "Upper bound used to start the k loop")
        ->check(CLI::IsMember(bounds))
        ->capture_default_str();
    app.add_option("--threads", config.threads, "Run repetitions on this many threads")->capture_default_str();
    app.add_option("--budget", config.oracle_budget, "Oracle subset budget")->capture_default_str();
    app.add_option("--nodes-out", nodes_out, "Write each repetition's node labels here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? ok : config_failure;
    }

    if (!t_abs && !t_frac) {
        std::cerr << "error: one of --t or --t-frac is required\n";
        return config_failure;
    }
    config.algorithm = algorithms.at(algo);
    config.strategy_params.bu_growth_rule = growth.at(bu_growth);
    config.strategy_params.td_removal_order = removal.at(td_order);
    config.strategy_params.bu_candidate_order = candidates.at(bu_order);
    config.strategy_params.bound_mode = bounds.at(bound);
    config.input_path = input;
    config.output_path = out_path;
    config.lcc = !no_lcc;
    if (t_abs)
        config.t_spec = *t_abs;
    else
        config.t_spec = *t_frac;

    try {
        const spcs::ExperimentReport report = spcs::run_experiment(config);
        if (out_path.empty()) {
            spcs::write_csv(report, std::cout);
        } else {
            std::ofstream out(out_path);
            if (!out) throw spcs::IoError("cannot write '" + out_path + "'");
            spcs::write_csv(report, out);
        }
        if (!nodes_out.empty()) {
            std::ofstream out(nodes_out);
            if (!out) throw spcs::IoError("cannot write '" + nodes_out + "'");
            spcs::write_node_sets(report, out);
        }
        if (config.algorithm == spcs::Algorithm::s_greedy)
            std::cerr << "note: sgreedy is a reconstructed baseline adapted to a fixed target size\n";
    } catch (const spcs::ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return parse_failure;
    } catch (const spcs::EmptyGraphError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return parse_failure;
    } catch (const spcs::BudgetError& e) {
        std::cerr << "budget error: " << e.what() << '\n';
        return budget_failure;
    } catch (const spcs::IoError& e) {
        std::cerr << "io error: " << e.what() << '\n';
        return io_failure;
    } catch (const spcs::Error& e) {
        // ConfigError, SizeError, ContractError
        std::cerr << "config error: " << e.what() << '\n';
        return config_failure;
    }
    return ok;
}
