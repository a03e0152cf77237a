// meshroute: scenario generation, single solves, oracle queries and
// benchmark plans for fuzzy-cost mesh routing.
//
// Exit codes: 0 success, 2 usage error, 3 no path / unreachable,
// 4 I/O error, 1 anything else.

#include <cstdint>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "meshroute/bbbc.hpp"
#include "meshroute/bbo.hpp"
#include "meshroute/bench.hpp"
#include "meshroute/errors.hpp"
#include "meshroute/fuzzy_cost.hpp"
#include "meshroute/oracle.hpp"
#include "meshroute/topology.hpp"

namespace {

using namespace meshroute;

constexpr int kExitUsage = 2;
constexpr int kExitDomain = 3;
constexpr int kExitIo = 4;

struct GenArgs {
    int nodes = 25;
    std::string placement = "grid";
    std::uint64_t seed = 0;
    double range = kDefaultRadioRange;
    std::string out;
};

struct SolveArgs {
    std::string algo;
    std::string scenario;
    std::optional<int> source;
    std::optional<int> target;
    int generations = 100;
    int pop = 50;
    std::uint64_t seed = 0;
    std::string trace;
    std::string rules;
    std::string center_mode = "weighted-center";
    double immigration = 1.0;
    double emigration = 1.0;
    double mutation = 0.01;
    int elite = 2;
};

struct OracleArgs {
    std::string scenario;
    std::optional<int> source;
    std::optional<int> target;
    std::string rules;
};

struct BenchArgs {
    std::string plan;
    std::string out;
    bool include_large = false;
    bool serial_timing = false;
    int jobs = 0;
};

std::pair<NodeId, NodeId> endpoints(const NetworkScenario& s, std::optional<int> source,
                                    std::optional<int> target) {
    const NodeId from = source.value_or(0);
    const NodeId to = target.value_or(s.node_count() - 1);
    if (from < 0 || from >= s.node_count() || to < 0 || to >= s.node_count()) {
        throw std::invalid_argument("source/target out of range for " +
                                    std::to_string(s.node_count()) + " nodes");
    }
    if (from == to) throw std::invalid_argument("source and target must differ");
    return {from, to};
}

RuleBase load_rules(const std::string& file) {
    return file.empty() ? RuleBase::standard() : RuleBase::read(file);
}

int cmd_gen(const GenArgs& a) {
    const auto scenario = generate_scenario(a.nodes, parse_placement(a.placement), a.seed, a.range);
    if (a.out.empty()) {
        std::cout << to_json(scenario);
    } else {
        write_scenario(scenario, a.out);
        std::cerr << "wrote " << a.out << ": " << scenario.node_count() << " nodes, "
                  << scenario.links.size() << " links\n";
    }
    return 0;
}

int cmd_solve(const SolveArgs& a) {
    if (a.algo != "bbbc" && a.algo != "bbo") {
        throw std::invalid_argument("unknown algorithm '" + a.algo + "' (expected bbbc|bbo)");
    }
    const auto scenario = read_scenario(a.scenario);
    const auto [source, target] = endpoints(scenario, a.source, a.target);
    const auto cm = build_cost_matrix(scenario, MetricBounds{}, load_rules(a.rules));

    RunResult result;
    if (a.algo == "bbbc") {
        BbbcParams p;
        p.population_size = a.pop;
        p.max_generations = a.generations;
        p.center_mode = parse_center_mode(a.center_mode);
        p.rng_seed = a.seed;
        result = run_bbbc(cm, source, target, p);
    } else {
        BboParams p;
        p.population_size = a.pop;
        p.max_generations = a.generations;
        p.max_immigration = a.immigration;
        p.max_emigration = a.emigration;
        p.max_mutation = a.mutation;
        p.elite_count = a.elite;
        p.rng_seed = a.seed;
        result = run_bbo(cm, source, target, p);
    }
    const auto oracle = shortest_path(cm, source, target);
    result.n_nodes = scenario.node_count();
    result.scenario_seed = scenario.seed;
    result.opt_seed = a.seed;
    result.oracle_cost = oracle.path.cost;
    result.percent_error = percent_error(result.best.cost, oracle.path.cost);
    if (!a.trace.empty()) emit_trace(result, a.trace);
    std::cout << to_json(result) << "\n";
    return 0;
}

int cmd_oracle(const OracleArgs& a) {
    const auto scenario = read_scenario(a.scenario);
    const auto [source, target] = endpoints(scenario, a.source, a.target);
    const auto cm = build_cost_matrix(scenario, MetricBounds{}, load_rules(a.rules));
    std::cout << to_json(shortest_path(cm, source, target).path) << "\n";
    return 0;
}

int cmd_bench(const BenchArgs& a) {
    const BenchPlan plan = a.plan.empty() ? default_plan() : read_plan(a.plan);
    BenchOptions options;
    options.include_large = a.include_large;
    options.serial_timing = a.serial_timing;
    options.jobs = a.jobs;
    const auto results = run_plan(plan, options);
    write_bench_outputs(results, a.out);
    std::cerr << "wrote " << results.size() << " runs to " << a.out << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Fuzzy-cost mesh routing with BB-BC and BBO"};
    app.require_subcommand(1);

    GenArgs gen;
    auto* gen_cmd = app.add_subcommand("gen", "Generate a scenario file");
    gen_cmd->add_option("--nodes", gen.nodes, "Node count")->required();
    gen_cmd->add_option("--placement", gen.placement, "grid|random")->capture_default_str();
    gen_cmd->add_option("--seed", gen.seed, "Scenario seed")->capture_default_str();
    gen_cmd->add_option("--range", gen.range, "Radio range in meters")->capture_default_str();
    gen_cmd->add_option("--out", gen.out, "Output file (stdout if omitted)");

    SolveArgs solve;
    auto* solve_cmd = app.add_subcommand("solve", "Find a path with BB-BC or BBO");
    solve_cmd->add_option("--algo", solve.algo, "bbbc|bbo")->required();
    solve_cmd->add_option("--scenario", solve.scenario, "Scenario file")->required();
    solve_cmd->add_option("--source", solve.source, "Source node (default 0)");
    solve_cmd->add_option("--target", solve.target, "Target node (default n-1)");
    solve_cmd->add_option("--generations", solve.generations)->capture_default_str();
    solve_cmd->add_option("--pop", solve.pop, "Population size")->capture_default_str();
    solve_cmd->add_option("--seed", solve.seed, "Optimizer seed")->capture_default_str();
    solve_cmd->add_option("--trace", solve.trace, "Write the convergence trace CSV here");
    solve_cmd->add_option("--rules", solve.rules, "Rule-base override JSON");
    solve_cmd->add_option("--center-mode", solve.center_mode, "weighted-center|best-individual")
        ->capture_default_str();
    solve_cmd->add_option("--immigration", solve.immigration, "BBO I")->capture_default_str();
    solve_cmd->add_option("--emigration", solve.emigration, "BBO E")->capture_default_str();
    solve_cmd->add_option("--mutation", solve.mutation, "BBO m_max")->capture_default_str();
    solve_cmd->add_option("--elite", solve.elite, "BBO elite count")->capture_default_str();

    OracleArgs oracle;
    auto* oracle_cmd = app.add_subcommand("oracle", "Exact minimum-cost path");
    oracle_cmd->add_option("--scenario", oracle.scenario, "Scenario file")->required();
    oracle_cmd->add_option("--source", oracle.source, "Source node (default 0)");
    oracle_cmd->add_option("--target", oracle.target, "Target node (default n-1)");
    oracle_cmd->add_option("--rules", oracle.rules, "Rule-base override JSON");

    BenchArgs bench;
    auto* bench_cmd = app.add_subcommand("bench", "Run a benchmark plan");
    bench_cmd->add_option("--plan", bench.plan, "Plan JSON (built-in default plan if omitted)");
    bench_cmd->add_option("--out", bench.out, "Output directory")->required();
    bench_cmd->add_flag("--include-large", bench.include_large, "Also run cells above 100 nodes");
    bench_cmd->add_flag("--serial-timing", bench.serial_timing, "Run cells one at a time");
    bench_cmd->add_option("--jobs", bench.jobs, "Parallel workers (0 = all cores)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*gen_cmd) return cmd_gen(gen);
        if (*solve_cmd) return cmd_solve(solve);
        if (*oracle_cmd) return cmd_oracle(oracle);
        if (*bench_cmd) return cmd_bench(bench);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n" << app.help();
        return kExitUsage;
    } catch (const NoPathError& e) {
        std::cerr << "error: unreachable: " << e.what() << "\n";
        return kExitDomain;
    } catch (const ConnectivityError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return kExitUsage;
}
