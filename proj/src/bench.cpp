#include "meshroute/bench.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <tuple>

#include <fmt/format.h>
#include <json.hpp>

#include "meshroute/errors.hpp"
#include "meshroute/fuzzy_cost.hpp"
#include "meshroute/oracle.hpp"

namespace meshroute {

namespace {

using nlohmann::json;

struct PreparedScenario {
    int n = 0;
    std::uint64_t seed = 0;
    CostMatrix cm;
    double oracle_cost = 0.0;
};

struct Cell {
    std::size_t scenario = 0;  // index into prepared scenarios
    int generations = 0;
    SeedPair seeds;
    std::string algorithm;
};

std::string cell_name(const Cell& c, int n) {
    return fmt::format("cell(algorithm={}, n={}, generations={}, scenario_seed={}, opt_seed={})",
                       c.algorithm, n, c.generations, c.seeds.scenario_seed, c.seeds.opt_seed);
}

void write_text(const std::filesystem::path& file, const std::string& text) {
    std::ofstream out(file, std::ios::binary);
    if (!out) throw IoError("cannot open '" + file.string() + "' for writing");
    out << text;
    if (!out) throw IoError("failed writing '" + file.string() + "'");
}

}  // namespace

void BenchPlan::validate() const {
    if (node_counts.empty()) throw std::invalid_argument("plan has no node counts");
    if (generation_budgets.empty()) throw std::invalid_argument("plan has no generation budgets");
    if (seeds.empty()) throw std::invalid_argument("plan has no seeds");
    if (algorithms.empty()) throw std::invalid_argument("plan has no algorithms");
    for (const auto& a : algorithms) {
        if (a != "bbbc" && a != "bbo") throw std::invalid_argument("unknown algorithm '" + a + "'");
    }
    for (int n : node_counts) {
        if (n < 2) throw std::invalid_argument("node count must be at least 2");
        if (placement == Placement::grid) {
            const int side = static_cast<int>(std::lround(std::sqrt(static_cast<double>(n))));
            if (side * side != n) {
                throw std::invalid_argument(std::to_string(n) +
                                            " is not a perfect square (grid placement)");
            }
        }
    }
    for (int g : generation_budgets) {
        if (g < 1) throw std::invalid_argument("generation budget must be positive");
    }
    bbbc_params(*this, 1, 0).validate();
    bbo_params(*this, 1, 0).validate();
}

BenchPlan default_plan() {
    BenchPlan plan;
    for (std::uint64_t s = 1; s <= 10; ++s) plan.seeds.push_back({s, s});
    return plan;
}

BenchPlan plan_from_json(const std::string& text) {
    BenchPlan plan = default_plan();
    try {
        const json doc = json::parse(text);
        if (doc.contains("node_counts")) plan.node_counts = doc["node_counts"].get<std::vector<int>>();
        if (doc.contains("generation_budgets")) {
            plan.generation_budgets = doc["generation_budgets"].get<std::vector<int>>();
        }
        if (doc.contains("seeds")) {
            plan.seeds.clear();
            for (const auto& s : doc["seeds"]) {
                if (s.is_array()) {
                    plan.seeds.push_back({s.at(0).get<std::uint64_t>(), s.at(1).get<std::uint64_t>()});
                } else if (s.is_object()) {
                    plan.seeds.push_back({s.at("scenario_seed").get<std::uint64_t>(),
                                          s.at("opt_seed").get<std::uint64_t>()});
                } else {
                    const auto seed = s.get<std::uint64_t>();
                    plan.seeds.push_back({seed, seed});
                }
            }
        }
        if (doc.contains("algorithms")) {
            plan.algorithms = doc["algorithms"].get<std::vector<std::string>>();
        }
        if (doc.contains("placement")) plan.placement = parse_placement(doc["placement"].get<std::string>());
        if (doc.contains("radio_range_m")) plan.radio_range = doc["radio_range_m"].get<double>();
        if (doc.contains("population_size")) plan.population_size = doc["population_size"].get<int>();
        if (doc.contains("center_mode")) {
            plan.center_mode = parse_center_mode(doc["center_mode"].get<std::string>());
        }
        if (doc.contains("max_immigration")) plan.max_immigration = doc["max_immigration"].get<double>();
        if (doc.contains("max_emigration")) plan.max_emigration = doc["max_emigration"].get<double>();
        if (doc.contains("max_mutation")) plan.max_mutation = doc["max_mutation"].get<double>();
        if (doc.contains("elite_count")) plan.elite_count = doc["elite_count"].get<int>();
    } catch (const json::exception& e) {
        throw IoError(std::string("malformed plan: ") + e.what());
    }
    plan.validate();
    return plan;
}

BenchPlan read_plan(const std::filesystem::path& file) {
    std::ifstream in(file, std::ios::binary);
    if (!in) throw IoError("cannot open '" + file.string() + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return plan_from_json(buffer.str());
}

BbbcParams bbbc_params(const BenchPlan& plan, int generations, std::uint64_t seed) {
    BbbcParams p;
    p.population_size = plan.population_size;
    p.max_generations = generations;
    p.center_mode = plan.center_mode;
    p.rng_seed = seed;
    return p;
}

BboParams bbo_params(const BenchPlan& plan, int generations, std::uint64_t seed) {
    BboParams p;
    p.population_size = plan.population_size;
    p.max_generations = generations;
    p.max_immigration = plan.max_immigration;
    p.max_emigration = plan.max_emigration;
    p.max_mutation = plan.max_mutation;
    p.elite_count = plan.elite_count;
    p.rng_seed = seed;
    return p;
}

std::vector<RunResult> run_plan(const BenchPlan& plan, const BenchOptions& options) {
    plan.validate();

    std::vector<PreparedScenario> scenarios;
    std::vector<Cell> cells;
    std::map<std::pair<int, std::uint64_t>, std::size_t> prepared;
    for (int n : plan.node_counts) {
        if (n > kLargeNodeThreshold && !options.include_large) continue;
        for (int generations : plan.generation_budgets) {
            for (const auto& seeds : plan.seeds) {
                const auto key = std::pair(n, seeds.scenario_seed);
                auto it = prepared.find(key);
                if (it == prepared.end()) {
                    try {
                        const auto s = generate_scenario(n, plan.placement, seeds.scenario_seed,
                                                         plan.radio_range);
                        PreparedScenario p{n, seeds.scenario_seed, build_cost_matrix(s), 0.0};
                        p.oracle_cost = shortest_path(p.cm, 0, n - 1).path.cost;
                        scenarios.push_back(std::move(p));
                    } catch (const std::exception& e) {
                        throw std::runtime_error(fmt::format("scenario(n={}, seed={}): {}", n,
                                                             seeds.scenario_seed, e.what()));
                    }
                    it = prepared.emplace(key, scenarios.size() - 1).first;
                }
                for (const auto& algorithm : plan.algorithms) {
                    cells.push_back({it->second, generations, seeds, algorithm});
                }
            }
        }
    }

    std::vector<RunResult> results(cells.size());
    const auto run_cell = [&](std::size_t index) {
        const Cell& cell = cells[index];
        const PreparedScenario& s = scenarios[cell.scenario];
        const NodeId terminal = s.n - 1;
        try {
            RunResult r =
                cell.algorithm == "bbbc"
                    ? run_bbbc(s.cm, 0, terminal, bbbc_params(plan, cell.generations, cell.seeds.opt_seed))
                    : run_bbo(s.cm, 0, terminal, bbo_params(plan, cell.generations, cell.seeds.opt_seed));
            r.n_nodes = s.n;
            r.scenario_seed = s.seed;
            r.opt_seed = cell.seeds.opt_seed;
            r.oracle_cost = s.oracle_cost;
            r.percent_error = percent_error(r.best.cost, s.oracle_cost);
            results[index] = std::move(r);
        } catch (const std::exception& e) {
            throw std::runtime_error(cell_name(cell, s.n) + ": " + e.what());
        }
    };

    int jobs = options.jobs > 0 ? options.jobs : static_cast<int>(std::thread::hardware_concurrency());
    if (options.serial_timing || jobs < 1) jobs = 1;
    jobs = std::min<int>(jobs, static_cast<int>(cells.size()));

    if (jobs <= 1) {
        for (std::size_t i = 0; i < cells.size(); ++i) run_cell(i);
        return results;
    }

    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::size_t failed_index = cells.size();
    std::mutex failure_mutex;
    {
        std::vector<std::jthread> workers;
        for (int w = 0; w < jobs; ++w) {
            workers.emplace_back([&] {
                for (std::size_t i = next++; i < cells.size(); i = next++) {
                    try {
                        run_cell(i);
                    } catch (...) {
                        std::lock_guard lock(failure_mutex);
                        if (i < failed_index) {  // report the first failing cell in plan order
                            failed_index = i;
                            failure = std::current_exception();
                        }
                    }
                }
            });
        }
    }
    if (failure) std::rethrow_exception(failure);
    return results;
}

double lower_median(std::vector<double> values) {
    if (values.empty()) throw std::invalid_argument("median of an empty set");
    const auto mid = values.begin() + static_cast<std::ptrdiff_t>((values.size() - 1) / 2);
    std::nth_element(values.begin(), mid, values.end());
    return *mid;
}

std::vector<SummaryRow> summarize(const std::vector<RunResult>& results) {
    if (results.empty()) throw std::invalid_argument("nothing to summarize");
    struct Group {
        std::vector<double> cost, error, time;
    };
    std::map<std::tuple<int, int, std::string>, Group> groups;
    for (const auto& r : results) {
        auto& g = groups[{r.n_nodes, r.generations(), r.algorithm}];
        g.cost.push_back(r.best.cost);
        g.error.push_back(r.percent_error.value_or(0.0));
        g.time.push_back(r.wall_time_ms);
    }
    std::vector<SummaryRow> rows;
    for (const auto& [key, g] : groups) {
        rows.push_back({std::get<0>(key), std::get<1>(key), std::get<2>(key),
                        static_cast<int>(g.cost.size()), lower_median(g.cost),
                        lower_median(g.error), lower_median(g.time)});
    }
    return rows;
}

std::string results_csv(const std::vector<RunResult>& results) {
    std::string out =
        "algorithm,n_nodes,generations,scenario_seed,opt_seed,best_cost,oracle_cost,percent_error,"
        "wall_time_ms\n";
    for (const auto& r : results) {
        out += fmt::format("{},{},{},{},{},{},{},{},{}\n", r.algorithm, r.n_nodes, r.generations(),
                           r.scenario_seed, r.opt_seed, format_number(r.best.cost),
                           r.oracle_cost ? format_number(*r.oracle_cost) : "",
                           r.percent_error ? format_number(*r.percent_error) : "",
                           format_number(r.wall_time_ms));
    }
    return out;
}

std::string summary_csv(const std::vector<SummaryRow>& rows) {
    std::map<std::pair<int, int>, std::map<std::string, const SummaryRow*>> table;
    for (const auto& row : rows) table[{row.n_nodes, row.generations}][row.algorithm] = &row;

    std::string out =
        "n_nodes,generations,bbbc_runs,bbbc_cost,bbbc_percent_error,bbbc_time_ms,bbo_runs,bbo_cost,"
        "bbo_percent_error,bbo_time_ms,bbo_bbbc_time_ratio\n";
    const auto cols = [](const SummaryRow* r) {
        if (!r) return std::string(",,,");
        return fmt::format("{},{},{},{}", r->runs, format_number(r->median_cost),
                           format_number(r->median_percent_error),
                           format_number(r->median_wall_time_ms));
    };
    for (const auto& [key, by_algo] : table) {
        const auto find = [&](const char* name) -> const SummaryRow* {
            const auto it = by_algo.find(name);
            return it == by_algo.end() ? nullptr : it->second;
        };
        const SummaryRow* bbbc = find("bbbc");
        const SummaryRow* bbo = find("bbo");
        std::string ratio;
        if (bbbc && bbo && bbbc->median_wall_time_ms > 0.0) {
            ratio = format_number(bbo->median_wall_time_ms / bbbc->median_wall_time_ms);
        }
        out += fmt::format("{},{},{},{},{}\n", key.first, key.second, cols(bbbc), cols(bbo), ratio);
    }
    return out;
}

std::string trace_csv(const RunResult& result) {
    std::string out = "generation,best_cost_so_far,generation_best_cost\n";
    for (const auto& rec : result.trace) {
        out += fmt::format("{},{},{}\n", rec.generation, format_number(rec.best_so_far),
                           format_number(rec.generation_best));
    }
    return out;
}

std::string trace_file_name(const RunResult& r) {
    return fmt::format("trace_{}_n{}_g{}_s{}_o{}.csv", r.algorithm, r.n_nodes, r.generations(),
                       r.scenario_seed, r.opt_seed);
}

void emit_trace(const RunResult& result, const std::filesystem::path& file) {
    if (result.trace.empty()) throw std::invalid_argument("empty trace");
    write_text(file, trace_csv(result));
}

void write_bench_outputs(const std::vector<RunResult>& results, const std::filesystem::path& dir) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) throw IoError("cannot create '" + dir.string() + "': " + ec.message());
    write_text(dir / "results.csv", results_csv(results));
    write_text(dir / "summary.csv", summary_csv(summarize(results)));
    for (const auto& r : results) emit_trace(r, dir / trace_file_name(r));
}

}  // namespace meshroute
