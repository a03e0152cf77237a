#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "meshroute/bbbc.hpp"
#include "meshroute/bbo.hpp"
#include "meshroute/run_result.hpp"
#include "meshroute/topology.hpp"

namespace meshroute {

struct SeedPair {
    std::uint64_t scenario_seed = 0;
    std::uint64_t opt_seed = 0;

    friend bool operator==(const SeedPair&, const SeedPair&) = default;
};

// Sweep of node count x generation budget x seed pair x algorithm.
struct BenchPlan {
    std::vector<int> node_counts{25, 64, 100, 2500};
    std::vector<int> generation_budgets{30, 50, 100};
    std::vector<SeedPair> seeds;  // default_plan() fills ten pairs
    std::vector<std::string> algorithms{"bbbc", "bbo"};
    Placement placement = Placement::grid;
    double radio_range = kDefaultRadioRange;
    int population_size = 50;
    CenterMode center_mode = CenterMode::weighted_center;
    double max_immigration = 1.0;
    double max_emigration = 1.0;
    double max_mutation = 0.01;
    int elite_count = 2;

    // Throws std::invalid_argument.
    void validate() const;
};

BenchPlan default_plan();
BenchPlan plan_from_json(const std::string& text);  // missing fields take defaults
BenchPlan read_plan(const std::filesystem::path& file);

// Node counts above this only run with include_large.
inline constexpr int kLargeNodeThreshold = 100;

struct BenchOptions {
    bool include_large = false;
    bool serial_timing = false;  // one run at a time so wall times are clean
    int jobs = 0;                // 0: hardware concurrency (ignored when serial_timing)
};

BbbcParams bbbc_params(const BenchPlan& plan, int generations, std::uint64_t seed);
BboParams bbo_params(const BenchPlan& plan, int generations, std::uint64_t seed);

/// Runs every cell of the plan. Scenario, cost matrix and oracle are built
/// once per (node count, scenario seed) and kept out of the timed region.
/// Results come back in plan order: node count, generations, seed pair,
/// algorithm. A failing cell throws std::runtime_error naming the cell.
std::vector<RunResult> run_plan(const BenchPlan& plan, const BenchOptions& options = {});

struct SummaryRow {
    int n_nodes = 0;
    int generations = 0;
    std::string algorithm;
    int runs = 0;
    double median_cost = 0.0;
    double median_percent_error = 0.0;
    double median_wall_time_ms = 0.0;
};

// Lower median: element (size - 1) / 2 of the sorted values.
double lower_median(std::vector<double> values);

/// Groups by (n, generations, algorithm), ordered by node count then
/// generations then algorithm name.
std::vector<SummaryRow> summarize(const std::vector<RunResult>& results);

std::string results_csv(const std::vector<RunResult>& results);
// One row per (n, generations) with BB-BC and BBO side by side plus the
// BBO / BB-BC median time ratio.
std::string summary_csv(const std::vector<SummaryRow>& rows);
std::string trace_csv(const RunResult& result);
std::string trace_file_name(const RunResult& result);

void emit_trace(const RunResult& result, const std::filesystem::path& file);

// results.csv, summary.csv and one trace per run under `dir`.
void write_bench_outputs(const std::vector<RunResult>& results, const std::filesystem::path& dir);

}  // namespace meshroute
