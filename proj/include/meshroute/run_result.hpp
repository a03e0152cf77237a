#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "meshroute/path_codec.hpp"

namespace meshroute {

struct GenerationRecord {
    int generation = 0;  // 1-based
    double best_so_far = 0.0;
    double generation_best = 0.0;

    friend bool operator==(const GenerationRecord&, const GenerationRecord&) = default;
};

// best_so_far is non-increasing along the trace.
using GenerationTrace = std::vector<GenerationRecord>;

struct RunResult {
    std::string algorithm;
    Path best;
    PriorityVector best_keys;
    GenerationTrace trace;
    double wall_time_ms = 0.0;  // optimizer loop only
    // Every parameter the run used, defaults included, in a fixed order.
    std::vector<std::pair<std::string, std::string>> parameters;

    // Filled in by callers that know the scenario and the oracle.
    int n_nodes = 0;
    std::uint64_t scenario_seed = 0;
    std::uint64_t opt_seed = 0;
    std::optional<double> oracle_cost;
    std::optional<double> percent_error;

    [[nodiscard]] double best_cost() const { return best.cost; }
    [[nodiscard]] int generations() const { return static_cast<int>(trace.size()); }
};

bool is_non_increasing(const GenerationTrace& trace);

// Shortest decimal form that round-trips, used for every number written to
// result files so reruns are byte-identical.
std::string format_number(double value);

// JSON object with path, costs, error, wall time, trace length and parameters.
std::string to_json(const RunResult& result);

}  // namespace meshroute
