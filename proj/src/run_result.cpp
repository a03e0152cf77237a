#include "meshroute/run_result.hpp"

#include <fmt/format.h>
#include <json.hpp>

namespace meshroute {

bool is_non_increasing(const GenerationTrace& trace) {
    for (std::size_t i = 1; i < trace.size(); ++i) {
        if (trace[i].best_so_far > trace[i - 1].best_so_far) return false;
    }
    return true;
}

std::string format_number(double value) { return fmt::format("{}", value); }

std::string to_json(const RunResult& r) {
    using nlohmann::ordered_json;
    ordered_json params = ordered_json::object();
    for (const auto& [key, value] : r.parameters) params[key] = value;

    ordered_json doc;
    doc["algorithm"] = r.algorithm;
    doc["n_nodes"] = r.n_nodes;
    doc["scenario_seed"] = r.scenario_seed;
    doc["opt_seed"] = r.opt_seed;
    doc["generations"] = r.generations();
    doc["path"] = {{"nodes", r.best.nodes}, {"cost", r.best.cost}};
    doc["best_cost"] = r.best.cost;
    doc["oracle_cost"] = r.oracle_cost ? ordered_json(*r.oracle_cost) : ordered_json(nullptr);
    doc["percent_error"] = r.percent_error ? ordered_json(*r.percent_error) : ordered_json(nullptr);
    doc["wall_time_ms"] = r.wall_time_ms;
    doc["parameters"] = std::move(params);
    return doc.dump(2);
}

}  // namespace meshroute
