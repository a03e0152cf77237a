#include "meshroute/bbbc.hpp"

#include <chrono>

#include "meshroute/population.hpp"

namespace meshroute {

CenterMode parse_center_mode(const std::string& name) {
    if (name == "weighted-center" || name == "weighted") return CenterMode::weighted_center;
    if (name == "best-individual" || name == "best") return CenterMode::best_individual;
    throw std::invalid_argument("unknown center mode '" + name +
                                "' (expected weighted-center|best-individual)");
}

std::string to_string(CenterMode mode) {
    return mode == CenterMode::weighted_center ? "weighted-center" : "best-individual";
}

void BbbcParams::validate() const {
    if (population_size < 2) throw std::invalid_argument("population size must be at least 2");
    if (max_generations < 1) throw std::invalid_argument("need at least one generation");
    if (!(upper_limit > 0.0)) throw std::invalid_argument("upper limit must be positive");
}

RunResult run_bbbc(const CostMatrix& cm, NodeId source, NodeId terminal, const BbbcParams& params) {
    params.validate();
    const int n = cm.size();
    const int size = params.population_size;

    RunResult result;
    result.algorithm = "bbbc";
    result.parameters = {{"population_size", std::to_string(size)},
                         {"max_generations", std::to_string(params.max_generations)},
                         {"upper_limit", format_number(params.upper_limit)},
                         {"center_mode", to_string(params.center_mode)},
                         {"elitism", "best-so-far"},
                         {"rng_seed", std::to_string(params.rng_seed)}};

    const auto start = std::chrono::steady_clock::now();
    Rng rng(params.rng_seed);
    Population pop = random_population(rng, n, size);

    for (int generation = 1; generation <= params.max_generations; ++generation) {
        pop.evaluate_all(cm, source, terminal);
        pop.sort_by_cost();
        if (generation == 1 || pop.costs[0] < result.best.cost) {
            result.best = pop.paths[0];
            result.best_keys = pop.keys.col(0);
        }
        result.trace.push_back({generation, result.best.cost, pop.costs[0]});
        if (generation == params.max_generations) break;

        const PriorityVector center = params.center_mode == CenterMode::weighted_center
                                          ? center_of_mass(pop.keys, pop.costs)
                                          : PriorityVector(pop.keys.col(0));
        pop.keys.col(0) = result.best_keys;
        for (int i = 1; i < size; ++i) {
            pop.keys.col(i) = spawn(center, params.upper_limit, generation, rng);
        }
    }

    result.wall_time_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return result;
}

}  // namespace meshroute
