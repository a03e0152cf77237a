#include "meshroute/bbo.hpp"

#include <chrono>
#include <random>

#include "meshroute/population.hpp"

namespace meshroute {

namespace {

// Roulette over weights, skipping `exclude`.
int pick_donor(const Eigen::VectorXd& weights, int exclude, Rng& rng) {
    const double total = weights.sum() - weights[exclude];
    if (!(total > 0.0)) throw std::logic_error("no habitat with a positive emigration rate");
    std::uniform_real_distribution<double> unit(0.0, total);
    const double target = unit(rng);
    double cumulative = 0.0;
    int last_positive = -1;
    for (int j = 0; j < weights.size(); ++j) {
        if (j == exclude || weights[j] <= 0.0) continue;
        cumulative += weights[j];
        last_positive = j;
        if (cumulative > target) return j;
    }
    return last_positive;  // rounding left target at the top edge
}

}  // namespace

void BboParams::validate() const {
    if (population_size < 2) throw std::invalid_argument("population size must be at least 2");
    if (max_generations < 1) throw std::invalid_argument("need at least one generation");
    if (!(max_immigration > 0.0)) throw std::invalid_argument("I must be positive");
    if (!(max_emigration > 0.0)) throw std::invalid_argument("E must be positive");
    if (!(max_mutation >= 0.0 && max_mutation <= 1.0)) {
        throw std::invalid_argument("m_max must lie in [0, 1]");
    }
    if (elite_count < 0 || elite_count >= population_size) {
        throw std::invalid_argument("elite count must be in [0, population size)");
    }
}

std::vector<bool> migrate(Eigen::MatrixXd& sivs, const Eigen::VectorXd& immigration,
                          const Eigen::VectorXd& emigration, int elite_count, Rng& rng) {
    const int size = static_cast<int>(sivs.cols());
    if (immigration.size() != size || emigration.size() != size) {
        throw std::invalid_argument("one rate pair per habitat required");
    }
    const Eigen::MatrixXd donors = sivs;
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<bool> modified(static_cast<std::size_t>(size), false);
    for (int i = elite_count; i < size; ++i) {
        for (int d = 0; d < sivs.rows(); ++d) {
            if (unit(rng) >= immigration[i]) continue;
            const int j = pick_donor(emigration, i, rng);
            sivs(d, i) = donors(d, j);
            modified[i] = true;
        }
    }
    return modified;
}

Eigen::VectorXd mutation_rates(const Eigen::VectorXd& species_probability, double max_mutation) {
    const double p_max = species_probability.size() > 0 ? species_probability.maxCoeff() : 0.0;
    if (!(p_max > 0.0)) return Eigen::VectorXd::Zero(species_probability.size());
    return max_mutation * (1.0 - species_probability.array() / p_max);
}

std::vector<bool> mutate(Eigen::MatrixXd& sivs, const Eigen::VectorXd& species_probability,
                         double max_mutation, int elite_count, Rng& rng) {
    const int size = static_cast<int>(sivs.cols());
    if (species_probability.size() != size) {
        throw std::invalid_argument("one probability per habitat required");
    }
    const Eigen::VectorXd rates = mutation_rates(species_probability, max_mutation);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<bool> modified(static_cast<std::size_t>(size), false);
    for (int i = elite_count; i < size; ++i) {
        if (rates[i] <= 0.0) continue;
        for (int d = 0; d < sivs.rows(); ++d) {
            if (unit(rng) < rates[i]) {
                sivs(d, i) = unit(rng);
                modified[i] = true;
            }
        }
    }
    return modified;
}

RunResult run_bbo(const CostMatrix& cm, NodeId source, NodeId terminal, const BboParams& params) {
    params.validate();
    const int n = cm.size();
    const int size = params.population_size;
    const int max_species = size;

    RunResult result;
    result.algorithm = "bbo";
    result.parameters = {{"population_size", std::to_string(size)},
                         {"max_generations", std::to_string(params.max_generations)},
                         {"max_immigration", format_number(params.max_immigration)},
                         {"max_emigration", format_number(params.max_emigration)},
                         {"max_mutation", format_number(params.max_mutation)},
                         {"elite_count", std::to_string(params.elite_count)},
                         {"rng_seed", std::to_string(params.rng_seed)}};

    // Rates over every possible species count 0..n drive the probability
    // dynamics; habitats read theirs off at their current count.
    Eigen::VectorXd lambda_k(max_species + 1), mu_k(max_species + 1);
    for (int k = 0; k <= max_species; ++k) {
        const auto r = migration_rates(k, max_species, params.max_immigration, params.max_emigration);
        lambda_k[k] = r.immigration;
        mu_k[k] = r.emigration;
    }
    Eigen::VectorXd species_p = Eigen::VectorXd::Constant(max_species + 1, 1.0 / (max_species + 1));

    const auto start = std::chrono::steady_clock::now();
    Rng rng(params.rng_seed);
    Population pop = random_population(rng, n, size);

    const auto consider = [&](int i) {
        if (result.best.nodes.empty() || pop.costs[i] < result.best.cost) {
            result.best = pop.paths[i];
            result.best_keys = pop.keys.col(i);
        }
    };
    const auto recost = [&](const std::vector<bool>& modified) {
        for (int i = 0; i < size; ++i) {
            if (!modified[i]) continue;
            pop.evaluate(i, cm, source, terminal);
            consider(i);
        }
    };

    Eigen::VectorXd lambda(size), mu(size), habitat_p(size);
    for (int generation = 1; generation <= params.max_generations; ++generation) {
        pop.evaluate_all(cm, source, terminal);
        pop.sort_by_cost();
        consider(0);
        result.trace.push_back({generation, result.best.cost, pop.costs[0]});
        if (generation == params.max_generations) break;

        for (int rank = 0; rank < size; ++rank) {
            const int k = rank_to_species(rank, max_species);
            lambda[rank] = lambda_k[k];
            mu[rank] = mu_k[k];
        }
        recost(migrate(pop.keys, lambda, mu, params.elite_count, rng));

        species_p = update_probability(species_p, lambda_k, mu_k);
        for (int rank = 0; rank < size; ++rank) {
            habitat_p[rank] = species_p[rank_to_species(rank, max_species)];
        }
        recost(mutate(pop.keys, habitat_p, params.max_mutation, params.elite_count, rng));
    }

    result.wall_time_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return result;
}

}  // namespace meshroute
