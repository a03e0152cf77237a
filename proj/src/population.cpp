#include "meshroute/population.hpp"

#include <algorithm>
#include <numeric>

namespace meshroute {

void Population::evaluate(int i, const CostMatrix& cm, NodeId source, NodeId terminal) {
    paths[i] = decode(keys.col(i), cm, source, terminal);
    costs[i] = paths[i].cost;
}

void Population::evaluate_all(const CostMatrix& cm, NodeId source, NodeId terminal) {
    paths.resize(static_cast<std::size_t>(size()));
    costs.resize(size());
    for (int i = 0; i < size(); ++i) evaluate(i, cm, source, terminal);
}

void Population::sort_by_cost() {
    std::vector<int> order(static_cast<std::size_t>(size()));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return costs[a] < costs[b]; });

    Population sorted;
    sorted.keys.resize(keys.rows(), keys.cols());
    sorted.costs.resize(costs.size());
    sorted.paths.reserve(paths.size());
    for (int i = 0; i < size(); ++i) {
        sorted.keys.col(i) = keys.col(order[i]);
        sorted.costs[i] = costs[order[i]];
        sorted.paths.push_back(std::move(paths[order[i]]));
    }
    *this = std::move(sorted);
}

Population random_population(Rng& rng, int n, int size) {
    Population pop;
    pop.keys.resize(n, size);
    for (int i = 0; i < size; ++i) pop.keys.col(i) = random_vector(rng, n);
    pop.paths.resize(static_cast<std::size_t>(size));
    pop.costs = Eigen::VectorXd::Zero(size);
    return pop;
}

}  // namespace meshroute
