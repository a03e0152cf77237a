#pragma once

#include <vector>

#include <Eigen/Core>

#include "meshroute/cost_matrix.hpp"
#include "meshroute/path_codec.hpp"

namespace meshroute {

// Candidates stored column-wise: keys.col(i) is candidate i.
struct Population {
    Eigen::MatrixXd keys;
    std::vector<Path> paths;
    Eigen::VectorXd costs;

    [[nodiscard]] int size() const { return static_cast<int>(keys.cols()); }
    [[nodiscard]] int dimension() const { return static_cast<int>(keys.rows()); }

    // Decodes and costs candidate i.
    void evaluate(int i, const CostMatrix& cm, NodeId source, NodeId terminal);
    void evaluate_all(const CostMatrix& cm, NodeId source, NodeId terminal);

    // Reorders candidates best to worst; equal costs keep their relative order.
    void sort_by_cost();
};

Population random_population(Rng& rng, int n, int size);

}  // namespace meshroute
