#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

#include <Eigen/Core>

#include "meshroute/cost_matrix.hpp"
#include "meshroute/path_codec.hpp"
#include "meshroute/run_result.hpp"

namespace meshroute {

// Big Bang-Big Crunch over priority vectors. Each generation the population
// contracts to a center (Big Crunch) and a new population is scattered around
// it with a spread that shrinks as 1/k (Big Bang).

enum class CenterMode {
    weighted_center,  // inverse-cost weighted mean of the population
    best_individual,  // the best candidate of the generation
};

CenterMode parse_center_mode(const std::string& name);
std::string to_string(CenterMode mode);

struct BbbcParams {
    int population_size = 50;
    int max_generations = 100;
    double upper_limit = 1.0;  // l: scale of the perturbation
    CenterMode center_mode = CenterMode::weighted_center;
    std::uint64_t rng_seed = 0;

    // Throws std::invalid_argument.
    void validate() const;
};

/// Inverse-fitness weighted mean of the candidates (one per column):
/// x_c = sum(x_i / f_i) / sum(1 / f_i).
template <typename DerivedX, typename DerivedF>
PriorityVectorT<typename DerivedX::Scalar> center_of_mass(
    const Eigen::MatrixBase<DerivedX>& candidates, const Eigen::MatrixBase<DerivedF>& fitness) {
    using Scalar = typename DerivedX::Scalar;
    if (candidates.cols() == 0) throw std::invalid_argument("empty population");
    if (fitness.size() != candidates.cols()) {
        throw std::invalid_argument("one fitness value per candidate required");
    }
    if (!(fitness.array() > Scalar(0)).all()) {
        throw std::invalid_argument("fitness values must be positive");
    }
    const PriorityVectorT<Scalar> weights = fitness.derived().template cast<Scalar>().cwiseInverse();
    return (candidates * weights) / weights.sum();
}

/// Per-dimension perturbation l * r / k with r ~ N(0, 1).
template <typename Scalar = double>
PriorityVectorT<Scalar> spawn_offsets(int n, Scalar upper_limit, int k, Rng& rng) {
    if (k < 1) throw std::invalid_argument("generation index k must be >= 1");
    std::normal_distribution<Scalar> normal(Scalar(0), Scalar(1));
    PriorityVectorT<Scalar> offsets(n);
    for (int d = 0; d < n; ++d) offsets[d] = upper_limit * normal(rng) / Scalar(k);
    return offsets;
}

/// center + offsets, bounded to the key range [0, 1].
template <typename DerivedC, typename DerivedO>
PriorityVectorT<typename DerivedC::Scalar> spawn_from_offsets(
    const Eigen::MatrixBase<DerivedC>& center, const Eigen::MatrixBase<DerivedO>& offsets) {
    using Scalar = typename DerivedC::Scalar;
    return (center + offsets).cwiseMax(Scalar(0)).cwiseMin(Scalar(1));
}

/// New candidate x = x_c + l * r / k, clamped to [0, 1].
template <typename Derived>
PriorityVectorT<typename Derived::Scalar> spawn(const Eigen::MatrixBase<Derived>& center,
                                                typename Derived::Scalar upper_limit, int k,
                                                Rng& rng) {
    return spawn_from_offsets(center, spawn_offsets(static_cast<int>(center.size()), upper_limit, k, rng));
}

/// Runs BB-BC for params.max_generations generations. Generation 1 is a
/// random population; later generations hold the best vector found so far
/// plus population_size - 1 candidates spawned around the center with k equal
/// to the previous generation's index. Throws NoPathError if terminal is
/// unreachable.
RunResult run_bbbc(const CostMatrix& cm, NodeId source, NodeId terminal, const BbbcParams& params);

}  // namespace meshroute
