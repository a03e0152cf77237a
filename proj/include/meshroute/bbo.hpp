#pragma once

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "meshroute/cost_matrix.hpp"
#include "meshroute/path_codec.hpp"
#include "meshroute/run_result.hpp"

namespace meshroute {

// Biogeography-based optimization over priority vectors. Habitats are ranked
// by path cost; rank sets the species count k, which sets the immigration and
// emigration rates. Poor habitats import keys from good ones, and a
// species-count probability drives per-habitat mutation.

struct BboParams {
    int population_size = 50;
    int max_generations = 100;
    double max_immigration = 1.0;  // I
    double max_emigration = 1.0;   // E
    double max_mutation = 0.01;    // m_max
    int elite_count = 2;
    std::uint64_t rng_seed = 0;

    // Throws std::invalid_argument.
    void validate() const;
};

// Rank 0 is the cheapest habitat and gets the most species.
inline int rank_to_species(int rank, int max_species) { return max_species - rank; }

struct MigrationRates {
    double immigration = 0.0;  // lambda_k
    double emigration = 0.0;   // mu_k
};

/// lambda_k = I (1 - k/n), mu_k = E k/n.
inline MigrationRates migration_rates(int k, int max_species, double max_immigration,
                                      double max_emigration) {
    if (max_species < 1 || k < 0 || k > max_species) {
        throw std::invalid_argument("species count out of range");
    }
    const double ratio = static_cast<double>(k) / max_species;
    return {max_immigration * (1.0 - ratio), max_emigration * ratio};
}

/// Time derivative of the species-count probabilities P_0..P_n:
///   dP_k = -(lambda_k + mu_k) P_k + lambda_{k-1} P_{k-1} + mu_{k+1} P_{k+1}
/// At the boundaries the only outflow is toward an existing state
/// (k = 0: -lambda_0 P_0 + mu_1 P_1; k = n: -mu_n P_n + lambda_{n-1} P_{n-1}),
/// so the derivative sums to zero for any rates.
template <typename DerivedP, typename DerivedL, typename DerivedM>
PriorityVectorT<typename DerivedP::Scalar> probability_derivative(
    const Eigen::MatrixBase<DerivedP>& p, const Eigen::MatrixBase<DerivedL>& lambda,
    const Eigen::MatrixBase<DerivedM>& mu) {
    using Scalar = typename DerivedP::Scalar;
    const Eigen::Index count = p.size();
    if (count < 2 || lambda.size() != count || mu.size() != count) {
        throw std::invalid_argument("probability and rate vectors must share a length >= 2");
    }
    const Eigen::Index n = count - 1;
    PriorityVectorT<Scalar> dp(count);
    dp[0] = -lambda[0] * p[0] + mu[1] * p[1];
    for (Eigen::Index k = 1; k < n; ++k) {
        dp[k] = -(lambda[k] + mu[k]) * p[k] + lambda[k - 1] * p[k - 1] + mu[k + 1] * p[k + 1];
    }
    dp[n] = -mu[n] * p[n] + lambda[n - 1] * p[n - 1];
    return dp;
}

/// One explicit Euler step of the species-count dynamics, then negative
/// entries clamped to zero and the vector renormalized to sum 1.
template <typename DerivedP, typename DerivedL, typename DerivedM>
PriorityVectorT<typename DerivedP::Scalar> update_probability(
    const Eigen::MatrixBase<DerivedP>& p, const Eigen::MatrixBase<DerivedL>& lambda,
    const Eigen::MatrixBase<DerivedM>& mu, typename DerivedP::Scalar dt = 1) {
    using Scalar = typename DerivedP::Scalar;
    PriorityVectorT<Scalar> next = p + dt * probability_derivative(p, lambda, mu);
    next = next.cwiseMax(Scalar(0));
    const Scalar total = next.sum();
    if (!(total > Scalar(0))) throw std::domain_error("species-count probabilities vanished");
    return next / total;
}

/// For every non-elite habitat i (columns elite_count.. of a population
/// sorted best first) and every SIV d: with probability immigration[i] the
/// SIV is replaced by the same SIV of a donor j != i drawn by roulette over
/// emigration[j]. Donor values are read from the population before any
/// migration this call. Returns which habitats were modified.
std::vector<bool> migrate(Eigen::MatrixXd& sivs, const Eigen::VectorXd& immigration,
                          const Eigen::VectorXd& emigration, int elite_count, Rng& rng);

/// Mutation rate per habitat: m_max (1 - P_s / P_max), zero when P_max == 0.
Eigen::VectorXd mutation_rates(const Eigen::VectorXd& species_probability, double max_mutation);

/// Each SIV of each non-elite habitat is redrawn from U[0, 1] with its
/// habitat's mutation rate. Returns which habitats were modified.
std::vector<bool> mutate(Eigen::MatrixXd& sivs, const Eigen::VectorXd& species_probability,
                         double max_mutation, int elite_count, Rng& rng);

/// Runs BBO for params.max_generations generations; each generation
/// evaluates and ranks all habitats, then migrates, updates the
/// species-count probabilities and mutates. Throws NoPathError if terminal is
/// unreachable.
RunResult run_bbo(const CostMatrix& cm, NodeId source, NodeId terminal, const BboParams& params);

}  // namespace meshroute
