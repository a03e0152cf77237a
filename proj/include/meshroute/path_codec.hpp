#pragma once

#include <span>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "meshroute/cost_matrix.hpp"
#include "meshroute/topology.hpp"

namespace meshroute {

// Random-keys genome: one priority in [0, 1] per node. Both optimizers search
// this space; decode() turns any genome into a feasible path.
template <typename Scalar>
using PriorityVectorT = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
using PriorityVector = PriorityVectorT<double>;

struct Path {
    std::vector<NodeId> nodes;
    double cost = 0.0;

    [[nodiscard]] int hops() const { return nodes.empty() ? 0 : static_cast<int>(nodes.size()) - 1; }

    friend bool operator==(const Path&, const Path&) = default;
};

/// Depth-first search from source that enters unvisited neighbors in
/// descending key order (ties by ascending id) and returns the DFS stack the
/// first time terminal is reached. Backtracking out of dead ends means a path
/// is found whenever terminal is reachable.
///
/// Throws std::invalid_argument if source == terminal or the key count does
/// not match the node count, and NoPathError if terminal is unreachable.
template <typename Derived>
Path decode(const Eigen::MatrixBase<Derived>& keys, const CostMatrix& cm, NodeId source,
            NodeId terminal);

// Sum of link costs along the sequence; BrokenPathError on a missing link.
double path_cost(std::span<const NodeId> nodes, const CostMatrix& cm);

PriorityVector random_vector(Rng& rng, int n);

// Loop-free, endpoints match, every hop defined, cost consistent.
bool is_valid_path(const Path& path, const CostMatrix& cm, NodeId source, NodeId terminal);

std::string to_json(const Path& path);
Path path_from_json(const std::string& text);

namespace detail {
Path decode_keys(std::span<const double> keys, const CostMatrix& cm, NodeId source,
                 NodeId terminal);
}  // namespace detail

template <typename Derived>
Path decode(const Eigen::MatrixBase<Derived>& keys, const CostMatrix& cm, NodeId source,
            NodeId terminal) {
    const PriorityVector evaluated = keys.template cast<double>();
    return detail::decode_keys({evaluated.data(), static_cast<std::size_t>(evaluated.size())}, cm,
                               source, terminal);
}

}  // namespace meshroute
