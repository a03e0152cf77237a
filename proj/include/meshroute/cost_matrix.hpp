#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include <Eigen/SparseCore>

#include "meshroute/topology.hpp"

namespace meshroute {

struct WeightedEdge {
    NodeId from = 0;
    NodeId to = 0;
    double cost = 0.0;
};

/// Integrated link cost per directed link.
///
/// Backed by a row-major sparse matrix: a link without an observation is
/// structurally absent, which is distinct from a stored value. Row i lists the
/// out-neighbors of node i in ascending id order.
class CostMatrix {
public:
    using Storage = Eigen::SparseMatrix<double, Eigen::RowMajor, int>;

    CostMatrix() = default;

    /// Throws std::invalid_argument on duplicate edges, self loops,
    /// out-of-range ids or non-positive costs.
    CostMatrix(int n, std::span<const WeightedEdge> edges);

    [[nodiscard]] int size() const { return static_cast<int>(ilc_.rows()); }
    [[nodiscard]] int defined_count() const { return static_cast<int>(ilc_.nonZeros()); }

    [[nodiscard]] std::optional<double> at(NodeId from, NodeId to) const;
    [[nodiscard]] bool defined(NodeId from, NodeId to) const { return at(from, to).has_value(); }

    [[nodiscard]] std::span<const NodeId> neighbors(NodeId from) const;
    [[nodiscard]] std::span<const double> neighbor_costs(NodeId from) const;

    [[nodiscard]] std::vector<WeightedEdge> edges() const;

    [[nodiscard]] const Storage& storage() const { return ilc_; }

private:
    Storage ilc_;
};

}  // namespace meshroute
