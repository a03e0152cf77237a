#include "meshroute/cost_matrix.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace meshroute {

CostMatrix::CostMatrix(int n, std::span<const WeightedEdge> edges) : ilc_(n, n) {
    if (n < 0) throw std::invalid_argument("negative matrix size");
    std::vector<Eigen::Triplet<double, int>> triplets;
    triplets.reserve(edges.size());
    for (const auto& e : edges) {
        if (e.from < 0 || e.to < 0 || e.from >= n || e.to >= n) {
            throw std::invalid_argument("edge endpoint out of range");
        }
        if (e.from == e.to) throw std::invalid_argument("self loop");
        if (!(e.cost > 0.0)) {
            throw std::invalid_argument("edge cost must be positive (" + std::to_string(e.from) +
                                        "->" + std::to_string(e.to) + ")");
        }
        triplets.emplace_back(e.from, e.to, e.cost);
    }
    // setFromTriplets sums duplicates, so reject them up front.
    auto sorted = triplets;
    std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
        return std::pair(a.row(), a.col()) < std::pair(b.row(), b.col());
    });
    const auto dup = std::adjacent_find(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
        return a.row() == b.row() && a.col() == b.col();
    });
    if (dup != sorted.end()) throw std::invalid_argument("duplicate edge");

    ilc_.setFromTriplets(triplets.begin(), triplets.end());
    ilc_.makeCompressed();
}

std::optional<double> CostMatrix::at(NodeId from, NodeId to) const {
    if (from < 0 || to < 0 || from >= size() || to >= size()) return std::nullopt;
    const auto cols = neighbors(from);
    const auto it = std::lower_bound(cols.begin(), cols.end(), to);
    if (it == cols.end() || *it != to) return std::nullopt;
    return neighbor_costs(from)[static_cast<std::size_t>(it - cols.begin())];
}

std::span<const NodeId> CostMatrix::neighbors(NodeId from) const {
    const int begin = ilc_.outerIndexPtr()[from];
    const int end = ilc_.outerIndexPtr()[from + 1];
    return {ilc_.innerIndexPtr() + begin, static_cast<std::size_t>(end - begin)};
}

std::span<const double> CostMatrix::neighbor_costs(NodeId from) const {
    const int begin = ilc_.outerIndexPtr()[from];
    const int end = ilc_.outerIndexPtr()[from + 1];
    return {ilc_.valuePtr() + begin, static_cast<std::size_t>(end - begin)};
}

std::vector<WeightedEdge> CostMatrix::edges() const {
    std::vector<WeightedEdge> out;
    out.reserve(static_cast<std::size_t>(defined_count()));
    for (int row = 0; row < ilc_.outerSize(); ++row) {
        for (Storage::InnerIterator it(ilc_, row); it; ++it) {
            out.push_back({row, static_cast<NodeId>(it.col()), it.value()});
        }
    }
    return out;
}

}  // namespace meshroute
