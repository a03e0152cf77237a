#include "meshroute/oracle.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <stdexcept>
#include <utility>

#include "meshroute/errors.hpp"

namespace meshroute {

namespace {

void check_endpoints(const CostMatrix& cm, NodeId source, NodeId terminal) {
    if (source < 0 || terminal < 0 || source >= cm.size() || terminal >= cm.size()) {
        throw std::invalid_argument("source or terminal out of range");
    }
    if (source == terminal) throw std::invalid_argument("source and terminal must differ");
}

NoPathError unreachable(NodeId source, NodeId terminal) {
    return NoPathError("node " + std::to_string(terminal) + " unreachable from node " +
                       std::to_string(source));
}

// (cost, sequence) ordering shared by both oracles.
bool better(double cost, const std::vector<NodeId>& seq, double best_cost,
            const std::vector<NodeId>& best_seq) {
    if (cost != best_cost) return cost < best_cost;
    return std::lexicographical_compare(seq.begin(), seq.end(), best_seq.begin(), best_seq.end());
}

}  // namespace

OracleResult shortest_path(const CostMatrix& cm, NodeId source, NodeId terminal) {
    check_endpoints(cm, source, terminal);
    const auto n = static_cast<std::size_t>(cm.size());
    constexpr double inf = std::numeric_limits<double>::infinity();

    std::vector<double> dist(n, inf);
    std::vector<std::vector<NodeId>> route(n);  // tentative best sequence to each node
    std::vector<bool> settled(n, false);

    using Entry = std::pair<double, NodeId>;
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> queue;
    dist[source] = 0.0;
    route[source] = {source};
    queue.emplace(0.0, source);

    while (!queue.empty()) {
        const auto [d, u] = queue.top();
        queue.pop();
        if (settled[u] || d != dist[u]) continue;
        settled[u] = true;
        if (u == terminal) break;
        const auto nbrs = cm.neighbors(u);
        const auto costs = cm.neighbor_costs(u);
        for (std::size_t k = 0; k < nbrs.size(); ++k) {
            const NodeId v = nbrs[k];
            if (settled[v]) continue;
            const double candidate = d + costs[k];
            if (candidate > dist[v]) continue;
            std::vector<NodeId> seq = route[u];
            seq.push_back(v);
            if (better(candidate, seq, dist[v], route[v]) || route[v].empty()) {
                const bool improved = candidate < dist[v];
                dist[v] = candidate;
                route[v] = std::move(seq);
                if (improved) queue.emplace(candidate, v);
            }
        }
    }
    if (!settled[terminal]) throw unreachable(source, terminal);
    return {Path{route[terminal], dist[terminal]}};
}

OracleResult brute_force(const CostMatrix& cm, NodeId source, NodeId terminal) {
    check_endpoints(cm, source, terminal);
    if (cm.size() > kBruteForceMaxNodes) {
        throw std::invalid_argument("brute force limited to " +
                                    std::to_string(kBruteForceMaxNodes) + " nodes");
    }
    std::vector<bool> on_path(static_cast<std::size_t>(cm.size()), false);
    std::vector<NodeId> seq{source};
    on_path[source] = true;
    double best_cost = std::numeric_limits<double>::infinity();
    std::vector<NodeId> best_seq;

    // Costs accumulate source-outward, matching shortest_path's summation order.
    const auto extend = [&](auto&& self, double cost) -> void {
        const NodeId u = seq.back();
        if (u == terminal) {
            if (best_seq.empty() || better(cost, seq, best_cost, best_seq)) {
                best_cost = cost;
                best_seq = seq;
            }
            return;
        }
        const auto nbrs = cm.neighbors(u);
        const auto costs = cm.neighbor_costs(u);
        for (std::size_t k = 0; k < nbrs.size(); ++k) {
            const NodeId v = nbrs[k];
            if (on_path[v]) continue;
            on_path[v] = true;
            seq.push_back(v);
            self(self, cost + costs[k]);
            seq.pop_back();
            on_path[v] = false;
        }
    };
    extend(extend, 0.0);

    if (best_seq.empty()) throw unreachable(source, terminal);
    return {Path{best_seq, best_cost}};
}

double percent_error(double found_cost, double optimal_cost) {
    if (!(optimal_cost > 0.0)) throw std::invalid_argument("optimal cost must be positive");
    if (found_cost < optimal_cost - 1e-12) {
        throw std::logic_error("found cost below the optimum: optimizer or oracle bug");
    }
    return 100.0 * (found_cost - optimal_cost) / optimal_cost;
}

}  // namespace meshroute
