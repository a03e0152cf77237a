#include "meshroute/path_codec.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <json.hpp>

#include "meshroute/errors.hpp"

namespace meshroute {

namespace detail {

Path decode_keys(std::span<const double> keys, const CostMatrix& cm, NodeId source,
                 NodeId terminal) {
    const int n = cm.size();
    if (static_cast<int>(keys.size()) != n) {
        throw std::invalid_argument("priority vector length " + std::to_string(keys.size()) +
                                    " does not match node count " + std::to_string(n));
    }
    if (source < 0 || terminal < 0 || source >= n || terminal >= n) {
        throw std::invalid_argument("source or terminal out of range");
    }
    if (source == terminal) throw std::invalid_argument("source and terminal must differ");

    struct Frame {
        NodeId node;
        std::size_t begin;  // into `order`
        std::size_t end;
        std::size_t next;
    };
    std::vector<bool> visited(static_cast<std::size_t>(n), false);
    std::vector<NodeId> order;  // candidate lists of all open frames, stacked
    std::vector<Frame> stack;

    const auto push = [&](NodeId node) {
        visited[node] = true;
        const auto nbrs = cm.neighbors(node);
        const std::size_t begin = order.size();
        order.insert(order.end(), nbrs.begin(), nbrs.end());
        std::stable_sort(order.begin() + static_cast<std::ptrdiff_t>(begin), order.end(),
                         [&](NodeId a, NodeId b) { return keys[a] > keys[b]; });
        stack.push_back({node, begin, order.size(), begin});
    };

    push(source);
    while (!stack.empty()) {
        Frame& top = stack.back();
        if (top.node == terminal) break;
        while (top.next < top.end && visited[order[top.next]]) ++top.next;
        if (top.next == top.end) {
            order.resize(top.begin);
            stack.pop_back();
            continue;
        }
        push(order[top.next++]);
    }
    if (stack.empty()) {
        throw NoPathError("node " + std::to_string(terminal) + " unreachable from node " +
                          std::to_string(source));
    }

    Path path;
    path.nodes.reserve(stack.size());
    for (const auto& frame : stack) path.nodes.push_back(frame.node);
    path.cost = path_cost(path.nodes, cm);
    return path;
}

}  // namespace detail

double path_cost(std::span<const NodeId> nodes, const CostMatrix& cm) {
    double total = 0.0;
    for (std::size_t i = 1; i < nodes.size(); ++i) {
        const auto c = cm.at(nodes[i - 1], nodes[i]);
        if (!c) {
            throw BrokenPathError("no link " + std::to_string(nodes[i - 1]) + "->" +
                                  std::to_string(nodes[i]));
        }
        total += *c;
    }
    return total;
}

PriorityVector random_vector(Rng& rng, int n) {
    if (n < 2) throw std::invalid_argument("priority vector needs at least 2 keys");
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    PriorityVector keys(n);
    for (int i = 0; i < n; ++i) keys[i] = unit(rng);
    return keys;
}

bool is_valid_path(const Path& path, const CostMatrix& cm, NodeId source, NodeId terminal) {
    if (path.nodes.size() < 2) return false;
    if (path.nodes.front() != source || path.nodes.back() != terminal) return false;
    std::vector<bool> seen(static_cast<std::size_t>(cm.size()), false);
    for (NodeId v : path.nodes) {
        if (v < 0 || v >= cm.size() || seen[v]) return false;
        seen[v] = true;
    }
    double total = 0.0;
    for (std::size_t i = 1; i < path.nodes.size(); ++i) {
        const auto c = cm.at(path.nodes[i - 1], path.nodes[i]);
        if (!c) return false;
        total += *c;
    }
    return total > 0.0 && std::abs(total - path.cost) <= 1e-12;
}

std::string to_json(const Path& path) {
    const nlohmann::json doc = {{"nodes", path.nodes}, {"cost", path.cost}};
    return doc.dump();
}

Path path_from_json(const std::string& text) {
    try {
        const auto doc = nlohmann::json::parse(text);
        Path p;
        p.nodes = doc.at("nodes").get<std::vector<NodeId>>();
        p.cost = doc.at("cost").get<double>();
        return p;
    } catch (const nlohmann::json::exception& e) {
        throw IoError(std::string("malformed path: ") + e.what());
    }
}

}  // namespace meshroute
