#include "meshroute/topology.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>
#include <utility>

#include <json.hpp>

#include "meshroute/errors.hpp"

namespace meshroute {

namespace {

using nlohmann::json;

constexpr int kScenarioVersion = 1;

int perfect_square_root(int n) {
    const int side = static_cast<int>(std::lround(std::sqrt(static_cast<double>(n))));
    return side * side == n ? side : -1;
}

std::vector<LinkObservation> radio_links(const std::vector<NodeSite>& nodes, double radio_range) {
    std::vector<LinkObservation> links;
    for (const auto& a : nodes) {
        for (const auto& b : nodes) {
            if (a.id != b.id && within_range(a, b, radio_range)) {
                links.push_back({a.id, b.id, 0.0, 0.0, 0.0});
            }
        }
    }
    return links;  // already (from, to) ordered since ids are dense and sorted
}

bool connected(const std::vector<NodeSite>& nodes, double radio_range, NodeId source,
               NodeId terminal) {
    const auto n = nodes.size();
    std::vector<bool> seen(n, false);
    std::queue<NodeId> frontier;
    frontier.push(source);
    seen[source] = true;
    while (!frontier.empty()) {
        const NodeId u = frontier.front();
        frontier.pop();
        if (u == terminal) return true;
        for (std::size_t v = 0; v < n; ++v) {
            if (!seen[v] && within_range(nodes[u], nodes[v], radio_range)) {
                seen[v] = true;
                frontier.push(static_cast<NodeId>(v));
            }
        }
    }
    return false;
}

}  // namespace

Placement parse_placement(const std::string& name) {
    if (name == "grid") return Placement::grid;
    if (name == "random" || name == "uniform-random") return Placement::uniform_random;
    throw std::invalid_argument("unknown placement '" + name + "' (expected grid|random)");
}

std::string to_string(Placement placement) {
    return placement == Placement::grid ? "grid" : "random";
}

bool within_range(const NodeSite& a, const NodeSite& b, double radio_range) {
    const double dx = a.x - b.x;
    const double dy = a.y - b.y;
    return dx * dx + dy * dy <= radio_range * radio_range;
}

LinkMetrics synthesize_metrics(Rng& rng, const MetricBounds& bounds) {
    std::uniform_real_distribution<double> throughput(bounds.throughput_min, bounds.throughput_max);
    std::uniform_real_distribution<double> delay(bounds.delay_min, bounds.delay_max);
    std::uniform_real_distribution<double> jitter(bounds.jitter_min, bounds.jitter_max);
    LinkMetrics m;
    m.throughput = throughput(rng);
    m.delay = delay(rng);
    m.jitter = jitter(rng);
    return m;
}

NetworkScenario generate_scenario(int n, Placement placement, std::uint64_t seed,
                                  double radio_range) {
    if (n < 2) throw std::invalid_argument("node count must be at least 2");
    if (!(radio_range > 0.0)) throw std::invalid_argument("radio range must be positive");

    Rng rng(seed);
    NetworkScenario s;
    s.seed = seed;
    s.radio_range = radio_range;
    s.area_side = kReferenceSide * std::sqrt(static_cast<double>(n) / kReferenceNodes);

    if (placement == Placement::grid) {
        const int side = perfect_square_root(n);
        if (side < 0) {
            throw std::invalid_argument(std::to_string(n) +
                                        " is not a perfect square (grid placement)");
        }
        s.area_side = std::max(s.area_side, kGridSpacing * (side - 1));
        s.nodes.reserve(n);
        for (int id = 0; id < n; ++id) {
            s.nodes.push_back({id, kGridSpacing * (id % side), kGridSpacing * (id / side)});
        }
    } else {
        std::uniform_real_distribution<double> coord(0.0, s.area_side);
        bool ok = false;
        for (int attempt = 0; attempt < kMaxPlacementAttempts && !ok; ++attempt) {
            s.nodes.clear();
            for (int id = 0; id < n; ++id) {
                const double x = coord(rng);
                const double y = coord(rng);
                s.nodes.push_back({id, x, y});
            }
            ok = connected(s.nodes, radio_range, 0, n - 1);
        }
        if (!ok) {
            throw ConnectivityError("node 0 and node " + std::to_string(n - 1) +
                                    " not connected after " +
                                    std::to_string(kMaxPlacementAttempts) + " placements");
        }
    }

    s.links = radio_links(s.nodes, radio_range);
    for (auto& link : s.links) {
        const LinkMetrics m = synthesize_metrics(rng);
        link.throughput = m.throughput;
        link.delay = m.delay;
        link.jitter = m.jitter;
    }
    return s;
}

Eigen::Matrix<bool, Eigen::Dynamic, Eigen::Dynamic> connectivity_matrix(
    const NetworkScenario& scenario) {
    const int n = scenario.node_count();
    Eigen::Matrix<bool, Eigen::Dynamic, Eigen::Dynamic> adj =
        Eigen::Matrix<bool, Eigen::Dynamic, Eigen::Dynamic>::Constant(n, n, false);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            adj(i, j) = i != j && within_range(scenario.nodes[i], scenario.nodes[j],
                                               scenario.radio_range);
        }
    }
    return adj;
}

void validate(const NetworkScenario& s) {
    const int n = s.node_count();
    if (n < 2) throw std::invalid_argument("scenario needs at least 2 nodes");
    if (!(s.radio_range > 0.0)) throw std::invalid_argument("radio range must be positive");
    for (int i = 0; i < n; ++i) {
        const auto& node = s.nodes[i];
        if (node.id != i) throw std::invalid_argument("node ids must be dense and ordered");
        if (node.x < 0.0 || node.y < 0.0 || node.x > s.area_side || node.y > s.area_side) {
            throw std::invalid_argument("node " + std::to_string(i) + " lies outside the area");
        }
    }
    std::set<std::pair<NodeId, NodeId>> seen;
    std::pair<NodeId, NodeId> previous{-1, -1};
    for (const auto& l : s.links) {
        const std::pair<NodeId, NodeId> key{l.from, l.to};
        if (l.from < 0 || l.to < 0 || l.from >= n || l.to >= n) {
            throw std::invalid_argument("link endpoint out of range");
        }
        if (l.from == l.to) throw std::invalid_argument("self link");
        if (!seen.insert(key).second) throw std::invalid_argument("duplicate link");
        if (key < previous) throw std::invalid_argument("links must be sorted by (from, to)");
        previous = key;
        if (!within_range(s.nodes[l.from], s.nodes[l.to], s.radio_range)) {
            throw std::invalid_argument("link beyond radio range");
        }
        if (!(l.throughput > 0.0) || l.delay < 0.0 || l.jitter < 0.0) {
            throw std::invalid_argument("link metrics out of domain");
        }
    }
    // Completeness: every in-range ordered pair must carry an observation.
    std::size_t expected = 0;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i != j && within_range(s.nodes[i], s.nodes[j], s.radio_range)) ++expected;
        }
    }
    if (expected != s.links.size()) {
        throw std::invalid_argument("link set does not match radio-range connectivity");
    }
}

std::string to_json(const NetworkScenario& s) {
    json nodes = json::array();
    for (const auto& node : s.nodes) {
        nodes.push_back({{"id", node.id}, {"x_m", node.x}, {"y_m", node.y}});
    }
    json links = json::array();
    for (const auto& l : s.links) {
        links.push_back({{"from", l.from},
                         {"to", l.to},
                         {"throughput_mbps", l.throughput},
                         {"delay_ms", l.delay},
                         {"jitter_ms", l.jitter}});
    }
    json doc = {{"version", kScenarioVersion},
                {"seed", s.seed},
                {"area_side_m", s.area_side},
                {"radio_range_m", s.radio_range},
                {"nodes", std::move(nodes)},
                {"links", std::move(links)}};
    return doc.dump(2) + "\n";
}

NetworkScenario scenario_from_json(const std::string& text) {
    NetworkScenario s;
    try {
        const json doc = json::parse(text);
        if (doc.at("version").get<int>() != kScenarioVersion) {
            throw IoError("unsupported scenario version");
        }
        s.seed = doc.at("seed").get<std::uint64_t>();
        s.area_side = doc.at("area_side_m").get<double>();
        s.radio_range = doc.at("radio_range_m").get<double>();
        for (const auto& node : doc.at("nodes")) {
            s.nodes.push_back({node.at("id").get<NodeId>(), node.at("x_m").get<double>(),
                               node.at("y_m").get<double>()});
        }
        for (const auto& l : doc.at("links")) {
            s.links.push_back({l.at("from").get<NodeId>(), l.at("to").get<NodeId>(),
                               l.at("throughput_mbps").get<double>(),
                               l.at("delay_ms").get<double>(), l.at("jitter_ms").get<double>()});
        }
    } catch (const json::exception& e) {
        throw IoError(std::string("malformed scenario: ") + e.what());
    }
    std::sort(s.links.begin(), s.links.end(), [](const auto& a, const auto& b) {
        return std::pair(a.from, a.to) < std::pair(b.from, b.to);
    });
    try {
        validate(s);
    } catch (const std::invalid_argument& e) {
        throw IoError(std::string("invalid scenario: ") + e.what());
    }
    return s;
}

void write_scenario(const NetworkScenario& scenario, const std::filesystem::path& file) {
    std::ofstream out(file, std::ios::binary);
    if (!out) throw IoError("cannot open '" + file.string() + "' for writing");
    out << to_json(scenario);
    if (!out) throw IoError("failed writing '" + file.string() + "'");
}

NetworkScenario read_scenario(const std::filesystem::path& file) {
    std::ifstream in(file, std::ios::binary);
    if (!in) throw IoError("cannot open '" + file.string() + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return scenario_from_json(buffer.str());
}

}  // namespace meshroute
