#pragma once

#include <cstdint>
#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include <Eigen/Core>

namespace meshroute {

using NodeId = int;
using Rng = std::mt19937_64;

struct NodeSite {
    NodeId id = 0;
    double x = 0.0;  // meters
    double y = 0.0;  // meters

    friend bool operator==(const NodeSite&, const NodeSite&) = default;
};

// Raw measurements on one directed link.
struct LinkObservation {
    NodeId from = 0;
    NodeId to = 0;
    double throughput = 0.0;  // Mbps
    double delay = 0.0;       // ms
    double jitter = 0.0;      // ms

    friend bool operator==(const LinkObservation&, const LinkObservation&) = default;
};

struct NetworkScenario {
    std::uint64_t seed = 0;
    double area_side = 0.0;    // meters
    double radio_range = 0.0;  // meters
    std::vector<NodeSite> nodes;
    std::vector<LinkObservation> links;  // sorted by (from, to)

    [[nodiscard]] int node_count() const { return static_cast<int>(nodes.size()); }

    friend bool operator==(const NetworkScenario&, const NetworkScenario&) = default;
};

enum class Placement { grid, uniform_random };

Placement parse_placement(const std::string& name);
std::string to_string(Placement placement);

// Lattice spacing for grid placement and the reference node density
// (25 nodes per 1500 m square) used to size random-placement areas.
inline constexpr double kGridSpacing = 200.0;
inline constexpr double kReferenceSide = 1500.0;
inline constexpr int kReferenceNodes = 25;
inline constexpr double kDefaultRadioRange = 250.0;
inline constexpr int kMaxPlacementAttempts = 1000;

struct MetricBounds {
    double throughput_min = 0.2;
    double throughput_max = 2.0;
    double delay_min = 1.0;
    double delay_max = 100.0;
    double jitter_min = 0.0;
    double jitter_max = 20.0;
};

struct LinkMetrics {
    double throughput = 0.0;
    double delay = 0.0;
    double jitter = 0.0;
};

/// Draws one (throughput, delay, jitter) triple from the synthesis ranges.
/// Consumes exactly three uniform draws, in that order.
LinkMetrics synthesize_metrics(Rng& rng, const MetricBounds& bounds = {});

/// Builds a scenario from its arguments alone: equal arguments give
/// bit-identical scenarios.
///
/// Grid placement lays nodes on a sqrt(n) x sqrt(n) lattice (200 m spacing,
/// row-major ids). Uniform-random placement scatters nodes over a square
/// sized for the reference density and redraws the whole layout until node 0
/// reaches node n-1, giving up after kMaxPlacementAttempts.
NetworkScenario generate_scenario(int n, Placement placement, std::uint64_t seed,
                                  double radio_range = kDefaultRadioRange);

// Entry (i, j) is true iff i != j and the nodes are within radio range.
Eigen::Matrix<bool, Eigen::Dynamic, Eigen::Dynamic> connectivity_matrix(
    const NetworkScenario& scenario);

bool within_range(const NodeSite& a, const NodeSite& b, double radio_range);

// Throws std::invalid_argument describing the first violated invariant.
void validate(const NetworkScenario& scenario);

std::string to_json(const NetworkScenario& scenario);
NetworkScenario scenario_from_json(const std::string& text);

void write_scenario(const NetworkScenario& scenario, const std::filesystem::path& file);
NetworkScenario read_scenario(const std::filesystem::path& file);

}  // namespace meshroute
