#pragma once

#include <array>
#include <filesystem>
#include <string>

#include "meshroute/cost_matrix.hpp"
#include "meshroute/topology.hpp"

namespace meshroute {

// Mamdani inference of the integrated link cost (ILC) from a link's
// throughput, delay and jitter. Three triangular terms per input
// (low/medium/high), five output terms (very-low .. very-high), max
// aggregation and a 101-point discrete centroid.
//
// The default operators are product AND with product implication
// (max-product). Max-min inference with the same terms and rules is available
// but is not monotone in its inputs: clipped output terms of neighbouring
// rules shift the centroid the wrong way by up to ~0.013.

inline constexpr int kInputLevels = 3;
inline constexpr int kOutputLevels = 5;
inline constexpr int kRuleCount = kInputLevels * kInputLevels * kInputLevels;
inline constexpr int kCentroidSamples = 101;
inline constexpr double kMinIlc = 1e-6;

struct TriangularMembership {
    double left = 0.0;
    double peak = 0.0;
    double right = 0.0;

    [[nodiscard]] double operator()(double x) const;
};

// Input terms on the normalized axis: low, medium, high.
inline constexpr std::array<TriangularMembership, kInputLevels> kInputTerms{{
    {0.0, 0.0, 0.5},
    {0.0, 0.5, 1.0},
    {0.5, 1.0, 1.0},
}};

// Output terms: very-low, low, medium, high, very-high.
inline constexpr std::array<TriangularMembership, kOutputLevels> kOutputTerms{{
    {0.0, 0.0, 0.25},
    {0.0, 0.25, 0.5},
    {0.25, 0.5, 0.75},
    {0.5, 0.75, 1.0},
    {0.75, 1.0, 1.0},
}};

enum class Inference {
    max_product,  // AND = product, implication = scaling
    max_min,      // AND = min, implication = clipping
};

struct NormalizedInputs {
    double throughput = 0.0;
    double delay = 0.0;
    double jitter = 0.0;
};

/// Affine map of each metric onto [0, 1], clamping values outside the bounds.
/// Throws std::invalid_argument for degenerate bounds.
NormalizedInputs normalize_inputs(const LinkObservation& obs, const MetricBounds& bounds = {});

/// Default consequent: score = (2 - thr) + delay + jitter, output level
/// round(score * 4 / 6) with halves rounded up.
int consequent_of(int throughput_level, int delay_level, int jitter_level);

class RuleBase {
public:
    // The rule base generated by consequent_of.
    static RuleBase standard();

    /// Parses a JSON list of 27 {thr, delay, jitter, out} entries. Levels are
    /// integers (0..2 for inputs, 0..4 for the output) or term names
    /// ("low", "medium", "high"; "very-low" .. "very-high").
    /// Throws std::invalid_argument if the result is incomplete, contradictory
    /// or not monotone.
    static RuleBase from_json(const std::string& text);
    static RuleBase read(const std::filesystem::path& file);

    [[nodiscard]] int consequent(int throughput_level, int delay_level, int jitter_level) const;

    // Throws std::invalid_argument if monotonicity is violated.
    void validate() const;

private:
    static int index(int t, int d, int j) { return (t * kInputLevels + d) * kInputLevels + j; }

    std::array<int, kRuleCount> out_{};
};

/// ILC in [kMinIlc, 1] for normalized inputs. Throws std::invalid_argument
/// when an input lies outside [0, 1].
double evaluate_ilc(const NormalizedInputs& in, const RuleBase& rules = RuleBase::standard(),
                    Inference inference = Inference::max_product);

/// ILC for every observed link; unobserved pairs stay absent.
CostMatrix build_cost_matrix(const NetworkScenario& scenario, const MetricBounds& bounds = {},
                             const RuleBase& rules = RuleBase::standard(),
                             Inference inference = Inference::max_product);

}  // namespace meshroute
