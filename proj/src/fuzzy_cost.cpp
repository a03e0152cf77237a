#include "meshroute/fuzzy_cost.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

#include <json.hpp>

#include "meshroute/errors.hpp"

namespace meshroute {

namespace {

using nlohmann::json;

double normalize(double value, double lo, double hi, const char* name) {
    if (!(hi > lo)) throw std::invalid_argument(std::string("degenerate bounds for ") + name);
    return std::clamp((value - lo) / (hi - lo), 0.0, 1.0);
}

int parse_level(const json& value, int levels) {
    static const std::array<const char*, kInputLevels> kInputNames{"low", "medium", "high"};
    static const std::array<const char*, kOutputLevels> kOutputNames{"very-low", "low", "medium",
                                                                     "high", "very-high"};
    int level = -1;
    if (value.is_number_integer()) {
        level = value.get<int>();
    } else if (value.is_string()) {
        const auto name = value.get<std::string>();
        if (levels == kInputLevels) {
            const auto it = std::find(kInputNames.begin(), kInputNames.end(), name);
            if (it != kInputNames.end()) level = static_cast<int>(it - kInputNames.begin());
        } else {
            const auto it = std::find(kOutputNames.begin(), kOutputNames.end(), name);
            if (it != kOutputNames.end()) level = static_cast<int>(it - kOutputNames.begin());
        }
    }
    if (level < 0 || level >= levels) {
        throw std::invalid_argument("rule level out of range: " + value.dump());
    }
    return level;
}

// Output terms rescaled to sample units so that sample i sits at abscissa i.
// Every breakpoint is a multiple of 0.25 and lands exactly on a sample.
std::array<TriangularMembership, kOutputLevels> output_terms_in_samples() {
    constexpr double scale = kCentroidSamples - 1;
    std::array<TriangularMembership, kOutputLevels> terms{};
    for (int c = 0; c < kOutputLevels; ++c) {
        terms[c] = {kOutputTerms[c].left * scale, kOutputTerms[c].peak * scale,
                    kOutputTerms[c].right * scale};
    }
    return terms;
}

}  // namespace

double TriangularMembership::operator()(double x) const {
    if (x < left || x > right) return 0.0;
    if (x == peak) return 1.0;
    if (x < peak) return (x - left) / (peak - left);
    return (right - x) / (right - peak);
}

NormalizedInputs normalize_inputs(const LinkObservation& obs, const MetricBounds& b) {
    return {normalize(obs.throughput, b.throughput_min, b.throughput_max, "throughput"),
            normalize(obs.delay, b.delay_min, b.delay_max, "delay"),
            normalize(obs.jitter, b.jitter_min, b.jitter_max, "jitter")};
}

int consequent_of(int throughput_level, int delay_level, int jitter_level) {
    const int score = (kInputLevels - 1 - throughput_level) + delay_level + jitter_level;
    // round(score * 4 / 6) with round-half-up, in integers: floor((4s + 3) / 6)
    return (4 * score + 3) / 6;
}

RuleBase RuleBase::standard() {
    static const RuleBase base = [] {
        RuleBase r;
        for (int t = 0; t < kInputLevels; ++t)
            for (int d = 0; d < kInputLevels; ++d)
                for (int j = 0; j < kInputLevels; ++j) r.out_[index(t, d, j)] = consequent_of(t, d, j);
        return r;
    }();
    return base;
}

RuleBase RuleBase::from_json(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("rule base is not valid JSON: ") + e.what());
    }
    if (!doc.is_array() || doc.size() != kRuleCount) {
        throw std::invalid_argument("rule base must be a list of exactly 27 rules");
    }
    RuleBase r;
    std::array<bool, kRuleCount> seen{};
    for (const auto& rule : doc) {
        if (!rule.is_object()) throw std::invalid_argument("rule must be an object");
        const int t = parse_level(rule.at("thr"), kInputLevels);
        const int d = parse_level(rule.at("delay"), kInputLevels);
        const int j = parse_level(rule.at("jitter"), kInputLevels);
        const int out = parse_level(rule.at("out"), kOutputLevels);
        const int i = index(t, d, j);
        if (seen[i]) throw std::invalid_argument("more than one rule for the same input triple");
        seen[i] = true;
        r.out_[i] = out;
    }
    r.validate();
    return r;
}

RuleBase RuleBase::read(const std::filesystem::path& file) {
    std::ifstream in(file, std::ios::binary);
    if (!in) throw IoError("cannot open '" + file.string() + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return from_json(buffer.str());
}

int RuleBase::consequent(int throughput_level, int delay_level, int jitter_level) const {
    return out_[index(throughput_level, delay_level, jitter_level)];
}

void RuleBase::validate() const {
    for (int t = 0; t < kInputLevels; ++t) {
        for (int d = 0; d < kInputLevels; ++d) {
            for (int j = 0; j < kInputLevels; ++j) {
                const int c = consequent(t, d, j);
                if (c < 0 || c >= kOutputLevels) throw std::invalid_argument("consequent out of range");
                if (t + 1 < kInputLevels && consequent(t + 1, d, j) > c) {
                    throw std::invalid_argument("cost must not rise with throughput");
                }
                if (d + 1 < kInputLevels && consequent(t, d + 1, j) < c) {
                    throw std::invalid_argument("cost must not fall with delay");
                }
                if (j + 1 < kInputLevels && consequent(t, d, j + 1) < c) {
                    throw std::invalid_argument("cost must not fall with jitter");
                }
            }
        }
    }
}

double evaluate_ilc(const NormalizedInputs& in, const RuleBase& rules, Inference inference) {
    for (double x : {in.throughput, in.delay, in.jitter}) {
        if (!(x >= 0.0 && x <= 1.0)) throw std::invalid_argument("normalized input outside [0, 1]");
    }

    std::array<double, kInputLevels> mu_t{}, mu_d{}, mu_j{};
    for (int level = 0; level < kInputLevels; ++level) {
        mu_t[level] = kInputTerms[level](in.throughput);
        mu_d[level] = kInputTerms[level](in.delay);
        mu_j[level] = kInputTerms[level](in.jitter);
    }

    // Under max aggregation only the strongest rule per consequent matters,
    // so each output term is activated at the max firing strength behind it.
    const bool product = inference == Inference::max_product;
    std::array<double, kOutputLevels> activation{};
    for (int t = 0; t < kInputLevels; ++t) {
        for (int d = 0; d < kInputLevels; ++d) {
            for (int j = 0; j < kInputLevels; ++j) {
                const double strength =
                    product ? mu_t[t] * mu_d[d] * mu_j[j] : std::min({mu_t[t], mu_d[d], mu_j[j]});
                double& a = activation[rules.consequent(t, d, j)];
                a = std::max(a, strength);
            }
        }
    }

    static const auto terms = output_terms_in_samples();
    std::array<double, kCentroidSamples> mu{};
    for (int i = 0; i < kCentroidSamples; ++i) {
        double m = 0.0;
        for (int c = 0; c < kOutputLevels; ++c) {
            if (activation[c] <= 0.0) continue;
            const double implied = product ? activation[c] * terms[c](i)
                                           : std::min(activation[c], terms[c](i));
            m = std::max(m, implied);
        }
        mu[i] = m;
    }

    // Centroid taken about the midpoint, pairing mirrored samples so a
    // symmetric aggregate lands exactly on 0.5.
    constexpr int mid = (kCentroidSamples - 1) / 2;
    double area = mu[mid];
    double moment = 0.0;
    for (int k = 1; k <= mid; ++k) {
        area += mu[mid + k] + mu[mid - k];
        moment += k * (mu[mid + k] - mu[mid - k]);
    }
    if (!(area > 0.0)) return kMinIlc;
    const double centroid = 0.5 + moment / (area * (kCentroidSamples - 1));
    return std::clamp(centroid, kMinIlc, 1.0);
}

CostMatrix build_cost_matrix(const NetworkScenario& scenario, const MetricBounds& bounds,
                             const RuleBase& rules, Inference inference) {
    std::vector<WeightedEdge> edges;
    edges.reserve(scenario.links.size());
    for (const auto& link : scenario.links) {
        edges.push_back({link.from, link.to, evaluate_ilc(normalize_inputs(link, bounds), rules, inference)});
    }
    return CostMatrix(scenario.node_count(), edges);
}

}  // namespace meshroute
