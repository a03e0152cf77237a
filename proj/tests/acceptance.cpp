// Acceptance checks AC-1..AC-10. Prints one PASS/FAIL line per criterion and
// exits nonzero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <fmt/core.h>

#include "meshroute/bbbc.hpp"
#include "meshroute/bbo.hpp"
#include "meshroute/bench.hpp"
#include "meshroute/errors.hpp"
#include "meshroute/fuzzy_cost.hpp"
#include "meshroute/oracle.hpp"
#include "test_support.hpp"

using namespace meshroute;

namespace {

struct Verdict {
    bool pass = false;
    std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

BenchPlan plan_for(std::vector<int> nodes, std::vector<int> generations,
                   std::vector<std::string> algorithms = {"bbbc", "bbo"}) {
    BenchPlan plan = default_plan();
    plan.node_counts = std::move(nodes);
    plan.generation_budgets = std::move(generations);
    plan.algorithms = std::move(algorithms);
    return plan;
}

std::vector<double> errors_of(const std::vector<RunResult>& results, const std::string& algorithm,
                              int generations) {
    std::vector<double> out;
    for (const auto& r : results) {
        if (r.algorithm == algorithm && r.generations() == generations) out.push_back(*r.percent_error);
    }
    return out;
}

std::vector<std::string> lines(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) out.push_back(line);
    return out;
}

std::string strip_wall_time(const std::string& csv) {
    std::string out;
    for (const auto& line : lines(csv)) out += line.substr(0, line.rfind(',')) + "\n";
    return out;
}

Verdict ac1() {
    const auto start = Clock::now();
    const auto results = run_plan(plan_for({25}, {30}), {false, true, 0});
    const double elapsed = seconds_since(start);
    int bbbc_exact = 0, bbo_exact = 0;
    for (const auto& r : results) {
        if (*r.percent_error != 0.0) continue;
        (r.algorithm == "bbbc" ? bbbc_exact : bbo_exact) += 1;
    }
    return {bbbc_exact >= 9 && bbo_exact >= 9 && elapsed < 5.0,
            fmt::format("exact runs bbbc {}/10, bbo {}/10; {:.2f} s", bbbc_exact, bbo_exact, elapsed)};
}

// 100-node runs shared by AC-2 and AC-4.
const std::vector<RunResult>& hundred_node_runs(double* elapsed = nullptr) {
    static double seconds = 0.0;
    static const std::vector<RunResult> results = [] {
        const auto start = Clock::now();
        auto r = run_plan(plan_for({100}, {30, 100}), {false, true, 0});
        seconds = seconds_since(start);
        return r;
    }();
    if (elapsed != nullptr) *elapsed = seconds;
    return results;
}

Verdict ac2() {
    double elapsed = 0.0;
    const auto& results = hundred_node_runs(&elapsed);
    bool pass = elapsed < 120.0;
    std::string detail;
    for (const std::string algorithm : {"bbbc", "bbo"}) {
        const double at30 = lower_median(errors_of(results, algorithm, 30));
        const double at100 = lower_median(errors_of(results, algorithm, 100));
        pass = pass && at100 <= at30 && at100 <= 5.0;
        detail += fmt::format("{} median error {:.3f}% -> {:.3f}%; ", algorithm, at30, at100);
    }
    return {pass, detail + fmt::format("{:.2f} s", elapsed)};
}

Verdict ac3() {
    BenchPlan plan = plan_for({100}, {100});
    plan.seeds.resize(5);
    const auto results = run_plan(plan, {false, true, 0});
    std::vector<double> bbbc, bbo;
    for (const auto& r : results) {
        (r.algorithm == "bbbc" ? bbbc : bbo).push_back(r.wall_time_ms / r.generations());
    }
    const double ratio = lower_median(bbo) / lower_median(bbbc);
    return {ratio >= 2.0, fmt::format("per-generation ms bbbc {:.4f}, bbo {:.4f}; ratio {:.2f}",
                                      lower_median(bbbc), lower_median(bbo), ratio)};
}

Verdict ac4() {
    const auto& results = hundred_node_runs();
    const double bbbc = lower_median(errors_of(results, "bbbc", 100));
    const double bbo = lower_median(errors_of(results, "bbo", 100));
    return {bbbc <= bbo, fmt::format("median error bbbc {:.3f}%, bbo {:.3f}%", bbbc, bbo)};
}

Verdict ac5() {
    const auto start = Clock::now();
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<int> size(2, kBruteForceMaxNodes);
    std::uniform_real_distribution<double> density(0.15, 0.6);
    int disagreements = 0, solvable = 0;
    for (int g = 0; g < 500; ++g) {
        const int n = size(rng);
        const auto cm = meshroute::testing::random_graph(rng, n, density(rng));
        std::optional<Path> fast, slow;
        try {
            fast = shortest_path(cm, 0, n - 1).path;
        } catch (const NoPathError&) {
        }
        try {
            slow = brute_force(cm, 0, n - 1).path;
        } catch (const NoPathError&) {
        }
        if (fast.has_value() != slow.has_value() || (fast && *fast != *slow)) ++disagreements;
        solvable += fast ? 1 : 0;
    }
    const double elapsed = seconds_since(start);
    return {disagreements == 0 && elapsed < 30.0,
            fmt::format("{} disagreements over 500 graphs ({} with a path); {:.2f} s", disagreements,
                        solvable, elapsed)};
}

Verdict ac6() {
    int failed = 0;
    const auto near = [&](double got, double want) {
        if (std::abs(got - want) > 1e-12) ++failed;
    };
    const auto exact = [&](double got, double want) {
        if (got != want) ++failed;
    };

    Eigen::MatrixXd one(2, 1);
    one << 0.2, 0.4;
    const auto c1 = center_of_mass(one, Eigen::VectorXd::Constant(1, 5.0));
    near(c1[0], 0.2);
    near(c1[1], 0.4);

    Eigen::MatrixXd two(2, 2);
    two << 0.0, 1.0, 0.0, 1.0;
    const auto c2 = center_of_mass(two, Eigen::Vector2d(1.0, 1.0));
    near(c2[0], 0.5);
    near(c2[1], 0.5);
    const auto c3 = center_of_mass(two, Eigen::Vector2d(1.0, 3.0));
    near(c3[0], 0.25);
    near(c3[1], 0.25);

    const Eigen::Vector3d center(0.1, 0.5, 0.9);
    const auto same = spawn_from_offsets(center, Eigen::Vector3d::Zero());
    for (int d = 0; d < 3; ++d) exact(same[d], center[d]);
    exact(spawn_from_offsets(Eigen::VectorXd::Constant(1, 0.5),
                             Eigen::VectorXd::Constant(1, 1.0 * 0.5 / 2))[0],
          0.75);
    exact(spawn_from_offsets(Eigen::VectorXd::Constant(1, 0.9),
                             Eigen::VectorXd::Constant(1, 1.0 * 3.0 / 1))[0],
          1.0);
    exact(spawn_from_offsets(Eigen::VectorXd::Constant(1, 0.1),
                             Eigen::VectorXd::Constant(1, -3.0))[0],
          0.0);
    return {failed == 0, fmt::format("{} of 13 checks failed", failed)};
}

Verdict ac7() {
    int failed = 0;
    for (double I : {0.5, 1.0, 2.0})
        for (double E : {0.5, 1.0, 3.0})
            for (int k = 0; k <= 50; ++k) {
                const auto r = migration_rates(k, 50, I, E);
                if (std::abs(r.immigration / I + r.emigration / E - 1.0) > 1e-12) ++failed;
            }

    std::mt19937_64 rng(77);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    double worst_sum = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 2 + trial % 60;
        Eigen::VectorXd p(n), lambda(n), mu(n);
        for (int k = 0; k < n; ++k) {
            p[k] = unit(rng);
            lambda[k] = 2.0 * unit(rng);
            mu[k] = 2.0 * unit(rng);
        }
        p /= p.sum();
        worst_sum = std::max(worst_sum, std::abs(probability_derivative(p, lambda, mu).sum()));
    }
    if (worst_sum > 1e-12) ++failed;

    const auto next = update_probability(Eigen::Vector2d(1.0, 0.0), Eigen::Vector2d(1.0, 0.0),
                                         Eigen::Vector2d(0.0, 1.0));
    if (next != Eigen::Vector2d(0.0, 1.0)) ++failed;
    return {failed == 0,
            fmt::format("{} failures; worst |sum dP| {:.3g}; two-state step -> ({}, {})", failed,
                        worst_sum, next[0], next[1])};
}

Verdict ac8() {
    constexpr int steps = 10;
    std::vector<double> v((steps + 1) * (steps + 1) * (steps + 1));
    const auto at = [&](int a, int b, int c) -> double& {
        return v[static_cast<std::size_t>((a * (steps + 1) + b) * (steps + 1) + c)];
    };
    for (int a = 0; a <= steps; ++a)
        for (int b = 0; b <= steps; ++b)
            for (int c = 0; c <= steps; ++c) {
                at(a, b, c) = evaluate_ilc({a / 10.0, b / 10.0, c / 10.0});
            }
    int violations = 0;
    double asymmetry = 0.0;
    for (int a = 0; a <= steps; ++a)
        for (int b = 0; b <= steps; ++b)
            for (int c = 0; c <= steps; ++c) {
                if (a < steps && at(a + 1, b, c) > at(a, b, c) + 1e-12) ++violations;
                if (b < steps && at(a, b + 1, c) < at(a, b, c) - 1e-12) ++violations;
                if (c < steps && at(a, b, c + 1) < at(a, b, c) - 1e-12) ++violations;
                asymmetry = std::max(asymmetry,
                                     std::abs(at(a, b, c) + at(steps - a, steps - b, steps - c) - 1.0));
            }
    const double medium = evaluate_ilc({0.5, 0.5, 0.5});
    return {violations == 0 && asymmetry <= 0.02 && medium == 0.5,
            fmt::format("{} monotonicity violations; max asymmetry {:.4f}; all-medium {}", violations,
                        asymmetry, medium)};
}

// Default plan (no large cells) run once for AC-9 and again for AC-10.
struct DefaultPlanRuns {
    std::vector<RunResult> first;
    std::filesystem::path dir;
};

Verdict ac9(const DefaultPlanRuns& runs) {
    int traces = 0, violations = 0;
    for (const auto& entry : std::filesystem::directory_iterator(runs.dir)) {
        if (!entry.path().filename().string().starts_with("trace_")) continue;
        ++traces;
        const auto rows = lines(meshroute::testing::slurp(entry.path()));
        double previous = INFINITY;
        for (std::size_t i = 1; i < rows.size(); ++i) {
            const auto first = rows[i].find(',');
            const auto second = rows[i].find(',', first + 1);
            const double best = std::stod(rows[i].substr(first + 1, second - first - 1));
            if (best > previous) ++violations;
            previous = best;
        }
    }
    const bool all_traced = traces == static_cast<int>(runs.first.size());
    return {violations == 0 && all_traced,
            fmt::format("{} traces for {} runs; {} increases", traces, runs.first.size(), violations)};
}

Verdict ac10(const DefaultPlanRuns& runs) {
    const auto again = run_plan(default_plan());
    const bool same = strip_wall_time(results_csv(runs.first)) == strip_wall_time(results_csv(again));
    return {same, fmt::format("{} runs rerun; results.csv {} modulo wall time", again.size(),
                              same ? "identical" : "differs")};
}

}  // namespace

int main() {
    int failures = 0;
    const auto report = [&](const char* id, const char* title, const std::function<Verdict()>& check) {
        Verdict v;
        try {
            v = check();
        } catch (const std::exception& e) {
            v = {false, std::string("exception: ") + e.what()};
        }
        failures += v.pass ? 0 : 1;
        fmt::print("{} {}: {} ({})\n", id, v.pass ? "PASS" : "FAIL", title, v.detail);
        std::fflush(stdout);
    };

    report("AC-1", "25-node grids solved exactly within 30 generations", ac1);
    report("AC-2", "100-node error shrinks with generations and ends at most 5%", ac2);
    report("AC-3", "BBO per-generation time at least twice BB-BC at 100 nodes", ac3);
    report("AC-4", "BB-BC median error no worse than BBO at 100 nodes, 100 generations", ac4);
    report("AC-5", "Dijkstra agrees with brute force on 500 small graphs", ac5);
    report("AC-6", "center of mass and spawn examples", ac6);
    report("AC-7", "migration rates and species-count dynamics", ac7);
    report("AC-8", "fuzzy cost monotone, symmetric, all-medium 0.5", ac8);

    meshroute::testing::TempDir dir("acceptance");
    DefaultPlanRuns runs;
    runs.dir = dir.path() / "bench";
    try {
        runs.first = run_plan(default_plan());
        write_bench_outputs(runs.first, runs.dir);
    } catch (const std::exception& e) {
        fmt::print("default plan failed: {}\n", e.what());
    }
    report("AC-9", "every benchmark trace has non-increasing best-so-far", [&] { return ac9(runs); });
    report("AC-10", "plan reruns give identical results modulo wall time", [&] { return ac10(runs); });

    fmt::print("{} of 10 criteria passed\n", 10 - failures);
    return failures == 0 ? 0 : 1;
}
