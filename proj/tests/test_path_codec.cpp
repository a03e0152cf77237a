#include <functional>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "meshroute/errors.hpp"
#include "meshroute/path_codec.hpp"
#include "test_support.hpp"

using namespace meshroute;
using meshroute::testing::make_matrix;
using meshroute::testing::random_graph;

namespace {

PriorityVector keys(std::initializer_list<double> values) {
    PriorityVector v(static_cast<Eigen::Index>(values.size()));
    Eigen::Index i = 0;
    for (double x : values) v[i++] = x;
    return v;
}

std::vector<std::vector<NodeId>> all_simple_paths(const CostMatrix& cm, NodeId source,
                                                  NodeId terminal) {
    std::vector<std::vector<NodeId>> out;
    std::vector<NodeId> stack{source};
    std::vector<bool> on(static_cast<std::size_t>(cm.size()), false);
    on[source] = true;
    std::function<void(NodeId)> walk = [&](NodeId at) {
        if (at == terminal) {
            out.push_back(stack);
            return;
        }
        for (NodeId next : cm.neighbors(at)) {
            if (on[next]) continue;
            on[next] = true;
            stack.push_back(next);
            walk(next);
            stack.pop_back();
            on[next] = false;
        }
    };
    walk(source);
    return out;
}

}  // namespace

TEST(CostMatrixType, Lookup) {
    const auto cm = make_matrix(3, {{0, 1, 0.25}, {1, 2, 0.5}, {0, 2, 0.9}});
    EXPECT_EQ(cm.size(), 3);
    EXPECT_EQ(cm.defined_count(), 3);
    EXPECT_EQ(cm.at(0, 1), 0.25);
    EXPECT_FALSE(cm.at(1, 0).has_value());
    EXPECT_FALSE(cm.defined(2, 0));
    ASSERT_EQ(cm.neighbors(0).size(), 2u);
    EXPECT_EQ(cm.neighbors(0)[0], 1);
    EXPECT_EQ(cm.neighbors(0)[1], 2);
    EXPECT_EQ(cm.neighbor_costs(0)[1], 0.9);
    EXPECT_TRUE(cm.neighbors(2).empty());
}

TEST(CostMatrixType, RejectsBadEdges) {
    EXPECT_THROW(make_matrix(2, {{0, 0, 1.0}}), std::invalid_argument);
    EXPECT_THROW(make_matrix(2, {{0, 2, 1.0}}), std::invalid_argument);
    EXPECT_THROW(make_matrix(2, {{0, 1, 0.0}}), std::invalid_argument);
    EXPECT_THROW(make_matrix(2, {{0, 1, 1.0}, {0, 1, 2.0}}), std::invalid_argument);
}

TEST(Decode, LineGraphAnyKeys) {
    const auto cm = make_matrix(3, {{0, 1, 0.1}, {1, 0, 0.1}, {1, 2, 0.2}, {2, 1, 0.2}});
    std::mt19937_64 rng(1);
    for (int i = 0; i < 20; ++i) {
        const auto p = decode(random_vector(rng, 3), cm, 0, 2);
        EXPECT_EQ(p.nodes, (std::vector<NodeId>{0, 1, 2}));
        EXPECT_DOUBLE_EQ(p.cost, 0.3);
    }
}

TEST(Decode, HigherKeyExploredFirst) {
    const auto cm = make_matrix(4, {{0, 1, 1.0}, {0, 2, 1.0}, {1, 3, 1.0}, {2, 3, 1.0}});
    EXPECT_EQ(decode(keys({0.5, 0.9, 0.1, 0.5}), cm, 0, 3).nodes, (std::vector<NodeId>{0, 1, 3}));
    EXPECT_EQ(decode(keys({0.5, 0.1, 0.9, 0.5}), cm, 0, 3).nodes, (std::vector<NodeId>{0, 2, 3}));
}

TEST(Decode, TiesGoToLowerId) {
    const auto cm = make_matrix(4, {{0, 1, 1.0}, {0, 2, 1.0}, {1, 3, 1.0}, {2, 3, 1.0}});
    EXPECT_EQ(decode(keys({0.0, 0.4, 0.4, 0.0}), cm, 0, 3).nodes, (std::vector<NodeId>{0, 1, 3}));
}

TEST(Decode, BacktracksFromDeadEnd) {
    // node 1 has no way forward; the DFS must fall back to node 2
    const auto cm = make_matrix(4, {{0, 1, 1.0}, {0, 2, 1.0}, {2, 3, 1.0}});
    EXPECT_EQ(decode(keys({0.5, 0.9, 0.1, 0.5}), cm, 0, 3).nodes, (std::vector<NodeId>{0, 2, 3}));
}

TEST(Decode, DeepBacktrackKeepsVisitedMarks) {
    // 0 -> 1 -> 2 -> 1 loops back; 1 -> 4 is the only way to the terminal
    const auto cm = make_matrix(5, {{0, 1, 1.0}, {1, 2, 1.0}, {2, 3, 1.0}, {3, 1, 1.0}, {1, 4, 1.0}});
    EXPECT_EQ(decode(keys({0.0, 0.0, 0.9, 0.9, 0.1}), cm, 0, 4).nodes,
              (std::vector<NodeId>{0, 1, 4}));
}

TEST(Decode, Errors) {
    const auto cm = make_matrix(3, {{0, 1, 1.0}});
    EXPECT_THROW(decode(keys({0.1, 0.2, 0.3}), cm, 0, 2), NoPathError);
    EXPECT_THROW(decode(keys({0.1, 0.2, 0.3}), cm, 1, 1), std::invalid_argument);
    EXPECT_THROW(decode(keys({0.1, 0.2}), cm, 0, 1), std::invalid_argument);
}

TEST(Decode, AcceptsOtherScalarTypes) {
    const auto cm = make_matrix(4, {{0, 1, 1.0}, {0, 2, 1.0}, {1, 3, 1.0}, {2, 3, 1.0}});
    Eigen::VectorXf f(4);
    f << 0.5f, 0.1f, 0.9f, 0.5f;
    EXPECT_EQ(decode(f, cm, 0, 3).nodes, (std::vector<NodeId>{0, 2, 3}));
}

TEST(Decode, TotalOnConnectedGraphs) {
    std::mt19937_64 graphs(3);
    Rng rng(4);
    int checked = 0;
    for (int g = 0; g < 200; ++g) {
        const auto cm = random_graph(graphs, 10, 0.25);
        if (all_simple_paths(cm, 0, 9).empty()) continue;
        for (int i = 0; i < 20; ++i) {
            const auto v = random_vector(rng, 10);
            const auto p = decode(v, cm, 0, 9);
            ASSERT_TRUE(is_valid_path(p, cm, 0, 9));
            ASSERT_EQ(decode(v, cm, 0, 9), p);
            ++checked;
        }
    }
    EXPECT_GT(checked, 1000);
}

TEST(Decode, EverySimplePathIsReachable) {
    std::mt19937_64 graphs(9);
    int paths = 0;
    for (int g = 0; g < 60; ++g) {
        const int n = 4 + g % 5;  // 4..8 nodes
        const auto cm = random_graph(graphs, n, 0.45);
        for (const auto& target : all_simple_paths(cm, 0, n - 1)) {
            // off-path nodes key 0, path nodes descending along the path
            PriorityVector v = PriorityVector::Zero(n);
            for (std::size_t i = 0; i < target.size(); ++i) {
                v[target[i]] = 1.0 - static_cast<double>(i) / (target.size() + 1);
            }
            ASSERT_EQ(decode(v, cm, 0, n - 1).nodes, target);
            ++paths;
        }
    }
    EXPECT_GT(paths, 100);
}

TEST(PathCost, SumsLinks) {
    const auto cm = make_matrix(2, {{0, 1, 0.0833}});
    EXPECT_EQ(path_cost(std::vector<NodeId>{0, 1}, cm), 0.0833);

    std::vector<WeightedEdge> edges;
    for (int i = 0; i < 8; ++i) edges.push_back({i, i + 1, 0.067});
    const CostMatrix chain(9, edges);
    std::vector<NodeId> nodes{0, 1, 2, 3, 4, 5, 6, 7, 8};
    EXPECT_NEAR(path_cost(nodes, chain), 0.536, 1e-12);
}

TEST(PathCost, Additive) {
    std::mt19937_64 rng(12);
    std::vector<WeightedEdge> edges;
    std::uniform_real_distribution<double> w(0.01, 1.0);
    for (int i = 0; i < 11; ++i) edges.push_back({i, i + 1, w(rng)});
    const CostMatrix chain(12, edges);
    std::vector<NodeId> all{0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11};
    for (int cut = 1; cut < 11; ++cut) {
        const std::vector<NodeId> head(all.begin(), all.begin() + cut + 1);
        const std::vector<NodeId> tail(all.begin() + cut, all.end());
        EXPECT_NEAR(path_cost(all, chain), path_cost(head, chain) + path_cost(tail, chain), 1e-12);
    }
}

TEST(PathCost, BrokenPath) {
    const auto cm = make_matrix(3, {{0, 1, 0.5}});
    EXPECT_THROW(path_cost(std::vector<NodeId>{0, 2}, cm), BrokenPathError);
}

TEST(RandomVector, SeededAndBounded) {
    Rng a(7), b(7);
    EXPECT_EQ(random_vector(a, 30), random_vector(b, 30));
    Rng rng(8);
    PriorityVector previous = random_vector(rng, 30);
    for (int i = 0; i < 100; ++i) {
        const auto v = random_vector(rng, 30);
        EXPECT_GE(v.minCoeff(), 0.0);
        EXPECT_LE(v.maxCoeff(), 1.0);
        EXPECT_NE(v, previous);
        previous = v;
    }
    EXPECT_THROW(random_vector(rng, 1), std::invalid_argument);
}

TEST(PathJson, RoundTrip) {
    const Path p{{0, 3, 7}, 0.625};
    EXPECT_EQ(path_from_json(to_json(p)), p);
}
