#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "hypercore/cooccur.hpp"
#include "hypercore/oracle.hpp"
#include "test_support.hpp"

namespace hypercore {
namespace {

using testing::from_text;
using testing::toy;

std::vector<std::pair<NodeId, NodeId>> edge_set(const CoocGraph& g) {
    std::vector<std::pair<NodeId, NodeId>> out;
    for (NodeId v = 0; v < g.num_nodes(); ++v) {
        for (NodeId u : g.neighbours(v)) {
            if (v < u) out.emplace_back(v, u);
        }
    }
    return out;
}

TEST(BuildNom, ToyCounts) {
    auto nom = build_nom(toy());
    EXPECT_EQ(nom.count(0, 1), 3u);
    EXPECT_EQ(nom.count(0, 2), 2u);
    EXPECT_EQ(nom.count(1, 2), 2u);
    EXPECT_EQ(nom.count(0, 3), 1u);
    EXPECT_EQ(nom.count(1, 3), 1u);
    EXPECT_EQ(nom.count(2, 3), 1u);
    EXPECT_EQ(nom.num_entries(), 12u);
    EXPECT_EQ(nom.max_count(), 3u);
}

TEST(BuildNom, SingletonEdgeHasNoPairs) {
    auto nom = build_nom(from_text("a\n"));
    EXPECT_EQ(nom.num_nodes(), 1u);
    EXPECT_EQ(nom.num_entries(), 0u);
}

TEST(BuildNom, SinglePairIsSymmetric) {
    auto nom = build_nom(from_text("a b\n"));
    EXPECT_EQ(nom.count(0, 1), 1u);
    EXPECT_EQ(nom.count(1, 0), 1u);
    EXPECT_EQ(nom.count(0, 0), 0u);
}

TEST(ThresholdGraph, ToyThresholds) {
    auto nom = build_nom(toy());
    auto g2 = threshold_graph(nom, 2);
    EXPECT_EQ(g2.g(), 2u);
    EXPECT_EQ(edge_set(g2), (std::vector<std::pair<NodeId, NodeId>>{{0, 1}, {0, 2}, {1, 2}}));
    EXPECT_EQ(threshold_graph(nom, 4).num_edges(), 0u);
    EXPECT_EQ(threshold_graph(nom, 1).num_edges(), 6u);
    EXPECT_THROW(threshold_graph(nom, 0), std::invalid_argument);
    EXPECT_THROW(build_cooc_graph(toy(), 0), std::invalid_argument);
}

TEST(ThresholdGraph, GOneIsCliqueExpansion) {
    std::mt19937 rng(3);
    for (int trial = 0; trial < 100; ++trial) {
        auto g = testing::random_hypergraph(rng, {.max_nodes = 30, .max_edges = 40, .max_cardinality = 6});
        auto cooc = threshold_graph(build_nom(g), 1);
        for (NodeId v = 0; v < g.num_nodes(); ++v) {
            auto row = cooc.neighbours(v);
            EXPECT_EQ(std::vector<NodeId>(row.begin(), row.end()), g.neighbours(v));
        }
    }
}

TEST(NomProperties, MatchesPairScan) {
    std::mt19937 rng(17);
    for (int trial = 0; trial < 300; ++trial) {
        auto g = testing::random_hypergraph(rng, {.max_nodes = 30, .max_edges = 60, .max_cardinality = 6});
        auto nom = build_nom(g);
        std::size_t entries = 0;
        for (NodeId v = 0; v < g.num_nodes(); ++v) {
            auto row = nom.neighbours(v);
            EXPECT_TRUE(std::is_sorted(row.begin(), row.end()));
            EXPECT_FALSE(std::binary_search(row.begin(), row.end(), v));
            for (NodeId u = 0; u < g.num_nodes(); ++u) {
                if (u == v) continue;
                std::size_t expected = oracle::shared_edges(g, u, v);
                ASSERT_EQ(nom.count(v, u), expected);
                EXPECT_EQ(nom.count(v, u), nom.count(u, v));
                EXPECT_LE(nom.count(v, u), std::min(g.degree(u), g.degree(v)));
                if (expected > 0) ++entries;
            }
        }
        EXPECT_EQ(entries, nom.num_entries());
    }
}

TEST(NomProperties, ThresholdsNestAndStreamingAgrees) {
    std::mt19937 rng(23);
    for (int trial = 0; trial < 200; ++trial) {
        auto g = testing::random_hypergraph(rng, {.max_nodes = 25, .max_edges = 60, .max_cardinality = 5});
        auto nom = build_nom(g);
        auto previous = edge_set(threshold_graph(nom, 1));
        for (std::size_t th = 1; th <= 5; ++th) {
            auto current = edge_set(threshold_graph(nom, th));
            EXPECT_TRUE(std::includes(previous.begin(), previous.end(), current.begin(), current.end()));
            for (std::size_t threads : {1u, 3u}) {
                EXPECT_EQ(edge_set(build_cooc_graph(g, th, threads)), current);
            }
            previous = std::move(current);
        }
    }
}

TEST(NomProperties, PartitioningIsDeterministic) {
    std::mt19937 rng(29);
    auto g = testing::random_hypergraph(rng, {.max_nodes = 200, .max_edges = 300, .max_cardinality = 8, .min_nodes = 150});
    auto base = build_nom(g, 1);
    for (std::size_t threads : {2u, 4u, 7u}) {
        auto split = build_nom(g, threads);
        ASSERT_EQ(split.num_entries(), base.num_entries());
        for (NodeId v = 0; v < g.num_nodes(); ++v) {
            auto a = base.neighbours(v);
            auto b = split.neighbours(v);
            ASSERT_TRUE(std::equal(a.begin(), a.end(), b.begin(), b.end()));
            auto ca = base.counts(v);
            auto cb = split.counts(v);
            ASSERT_TRUE(std::equal(ca.begin(), ca.end(), cb.begin(), cb.end()));
        }
    }
}

TEST(BuildNom, DenseAndSparseRowsAgree) {
    // node 0 touches almost everyone (dense path); the rest touch few (sorted path)
    std::vector<std::vector<NodeId>> edges;
    std::vector<NodeId> hub;
    for (NodeId v = 0; v < 64; ++v) hub.push_back(v);
    edges.push_back(hub);
    edges.push_back({5, 9});
    edges.push_back({75, 70});
    edges.push_back({70, 75, 80});
    Hypergraph g(100, edges);
    auto nom = build_nom(g);
    EXPECT_EQ(nom.neighbours(0).size(), 63u);
    EXPECT_EQ(nom.count(5, 9), 2u);
    EXPECT_EQ(nom.count(75, 70), 2u);
    EXPECT_EQ(nom.count(80, 70), 1u);
    EXPECT_EQ(nom.count(80, 75), 1u);
    EXPECT_EQ(nom.count(40, 70), 0u);
    auto row = nom.neighbours(70);
    EXPECT_EQ(std::vector<NodeId>(row.begin(), row.end()), (std::vector<NodeId>{75, 80}));
    EXPECT_TRUE(nom.neighbours(99).empty());
}

TEST(WriteNomCsv, OneLinePerPair) {
    std::ostringstream out;
    auto g = from_text("x y\nx y z\n");
    write_nom_csv(out, build_nom(g), g);
    EXPECT_EQ(out.str(), "u,v,count\nx,y,2\nx,z,1\ny,z,1\n");
}

TEST(OversizedEdges, FlagsAboveCap) {
    auto g = from_text("a b c d\na b\nc\n");
    EXPECT_EQ(oversized_edges(g, 2), (std::vector<EdgeId>{0}));
    EXPECT_TRUE(oversized_edges(g, 4).empty());
}

}  // namespace
}  // namespace hypercore
