#include <gtest/gtest.h>

#include <map>
#include <numeric>
#include <random>

#include "hypercore/kgcore.hpp"
#include "hypercore/oracle.hpp"
#include "hypercore/serialize.hpp"
#include "test_support.hpp"

namespace hypercore {
namespace {

using testing::from_text;
using testing::toy;

using Nodes = std::vector<NodeId>;

// Every member keeps >= k co-members with co-occurrence >= g, recounted from scratch.
void audit(const Hypergraph& g, const CoreResult& r) {
    EXPECT_TRUE(oracle::verify_feasible(g, r.members, r.params));
    EXPECT_LE(r.rounds, g.num_nodes());
    EXPECT_EQ(r.removed_per_round.size(), r.rounds);
    EXPECT_EQ(std::accumulate(r.removed_per_round.begin(), r.removed_per_round.end(), std::size_t{0}),
              g.num_nodes() - r.members.size());
    EXPECT_TRUE(std::is_sorted(r.members.begin(), r.members.end()));
}

TEST(KgCore, ToyFixture) {
    auto g = toy();
    auto r22 = kg_core(g, {2, 2});
    EXPECT_EQ(r22.members, (Nodes{0, 1, 2}));
    EXPECT_EQ(r22.params, (CoreParams{2, 2}));
    EXPECT_EQ(r22.rounds, 1u);
    EXPECT_EQ(r22.removed_per_round, (std::vector<std::size_t>{1}));
    EXPECT_TRUE(kg_core(g, {2, 3}).members.empty());
    EXPECT_EQ(kg_core(g, {1, 3}).members, (Nodes{0, 1}));
    for (auto p : {CoreParams{2, 2}, CoreParams{2, 3}, CoreParams{1, 3}, CoreParams{1, 1}}) audit(g, kg_core(g, p));
}

TEST(KgCore, MinimalThresholdsKeepNodesWithANeighbour) {
    auto g = from_text("a b\nc\nd e f\nc\n");
    EXPECT_EQ(kg_core(g, {1, 1}).members, (Nodes{0, 1, 3, 4, 5}));
}

TEST(KgCore, Preconditions) {
    EXPECT_THROW(kg_core(toy(), {0, 1}), std::invalid_argument);
    EXPECT_THROW(kg_core(toy(), {1, 0}), std::invalid_argument);
    EXPECT_THROW(kg_core_naive(toy(), {0, 1}), std::invalid_argument);
    EXPECT_THROW(peel_k_core(CoocGraph{}, 0), std::invalid_argument);
    Nodes short_order{0, 1};
    EXPECT_THROW(kg_core_naive(toy(), {1, 1}, short_order), std::invalid_argument);
    Nodes repeated{0, 1, 1, 2};
    EXPECT_THROW(kg_core_naive(toy(), {1, 1}, repeated), std::invalid_argument);
}

TEST(KgCore, EmptyAndUnattainable) {
    auto empty = kg_core(Hypergraph{}, {1, 1});
    EXPECT_TRUE(empty.members.empty());
    EXPECT_EQ(empty.rounds, 0u);
    EXPECT_TRUE(kg_core(toy(), {100, 1}).members.empty());
    EXPECT_TRUE(kg_core(toy(), {1, 100}).members.empty());
    EXPECT_TRUE(kg_core_naive(toy(), {1, 100}).members.empty());
}

TEST(KgCore, NaiveMatchesOnFixtures) {
    for (const auto* text : {"a b c\na b c\na b d\nc d\n", "a b c d\n", "a b c\na b c\nc d\n", "a\n"}) {
        auto g = from_text(text);
        for (std::size_t k = 1; k <= 4; ++k) {
            for (std::size_t gg = 1; gg <= 3; ++gg) {
                EXPECT_EQ(kg_core(g, {k, gg}).members, kg_core_naive(g, {k, gg}).members);
            }
        }
    }
}

TEST(KgCore, NaiveTraceFollowsSweepOrder) {
    // path a-b-c-d with k=2: an ascending sweep peels a, then b, c, d cascade in the same sweep
    auto g = from_text("a b\nb c\nc d\n");
    auto naive = kg_core_naive(g, {2, 1});
    EXPECT_TRUE(naive.members.empty());
    EXPECT_EQ(naive.rounds, 1u);
    EXPECT_EQ(naive.removed_per_round, (std::vector<std::size_t>{4}));
    // wave peeling removes both endpoints first, then the middle pair
    auto waves = kg_core(g, {2, 1});
    EXPECT_EQ(waves.removed_per_round, (std::vector<std::size_t>{2, 2}));
}

TEST(KgDecomposition, ToyGrid) {
    std::vector<std::size_t> ks{1, 2};
    std::vector<std::size_t> gs{2, 3};
    auto grid = kg_decomposition(toy(), ks, gs, {.keep_members = true});
    ASSERT_EQ(grid.rows.size(), 4u);
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> sizes;
    for (const auto& row : grid.rows) sizes[{row.k, row.g}] = row.core_size;
    EXPECT_EQ(sizes.at({1, 2}), 3u);
    EXPECT_EQ(sizes.at({2, 2}), 3u);
    EXPECT_EQ(sizes.at({1, 3}), 2u);
    EXPECT_EQ(sizes.at({2, 3}), 0u);
    // rows ordered by g, then k
    EXPECT_EQ(grid.rows[0].g, 2u);
    EXPECT_EQ(grid.rows[1].k, 2u);
    EXPECT_EQ(*grid.rows[2].members, (Nodes{0, 1}));
    EXPECT_TRUE(check_monotone(grid).empty());
}

TEST(KgDecomposition, EmptyListsAndSingleRow) {
    std::vector<std::size_t> none;
    std::vector<std::size_t> one{1};
    EXPECT_TRUE(kg_decomposition(toy(), none, one).rows.empty());
    EXPECT_TRUE(kg_decomposition(toy(), one, none).rows.empty());
    auto grid = kg_decomposition(from_text("a b\n"), one, one);
    ASSERT_EQ(grid.rows.size(), 1u);
    EXPECT_EQ(grid.rows[0].core_size, 2u);
    EXPECT_FALSE(grid.rows[0].members.has_value());
    std::vector<std::size_t> zero{0};
    EXPECT_THROW(kg_decomposition(toy(), zero, one), std::invalid_argument);
    EXPECT_THROW(kg_decomposition(toy(), one, zero), std::invalid_argument);
}

TEST(KgDecomposition, ThreadedSweepIsDeterministic) {
    std::mt19937 rng(77);
    auto g = testing::random_hypergraph(rng, {.max_nodes = 80, .max_edges = 400, .max_cardinality = 6, .min_nodes = 60});
    std::vector<std::size_t> ks{1, 2, 3, 5};
    std::vector<std::size_t> gs{1, 2, 3, 4, 5};
    auto serial = kg_decomposition(g, ks, gs, {.threads = 1, .keep_members = true});
    auto parallel = kg_decomposition(g, ks, gs, {.threads = 3, .keep_members = true});
    ASSERT_EQ(serial.rows.size(), parallel.rows.size());
    for (std::size_t i = 0; i < serial.rows.size(); ++i) {
        EXPECT_EQ(serial.rows[i].k, parallel.rows[i].k);
        EXPECT_EQ(serial.rows[i].g, parallel.rows[i].g);
        EXPECT_EQ(serial.rows[i].members, parallel.rows[i].members);
        EXPECT_EQ(*serial.rows[i].members, kg_core(g, {serial.rows[i].k, serial.rows[i].g}).members);
    }
    EXPECT_TRUE(check_monotone(serial).empty());
}

TEST(CheckMonotone, FlagsViolations) {
    DecompositionGrid grid;
    grid.rows.push_back({.k = 1, .g = 1, .core_size = 3, .millis = 0, .members = Nodes{0, 1, 2}});
    grid.rows.push_back({.k = 2, .g = 1, .core_size = 4, .millis = 0, .members = std::nullopt});
    grid.rows.push_back({.k = 1, .g = 2, .core_size = 2, .millis = 0, .members = Nodes{0, 5}});
    auto violations = check_monotone(grid);
    ASSERT_EQ(violations.size(), 2u);
    EXPECT_EQ(violations[0], "(k=2,g=1) larger than (k=1,g=1)");
    EXPECT_EQ(violations[1], "(k=1,g=2) not contained in (k=1,g=1)");
}

TEST(GCoreness, ToyValues) {
    EXPECT_EQ(g_coreness(toy(), 2), (std::vector<std::size_t>{2, 2, 2, 0}));
    EXPECT_EQ(g_coreness(toy(), 3), (std::vector<std::size_t>{1, 1, 0, 0}));
    EXPECT_EQ(g_coreness(from_text("a\nb\nc\n"), 1), (std::vector<std::size_t>{0, 0, 0}));
    EXPECT_THROW(g_coreness(toy(), 0), std::invalid_argument);
}

TEST(CoreComponents, SplitsDisconnectedCore) {
    // two triangles joined by nothing: the (2,1)-core is both
    auto g = from_text("a b c\nd e f\n");
    auto core = kg_core(g, {2, 1});
    ASSERT_EQ(core.members.size(), 6u);
    auto comps = core_components(build_cooc_graph(g, 1), core.members);
    ASSERT_EQ(comps.size(), 2u);
    EXPECT_EQ(comps[0], (Nodes{0, 1, 2}));
    EXPECT_EQ(comps[1], (Nodes{3, 4, 5}));
}

TEST(CoreResultJson, Envelope) {
    auto g = toy();
    auto j = to_json(kg_core(g, {2, 2}), g);
    EXPECT_EQ(j.at("k"), 2);
    EXPECT_EQ(j.at("g"), 2);
    EXPECT_EQ(j.at("size"), 3);
    EXPECT_EQ(j.at("members"), nlohmann::json({"a", "b", "c"}));
    EXPECT_EQ(j.at("rounds"), 1);
}

class KgCoreProperties : public ::testing::Test {
protected:
    std::mt19937 rng{2024};
    Hypergraph next() {
        return testing::random_hypergraph(rng, {.max_nodes = 14, .max_edges = 30, .max_cardinality = 5});
    }
};

TEST_F(KgCoreProperties, MatchesOracleAndNaive) {
    for (int trial = 0; trial < 300; ++trial) {
        auto g = next();
        for (std::size_t k = 1; k <= 4; ++k) {
            for (std::size_t gg = 1; gg <= 3; ++gg) {
                auto fast = kg_core(g, {k, gg});
                audit(g, fast);
                ASSERT_EQ(fast.members, oracle::brute_force_kg_core(g, {k, gg}));
                ASSERT_EQ(fast.members, kg_core_naive(g, {k, gg}).members);
            }
        }
    }
}

TEST_F(KgCoreProperties, IdempotentOnWeakInducedCore) {
    for (int trial = 0; trial < 200; ++trial) {
        auto g = next();
        for (std::size_t k = 1; k <= 3; ++k) {
            for (std::size_t gg = 1; gg <= 3; ++gg) {
                auto core = kg_core(g, {k, gg});
                auto sub = induced_subhypergraph(g, core.members, InducedMode::weak);
                auto again = kg_core(sub, {k, gg});
                ASSERT_EQ(again.members, core.members);
            }
        }
    }
}

TEST_F(KgCoreProperties, SweepOrderAndRelabellingDoNotMatter) {
    for (int trial = 0; trial < 30; ++trial) {
        auto g = next();
        CoreParams p{2, 2};
        auto reference = kg_core(g, p).members;
        for (int shuffle = 0; shuffle < 100; ++shuffle) {
            auto perm = testing::random_permutation(rng, g.num_nodes());
            ASSERT_EQ(kg_core_naive(g, p, perm).members, reference);
            ASSERT_EQ(kg_core(testing::relabel(g, perm), p).members, testing::mapped(reference, perm));
        }
    }
}

TEST_F(KgCoreProperties, Containment) {
    for (int trial = 0; trial < 200; ++trial) {
        auto g = next();
        for (std::size_t k = 1; k <= 4; ++k) {
            for (std::size_t gg = 1; gg <= 4; ++gg) {
                auto base = kg_core(g, {k, gg}).members;
                EXPECT_TRUE(testing::is_subset(kg_core(g, {k + 1, gg}).members, base));
                EXPECT_TRUE(testing::is_subset(kg_core(g, {k, gg + 1}).members, base));
            }
        }
    }
}

TEST_F(KgCoreProperties, CorenessLevelsAreCores) {
    for (int trial = 0; trial < 200; ++trial) {
        auto g = next();
        for (std::size_t gg = 1; gg <= 3; ++gg) {
            auto core_of = g_coreness(g, gg);
            std::size_t top = core_of.empty() ? 0 : *std::max_element(core_of.begin(), core_of.end());
            for (std::size_t k = 1; k <= top + 1; ++k) {
                Nodes level;
                for (NodeId v = 0; v < core_of.size(); ++v) {
                    if (core_of[v] >= k) level.push_back(v);
                }
                ASSERT_EQ(level, kg_core(g, {k, gg}).members) << "k=" << k << " g=" << gg;
            }
        }
    }
}

}  // namespace
}  // namespace hypercore
