#include <gtest/gtest.h>

#include "antimagic/generators.hpp"
#include "antimagic/labeling.hpp"
#include "antimagic/product.hpp"
#include "antimagic/search.hpp"
#include "oracle.hpp"

using namespace antimagic;

TEST(BruteForce, KnownAntimagicGraphs) {
    for (const Graph& g : {cycle_graph(4), complete_graph(4), cycle_graph(5), path_graph(4),
                           cartesian_product(path_graph(2), path_graph(2)).product}) {
        const auto r = brute_force_antimagic(g);
        ASSERT_EQ(r.status, SearchStatus::Found);
        EXPECT_TRUE(oracle::is_antimagic(g, *r.labeling));
    }
}

TEST(BruteForce, K2IsNotAntimagic) {
    const auto r = brute_force_antimagic(complete_graph(2));
    EXPECT_EQ(r.status, SearchStatus::NotAntimagic);
    EXPECT_FALSE(r.labeling);
}

TEST(BruteForce, FirstHitIsLexicographicallySmallest) {
    // C3: labels (1,2,3) on edges (01,12,20) give sums 4,3,5.
    const auto r = brute_force_antimagic(cycle_graph(3));
    ASSERT_TRUE(r.labeling);
    EXPECT_EQ(r.labeling->label_of, (std::vector<Label>{1, 2, 3}));
}

TEST(BruteForce, ParallelMatchesSerial) {
    const std::vector<std::size_t> cube{1, 4};
    for (const Graph& g : {cycle_graph(7), complete_graph(4), petersen_graph(), circulant_graph(8, cube),
                           copies(complete_graph(2), 2), copies(cycle_graph(3), 3), path_graph(9)}) {
        const auto a = brute_force_antimagic(g, 15);
        const auto b = brute_force_antimagic_serial(g, 15);
        EXPECT_EQ(a.status, b.status);
        EXPECT_EQ(a.labeling, b.labeling);
    }
    for (const Graph& g : {cycle_graph(6), complete_graph(4), copies(cycle_graph(3), 2)}) {
        EXPECT_EQ(brute_force_min_delta(g), brute_force_min_delta_serial(g));
    }
}

TEST(BruteForce, MinDeltaOfCyclesIsTwo) {
    for (std::size_t m = 3; m <= 8; ++m) EXPECT_EQ(brute_force_min_delta(cycle_graph(m)), 2) << m;
    // Two triangles cannot get below 4.
    EXPECT_EQ(brute_force_min_delta(copies(cycle_graph(3), 2)), 4);
}

TEST(BruteForce, BudgetEnforced) {
    try {
        brute_force_antimagic(complete_graph(5), 9);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::BudgetExceeded);
    }
    EXPECT_THROW(brute_force_min_delta(cycle_graph(9)), Error);
    EXPECT_THROW(brute_force_antimagic(cycle_graph(21), 100), Error);
}

TEST(VertexSums, ParallelMatchesSerialAndOracle) {
    const Graph g = random_regular_graph(6000, 3, 9);
    Labeling lab{std::vector<Label>(g.edge_count())};
    for (EdgeId e = 0; e < g.edge_count(); ++e) lab.label_of[e] = static_cast<Label>((e * 7919) % g.edge_count() + 1);
    const auto par = vertex_sums(g, lab);
    EXPECT_EQ(par, vertex_sums_serial(g, lab));
    EXPECT_EQ(par, oracle::sums(g, lab));
    const auto prof = sum_profile(g, lab);
    EXPECT_EQ(prof.delta(), oracle::delta(g, lab));
    EXPECT_THROW(vertex_sums(g, Labeling{{1, 2}}), Error);
}
