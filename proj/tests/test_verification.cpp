#include <gtest/gtest.h>

#include <json.hpp>

#include "antimagic/generators.hpp"
#include "antimagic/verification.hpp"

using namespace antimagic;

TEST(Verify, AntimagicCycle) {
    const auto r = verify(cycle_graph(3), Labeling{{1, 2, 3}});
    EXPECT_TRUE(r.is_bijection);
    EXPECT_TRUE(r.is_antimagic);
    EXPECT_EQ(r.delta, 2);
    EXPECT_EQ(r.sums.min, 3);
    EXPECT_EQ(r.sums.max, 5);
    EXPECT_TRUE(r.violations.empty());
    EXPECT_FALSE(r.chain_ok);
}

TEST(Verify, ReportsRepeatedSums) {
    // C4 with labels 1,4,2,3: sums 4,5,6,5 (vertex 0 gets e3+e0).
    const auto r = verify(cycle_graph(4), Labeling{{1, 4, 2, 3}});
    EXPECT_TRUE(r.is_bijection);
    EXPECT_FALSE(r.is_antimagic);
    ASSERT_EQ(r.duplicate_sum_pairs.size(), 1u);
    EXPECT_EQ(r.duplicate_sum_pairs[0], (std::pair<VertexId, VertexId>{1, 3}));
    EXPECT_FALSE(r.violations.empty());
}

TEST(Verify, RejectsNonBijection) {
    const auto r = verify(cycle_graph(3), Labeling{{1, 1, 3}});
    EXPECT_FALSE(r.is_bijection);
    EXPECT_FALSE(r.is_antimagic);
    EXPECT_FALSE(verify(cycle_graph(3), Labeling{{0, 1, 2}}).is_bijection);
    EXPECT_THROW(verify(cycle_graph(3), Labeling{{1, 2}}), Error);
}

TEST(Verify, ChainDetectsSwappedLabels) {
    const ProductStructure ps = cartesian_product(complete_graph(4), cycle_graph(3));
    const ProductLabeling pl = label_product(ps, 3, 2);
    EXPECT_TRUE(verify_chain(ps.product, ps.layout(), pl.labeling));
    // Swapping the labels m and 1 keeps a bijection but breaks the ordering.
    Labeling broken = pl.labeling;
    const auto m = static_cast<Label>(broken.size());
    auto& v = broken.label_of;
    std::swap(*std::find(v.begin(), v.end(), 1), *std::find(v.begin(), v.end(), m));
    EXPECT_FALSE(verify_chain(pl.context, ps, broken));
}

TEST(Verify, JsonShape) {
    auto r = verify(cycle_graph(4), Labeling{{1, 4, 2, 3}});
    r.chain_ok = false;
    const auto j = nlohmann::json::parse(report_to_json(r));
    EXPECT_EQ(j.at("bijection"), true);
    EXPECT_EQ(j.at("antimagic"), false);
    EXPECT_EQ(j.at("delta"), 2);
    EXPECT_EQ(j.at("min_sum"), 4);
    EXPECT_EQ(j.at("max_sum"), 6);
    EXPECT_EQ(j.at("duplicate_sum_pairs"), nlohmann::json::parse("[[1,3]]"));
    EXPECT_EQ(j.at("chain_ok"), false);
    EXPECT_FALSE(j.at("violations").empty());
    const auto text = report_to_text(r);
    EXPECT_NE(text.find("antimagic: no"), std::string::npos);
}
