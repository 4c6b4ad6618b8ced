#include <gtest/gtest.h>

#include "monowidth/theorems.hpp"
#include "support.hpp"

using namespace mw;
using namespace mw::testing;

TEST(Theorems, TriangleReport) {
    Graph k3 = make_complete(3);
    TheoremReport r = check_theorems(k3);
    EXPECT_EQ(r.widths, (Widths{3, 3, 2}));
    EXPECT_TRUE(r.ok()) << r.to_json().dump(2);
    MonoidalBounds b = monoidal_bounds(k3, r.widths);
    EXPECT_EQ(b.mwd_lo, 1);
    EXPECT_EQ(b.mwd_hi, 3);
    EXPECT_EQ(b.mtwd_lo, 3);
    EXPECT_EQ(b.mtwd_hi, 6);
    EXPECT_EQ(b.mpwd, 3);
    EXPECT_LE(r.b_upper, 3);
    EXPECT_EQ(std::min(r.p_searched, r.p_translated), 3);
}

TEST(Theorems, EmptyGraph) {
    TheoremReport r = check_theorems(Graph{});
    EXPECT_EQ(r.widths, (Widths{0, 0, 0}));
    EXPECT_TRUE(r.ok());
    EXPECT_EQ(r.t_upper, 0);
    EXPECT_EQ(r.p_translated, 0);
    EXPECT_EQ(r.b_upper, 0);
}

TEST(Theorems, SingleEdgeBreaksTheLiteralBranchBound) {
    TheoremReport r = check_theorems(make_edge());
    EXPECT_EQ(r.widths, (Widths{2, 2, 0}));
    EXPECT_TRUE(r.tree_ok);
    EXPECT_TRUE(r.path_ok);
    EXPECT_EQ(r.p_translated, 2);
    EXPECT_TRUE(r.branch_lower_ok);
    EXPECT_EQ(r.b_upper, 2);
    EXPECT_FALSE(r.branch_upper_ok);
    ASSERT_EQ(r.failures.size(), 1u);
    EXPECT_NE(r.failures[0].find("exceeds bw + 1"), std::string::npos);
    EXPECT_EQ(monoidal_bounds(make_edge(), r.widths).mwd_hi, 2);
}

TEST(Theorems, PathOfThree) {
    TheoremReport r = check_theorems(make_path(3));
    EXPECT_EQ(r.widths, (Widths{2, 2, 1}));
    EXPECT_TRUE(r.ok()) << r.to_json().dump(2);
}

TEST(Theorems, SandwichesOnTheSmallCatalog) {
    for (const Graph& g : catalog_with_empty(4, 6)) {
        TheoremReport r = check_theorems(g);
        std::string id = canonical_form(g);
        EXPECT_TRUE(r.tree_ok) << id;
        EXPECT_TRUE(r.path_ok) << id;
        EXPECT_TRUE(r.branch_lower_ok) << id;
        EXPECT_TRUE(r.search_exhausted) << id;
        EXPECT_LE(r.b_upper, monoidal_bounds(g, r.widths).mwd_hi) << id;
        EXPECT_EQ(r.branch_upper_ok, r.b_upper <= r.widths.bw + 1) << id;
        if (!r.branch_upper_ok) EXPECT_EQ(r.widths.bw, 0) << id;
    }
}

TEST(Theorems, ReportJson) {
    nlohmann::json j = check_theorems(make_path(2)).to_json();
    EXPECT_EQ(j["widths"]["tw"], 2);
    EXPECT_TRUE(j.contains("witnesses"));
    EXPECT_TRUE(j["witnesses"].contains("branch_dec"));
    EXPECT_FALSE(j["ok"].get<bool>());
}
