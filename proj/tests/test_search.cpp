#include <gtest/gtest.h>

#include "monowidth/oracles.hpp"
#include "monowidth/search.hpp"
#include "support.hpp"

using namespace mw;
using namespace mw::testing;

TEST(Search, EdgeIsALeaf) {
    SearchResult r = bounded_mwd_search(edge_cospan());
    EXPECT_EQ(r.width, 2);
    EXPECT_TRUE(r.best.is_leaf());
    EXPECT_FALSE(r.bound_only);
}

TEST(Search, PathOfThreeMatchesPathWidth) {
    Cospan p3 = sourced_cospan(make_path(3), {});
    SearchResult r = bounded_mwd_search(p3, SearchShape::path);
    EXPECT_EQ(r.width, 2);
    EXPECT_EQ(r.width, exact_pathwidth(make_path(3)).width);
    EXPECT_TRUE(is_path(r.best));
    EXPECT_TRUE(cospan_iso_eq(evaluate(r.best), p3));
}

TEST(Search, TriangleWithinBranchBound) {
    Cospan k3 = sourced_cospan(make_complete(3), {});
    SearchResult r = bounded_mwd_search(k3);
    EXPECT_LE(r.width, exact_branchwidth(make_complete(3)).width + 1);
    // Width 2: the triangle is a copied vertex feeding two edges, glued to
    // the third edge along two wires.
    EXPECT_EQ(r.width, 2);
    EXPECT_TRUE(cospan_iso_eq(evaluate(r.best), k3));
}

TEST(Search, EmptyCospan) {
    SearchResult r = bounded_mwd_search(identity(0));
    EXPECT_EQ(r.width, 0);
}

TEST(Search, ShapesAreRespected) {
    Rng rng(17);
    for (int i = 0; i < 60; ++i) {
        Cospan g = random_cospan(rng, static_cast<int>(rng() % 3), static_cast<int>(rng() % 3), 5, 5);
        for (SearchShape s : {SearchShape::any, SearchShape::right_tree, SearchShape::path}) {
            SearchResult r = bounded_mwd_search(g, s);
            ASSERT_TRUE(cospan_iso_eq(evaluate(r.best), g)) << serialize(r.best);
            EXPECT_EQ(r.width, r.best.width());
            EXPECT_LE(r.width, std::max(g.weight(), 0));
            if (s == SearchShape::right_tree) EXPECT_TRUE(is_right_tree(r.best));
            if (s == SearchShape::path) EXPECT_TRUE(is_path(r.best));
        }
    }
}

TEST(Search, WiderShapesNeverDoWorse) {
    for (const Graph& g : catalog_with_empty(4, 6)) {
        Cospan c = sourced_cospan(g, {});
        int any = bounded_mwd_search(c, SearchShape::any).width;
        int tree = bounded_mwd_search(c, SearchShape::right_tree).width;
        int path = bounded_mwd_search(c, SearchShape::path).width;
        EXPECT_LE(any, tree);
        EXPECT_LE(tree, path);
        EXPECT_EQ(path, exact_pathwidth(g).width) << canonical_form(g);
    }
}

TEST(Search, BudgetGivesABoundOnly) {
    Cospan c = sourced_cospan(make_complete(5), {});
    SearchResult r = bounded_mwd_search(c, SearchShape::any, SearchBudget{3});
    EXPECT_TRUE(r.bound_only);
    EXPECT_TRUE(cospan_iso_eq(evaluate(r.best), c));
    EXPECT_LE(r.width, 5);
}

TEST(Search, RefusesLargeApexes) {
    EXPECT_THROW(bounded_mwd_search(sourced_cospan(make_path(40), {})), refusal_error);
}
