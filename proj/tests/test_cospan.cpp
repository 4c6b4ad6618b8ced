#include <gtest/gtest.h>

#include <nlohmann/json.hpp>

#include "monowidth/cospan.hpp"
#include "support.hpp"

using namespace mw;
using namespace mw::testing;

TEST(Cospan, ComposingEdgesBuildsAPath) {
    Cospan p = compose(edge_cospan(), compose(edge_cospan(), edge_cospan()));
    EXPECT_EQ(p.dom(), 1);
    EXPECT_EQ(p.cod(), 1);
    EXPECT_TRUE(graph_isomorphic(p.apex, make_path(4)).has_value());
    EXPECT_EQ(p.weight(), 4);
}

TEST(Cospan, ArityMismatchIsATypeError) {
    EXPECT_THROW(compose(identity(2), identity(3)), type_error);
    EXPECT_THROW(permutation({0, 0}), precondition_error);
}

TEST(Cospan, TensorConcatenatesBoundaries) {
    Cospan t = tensor(edge_cospan(), identity(2));
    EXPECT_EQ(t.dom(), 3);
    EXPECT_EQ(t.cod(), 3);
    EXPECT_EQ(t.apex.num_vertices(), 4u);
    EXPECT_EQ(t.left, (std::vector<int>{0, 2, 3}));
}

TEST(Cospan, SwapIsAnInvolution) {
    for (int n = 0; n <= 3; ++n)
        for (int m = 0; m <= 3; ++m)
            EXPECT_TRUE(cospan_iso_eq(compose(swap_cospan(n, m), swap_cospan(m, n)), identity(n + m)));
}

TEST(Cospan, FrobeniusSpecialAndUnit) {
    for (int n = 0; n <= 3; ++n) {
        EXPECT_TRUE(cospan_iso_eq(compose(copy_cospan(n), merge_cospan(n)), identity(n)));
        EXPECT_TRUE(cospan_iso_eq(compose(copy_cospan(n), tensor(identity(n), delete_cospan(n))), identity(n)));
        EXPECT_TRUE(cospan_iso_eq(compose(tensor(identity(n), create_cospan(n)), merge_cospan(n)), identity(n)));
    }
}

TEST(Cospan, IsoEqualityPinsTheLegs) {
    Cospan a = edge_cospan();
    Cospan b = a;
    std::swap(b.left, b.right);
    EXPECT_FALSE(cospan_iso_eq(a, compose(a, a)));
    EXPECT_TRUE(cospan_iso_eq(compose(a, identity(1)), a));
    // Reversed edge: iso as graphs but not as cospans unless the legs agree.
    Cospan rev = make_cospan(a.apex, {1}, {0});
    EXPECT_TRUE(cospan_iso_eq(rev, a));
    Cospan loopish = make_cospan(a.apex, {0}, {0});
    EXPECT_FALSE(cospan_iso_eq(loopish, a));
}

TEST(Cospan, CheckRejectsLegsOutsideTheApex) {
    EXPECT_THROW(make_cospan(make_path(2), {5}, {}), std::domain_error);
}

TEST(Cospan, JsonRoundTrip) {
    Rng rng(1);
    for (int i = 0; i < 100; ++i) {
        Cospan c = random_cospan(rng, static_cast<int>(rng() % 3), static_cast<int>(rng() % 3));
        Cospan d = cospan_from_json(cospan_to_json(c));
        ASSERT_TRUE(cospan_iso_eq(c, d));
        ASSERT_EQ(c, d);
    }
}

TEST(Cospan, RandomLawsHold) {
    Rng rng(21);
    for (int i = 0; i < 200; ++i) {
        int a = static_cast<int>(rng() % 3), b = static_cast<int>(rng() % 3), c = static_cast<int>(rng() % 3),
            d = static_cast<int>(rng() % 3);
        Cospan f = random_cospan(rng, a, b), g = random_cospan(rng, b, c), h = random_cospan(rng, c, d);
        ASSERT_TRUE(cospan_iso_eq(compose(compose(f, g), h), compose(f, compose(g, h))));
        ASSERT_TRUE(cospan_iso_eq(compose(identity(a), f), f));
        ASSERT_TRUE(cospan_iso_eq(compose(f, identity(b)), f));
        Cospan f2 = random_cospan(rng, c, a), g2 = random_cospan(rng, a, d);
        ASSERT_TRUE(cospan_iso_eq(compose(tensor(f, f2), tensor(g, g2)), tensor(compose(f, g), compose(f2, g2))));
    }
}
