#include <gtest/gtest.h>

#include <nlohmann/json.hpp>

#include "monowidth/decomp.hpp"
#include "support.hpp"

using namespace mw;
using namespace mw::testing;

TEST(Decomp, ExampleTermHasWidthTwo) {
    DecompTree d = example_decomposition(symbolic_atoms());
    EXPECT_EQ(d.dom(), 1);
    EXPECT_EQ(d.cod(), 1);
    EXPECT_EQ(d.width(), 2);
    EXPECT_EQ(width_by_nodes(d), 2);
    EXPECT_EQ(d.node_count(), 11);
}

TEST(Decomp, ExampleSerialisation) {
    EXPECT_EQ(serialize(example_decomposition(symbolic_atoms())),
              "(f[1,2,2] ;2 (((f[1,2,2] ;2 g[2,1,2]) * (f[1,2,2] ;2 g[2,1,2])) ;2 g[2,1,2]))");
}

TEST(Decomp, NaiveAndBalancedWidths) {
    const int naive[] = {2, 2, 4, 8, 16};
    for (int n = 0; n <= 4; ++n) {
        ExampleAtoms a = symbolic_atoms();
        DecompTree hn = h_naive(a, n), hb = h_balanced(a, n);
        EXPECT_EQ(hn.width(), naive[n]) << "n=" << n;
        EXPECT_EQ(hb.width(), 2) << "n=" << n;
        EXPECT_EQ(width_by_nodes(hn), hn.width());
        EXPECT_EQ(hn.dom(), 1);
        EXPECT_EQ(hn.cod(), 1);
        // Both terms use 2^(n+1) - 1 copies of each atom.
        EXPECT_EQ(hn.node_count(), hb.node_count()) << "n=" << n;
        EXPECT_EQ(hb.node_count(), 2 * (2 * ((2 << n) - 1)) - 1) << "n=" << n;
    }
}

TEST(Decomp, NaiveAndBalancedAgreeAsCospans) {
    ExampleAtoms a = cospan_atoms();
    for (int n = 0; n <= 3; ++n) {
        Cospan cn = evaluate(h_naive(a, n)), cb = evaluate(h_balanced(a, n));
        EXPECT_TRUE(cospan_iso_eq(cn, cb)) << "n=" << n;
        EXPECT_EQ(cn.apex.num_edges(), 2u * ((2u << n) - 1)) << "n=" << n;
    }
    // The example is h_1.
    EXPECT_TRUE(cospan_iso_eq(evaluate(example_decomposition(a)), evaluate(h_balanced(a, 1))));
}

TEST(Decomp, CompositionChecksArities) {
    ExampleAtoms a = symbolic_atoms();
    EXPECT_THROW(DecompTree::compose(a.f, a.f), type_error);
    EXPECT_THROW(DecompTree::compose(DecompTree::tensor(a.g, a.g), a.f), type_error);
    EXPECT_EQ(DecompTree::tensor(a.f, a.g).dom(), 3);
    EXPECT_THROW(make_atom("x", -1, 0, 0), precondition_error);
    EXPECT_THROW(tensor_all({}), precondition_error);
    EXPECT_THROW(compose_all({}), precondition_error);
}

TEST(Decomp, EvaluateNamesTheFailingNode) {
    ExampleAtoms a = symbolic_atoms();
    try {
        evaluate(example_decomposition(a));
        FAIL() << "symbolic atoms have no cospan";
    } catch (const type_error& e) {
        EXPECT_EQ(std::string(e.what()), "root.0: atom 'f' has no cospan");
    }
    ExampleAtoms c = cospan_atoms();
    try {
        evaluate(DecompTree::compose(c.f, DecompTree::compose(DecompTree::tensor(c.f, c.f), DecompTree::tensor(c.g, a.g))));
        FAIL() << "symbolic atom inside a cospan term";
    } catch (const type_error& e) {
        EXPECT_EQ(std::string(e.what()), "root.1.1.1: atom 'g' has no cospan");
    }
    auto lying = std::make_shared<const Atom>(Atom{"bad", 2, 1, 2, edge_cospan()});
    try {
        evaluate(DecompTree::compose(c.f, DecompTree::leaf(lying)));
        FAIL() << "declared arity differs from the cospan";
    } catch (const type_error& e) {
        EXPECT_EQ(std::string(e.what()), "root.1: atom 'bad' disagrees with its declared arity");
    }
}

TEST(Decomp, ShapePredicates) {
    ExampleAtoms a = symbolic_atoms();
    DecompTree fg = DecompTree::compose(a.f, a.g);
    EXPECT_TRUE(is_path(fg));
    EXPECT_TRUE(is_right_tree(fg));
    EXPECT_TRUE(is_left_tree(fg));
    DecompTree e = example_decomposition(a);
    EXPECT_FALSE(is_path(e));
    EXPECT_FALSE(is_right_tree(e));
    EXPECT_FALSE(is_left_tree(e));
    DecompTree left = DecompTree::compose(fg, a.f);
    EXPECT_FALSE(is_right_tree(left));
    DecompTree right2 = DecompTree::compose(a.f, DecompTree::tensor(fg, a.f));
    EXPECT_TRUE(is_right_tree(right2));
    EXPECT_FALSE(is_left_tree(right2));
    EXPECT_TRUE(is_left_tree(DecompTree::compose(DecompTree::compose(a.f, a.g), a.f)));
}

namespace {

DecompTree random_term(Rng& rng, int depth, int dom, int cod) {
    if (depth == 0 || rng() % 3 == 0) return DecompTree::leaf(random_cospan(rng, dom, cod, 3, 2));
    if (rng() % 2 == 0 && dom + cod >= 1) {
        int d1 = dom ? static_cast<int>(rng() % (dom + 1)) : 0;
        int c1 = cod ? static_cast<int>(rng() % (cod + 1)) : 0;
        return DecompTree::tensor(random_term(rng, depth - 1, d1, c1), random_term(rng, depth - 1, dom - d1, cod - c1));
    }
    int mid = static_cast<int>(rng() % 3);
    return DecompTree::compose(random_term(rng, depth - 1, dom, mid), random_term(rng, depth - 1, mid, cod));
}

}  // namespace

TEST(Decomp, JsonRoundTripPreservesTermsAndValues) {
    Rng rng(5);
    for (int i = 0; i < 100; ++i) {
        DecompTree d = random_term(rng, 4, static_cast<int>(rng() % 3), static_cast<int>(rng() % 3));
        DecompTree back = decomp_from_json(decomp_to_json(d));
        ASSERT_EQ(serialize(back), serialize(d));
        ASSERT_EQ(back.width(), d.width());
        ASSERT_EQ(width_by_nodes(d), d.width());
        ASSERT_TRUE(cospan_iso_eq(evaluate(back), evaluate(d)));
    }
    DecompTree s = example_decomposition(symbolic_atoms());
    EXPECT_EQ(serialize(decomp_from_json(decomp_to_json(s))), serialize(s));
}

TEST(Decomp, JsonRejectsBadCuts) {
    nlohmann::json j = decomp_to_json(DecompTree::compose(DecompTree::leaf(edge_cospan()), DecompTree::leaf(identity(1))));
    j["cut"] = 3;
    EXPECT_THROW(decomp_from_json(j), parse_error);
    j["op"] = "glue";
    EXPECT_THROW(decomp_from_json(j), parse_error);
    EXPECT_THROW(decomp_from_json(nlohmann::json::object()), parse_error);
}

TEST(Decomp, DotMentionsEveryNode) {
    std::string dot = decomp_to_dot(example_decomposition(symbolic_atoms()));
    EXPECT_NE(dot.find("digraph"), std::string::npos);
    std::size_t arrows = 0;
    for (std::size_t p = dot.find("->"); p != std::string::npos; p = dot.find("->", p + 1)) ++arrows;
    EXPECT_EQ(arrows, 10u);
}
