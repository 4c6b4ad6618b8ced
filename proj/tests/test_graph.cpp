#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <sstream>

#include "monowidth/graph.hpp"
#include "support.hpp"

using namespace mw;
using namespace mw::testing;

namespace {

Graph relabel(const Graph& g, const std::vector<int>& perm) {
    Graph h;
    for (int v : g.vertices()) h.add_vertex(perm[v]);
    for (const auto& [id, en] : g.edges()) h.add_edge(id, perm[en.u], perm[en.v]);
    return h;
}

// Brute force: some vertex permutation maps the edge multiset onto the other.
bool iso_by_permutation(const Graph& a, const Graph& b) {
    if (a.num_vertices() != b.num_vertices() || a.num_edges() != b.num_edges()) return false;
    std::vector<int> va(a.vertices().begin(), a.vertices().end());
    std::vector<int> vb(b.vertices().begin(), b.vertices().end());
    std::multiset<std::pair<int, int>> eb;
    for (const auto& [_, en] : b.edges()) eb.insert({en.u, en.v});
    std::vector<int> p(vb.size());
    std::iota(p.begin(), p.end(), 0);
    do {
        std::map<int, int> m;
        for (std::size_t i = 0; i < va.size(); ++i) m[va[i]] = vb[p[i]];
        std::multiset<std::pair<int, int>> ea;
        for (const auto& [_, en] : a.edges()) {
            int x = m[en.u], y = m[en.v];
            ea.insert({std::min(x, y), std::max(x, y)});
        }
        if (ea == eb) return true;
    } while (std::next_permutation(p.begin(), p.end()));
    return false;
}

// Graph homomorphisms a -> t, enumerated exhaustively.
std::vector<GraphMorphism> all_homs(const Graph& a, const Graph& t) {
    std::vector<int> va(a.vertices().begin(), a.vertices().end());
    std::vector<int> vt(t.vertices().begin(), t.vertices().end());
    std::vector<GraphMorphism> out;
    if (vt.empty() && !va.empty()) return out;
    std::vector<std::size_t> idx(va.size(), 0);
    while (true) {
        std::map<int, int> vm;
        for (std::size_t i = 0; i < va.size(); ++i) vm[va[i]] = vt[idx[i]];
        // Each edge may go to any parallel edge between the image ends.
        std::vector<std::pair<int, std::vector<int>>> choices;
        bool possible = true;
        for (const auto& [id, en] : a.edges()) {
            std::vector<int> c;
            int x = std::min(vm[en.u], vm[en.v]), y = std::max(vm[en.u], vm[en.v]);
            for (const auto& [tid, ten] : t.edges())
                if (ten.u == x && ten.v == y) c.push_back(tid);
            if (c.empty()) possible = false;
            choices.push_back({id, c});
        }
        if (possible) {
            std::vector<std::size_t> ci(choices.size(), 0);
            while (true) {
                GraphMorphism m{a, t, vm, {}};
                for (std::size_t i = 0; i < choices.size(); ++i) m.emap[choices[i].first] = choices[i].second[ci[i]];
                out.push_back(m);
                std::size_t i = 0;
                while (i < ci.size() && ++ci[i] == choices[i].second.size()) ci[i++] = 0;
                if (i == ci.size()) break;
            }
        }
        std::size_t i = 0;
        while (i < idx.size() && ++idx[i] == vt.size()) idx[i++] = 0;
        if (i == idx.size()) break;
    }
    return out;
}

}  // namespace

TEST(Graph, EdgesAreNormalisedAndNumbered) {
    Graph g;
    EXPECT_THROW(g.add_edge(3, 1), std::domain_error);
    for (int v : {1, 2, 3}) g.add_vertex(v);
    int e0 = g.add_edge(3, 1);
    int e1 = g.add_edge(2, 2);
    EXPECT_EQ(e0, 0);
    EXPECT_EQ(e1, 1);
    EXPECT_EQ(g.ends(0), (Ends{1, 3}));
    EXPECT_TRUE(g.ends(1).loop());
    EXPECT_EQ(g.vertices(), (VertexSet{1, 2, 3}));
    EXPECT_EQ(g.degree(2), 2);
    EXPECT_EQ(g.neighbours(2), (VertexSet{2}));
}

TEST(Graph, SubgraphRejectsDanglingEdges) {
    Graph g = make_path(3);
    EXPECT_NO_THROW(g.subgraph({0, 1}, {0}));
    EXPECT_ANY_THROW(g.subgraph({0}, {0}));
}

TEST(Graph, ConnectedComponentsOrderedByLeastVertex) {
    Graph g;
    for (int v = 0; v < 5; ++v) g.add_vertex(v);
    g.add_edge(3, 4);
    g.add_edge(0, 2);
    auto cs = connected_components(g);
    ASSERT_EQ(cs.size(), 3u);
    EXPECT_EQ(cs[0], (VertexSet{0, 2}));
    EXPECT_EQ(cs[1], (VertexSet{1}));
    EXPECT_EQ(cs[2], (VertexSet{3, 4}));
}

TEST(Graph, TreeShapes) {
    EXPECT_TRUE(is_tree(make_path(4)));
    EXPECT_TRUE(is_subcubic_tree(make_star(3)));
    EXPECT_FALSE(is_subcubic_tree(make_star(4)));
    EXPECT_FALSE(is_tree(make_cycle(3)));
}

TEST(Pushout, GluingTwoEdgesGivesAPath) {
    Graph e = make_edge();
    Colimit po = graph_pushout(e, e, std::vector<int>{1}, std::vector<int>{0});
    EXPECT_TRUE(graph_isomorphic(po.apex, make_path(3)).has_value());
    EXPECT_TRUE(po.in1.well_formed());
    EXPECT_TRUE(po.in2.well_formed());
    EXPECT_EQ(po.in1.v(1), po.in2.v(0));
}

TEST(Pushout, CoproductIsDisjoint) {
    Colimit co = graph_coproduct(make_complete(3), make_path(2));
    EXPECT_EQ(co.apex.num_vertices(), 5u);
    EXPECT_EQ(co.apex.num_edges(), 4u);
    EXPECT_EQ(co.in1.v(0), 0);
    EXPECT_EQ(co.in2.v(0), 3);
}

TEST(Pushout, UniversalPropertyOnSmallSpans) {
    Rng rng(11);
    std::vector<Graph> targets = catalog_with_empty(3, 3);
    Graph loop;
    loop.add_vertex(0);
    loop.add_edge(0, 0);
    targets.push_back(loop);
    int checked = 0;
    for (int trial = 0; trial < 40; ++trial) {
        Graph g1 = random_graph(rng, 3, 2, true), g2 = random_graph(rng, 3, 2, true);
        if (g1.num_vertices() == 0 || g2.num_vertices() == 0) continue;
        int k = std::uniform_int_distribution<int>(0, 2)(rng);
        std::vector<int> l1, l2;
        for (int i = 0; i < k; ++i) {
            l1.push_back(std::uniform_int_distribution<int>(0, static_cast<int>(g1.num_vertices()) - 1)(rng));
            l2.push_back(std::uniform_int_distribution<int>(0, static_cast<int>(g2.num_vertices()) - 1)(rng));
        }
        Colimit po = graph_pushout(g1, g2, l1, l2);
        for (int i = 0; i < k; ++i) ASSERT_EQ(po.in1.v(l1[i]), po.in2.v(l2[i]));
        for (const Graph& t : targets) {
            auto h1s = all_homs(g1, t), h2s = all_homs(g2, t);
            for (const auto& h1 : h1s)
                for (const auto& h2 : h2s) {
                    bool cocone = true;
                    for (int i = 0; i < k; ++i) cocone &= h1.v(l1[i]) == h2.v(l2[i]);
                    if (!cocone) continue;
                    // The mediating map is forced by the injections.
                    GraphMorphism u{po.apex, t, {}, {}};
                    bool consistent = true;
                    auto put = [&](std::map<int, int>& m, int x, int y) {
                        auto [it, fresh] = m.emplace(x, y);
                        consistent &= fresh || it->second == y;
                    };
                    for (auto [x, y] : po.in1.vmap) put(u.vmap, y, h1.v(x));
                    for (auto [x, y] : po.in2.vmap) put(u.vmap, y, h2.v(x));
                    for (auto [x, y] : po.in1.emap) put(u.emap, y, h1.e(x));
                    for (auto [x, y] : po.in2.emap) put(u.emap, y, h2.e(x));
                    ASSERT_TRUE(consistent);
                    ASSERT_TRUE(u.well_formed());
                    ++checked;
                }
        }
    }
    EXPECT_GT(checked, 100);
}

TEST(Isomorphism, AgreesWithPermutationSearchOnCatalog) {
    auto cat = catalog_with_empty(4, 6);
    Rng rng(5);
    for (const Graph& a : cat)
        for (const Graph& b : cat) {
            std::vector<int> perm(b.num_vertices());
            std::iota(perm.begin(), perm.end(), 0);
            std::shuffle(perm.begin(), perm.end(), rng);
            Graph bb = relabel(b, perm);
            auto iso = graph_isomorphic(a, bb);
            ASSERT_EQ(iso.has_value(), iso_by_permutation(a, bb));
            if (iso) {
                ASSERT_TRUE(iso->well_formed());
                ASSERT_TRUE(is_epimorphism(*iso));
            }
        }
}

TEST(Isomorphism, EquivalenceRelationWithWitnesses) {
    auto cat = catalog_with_empty(4, 6);
    Rng rng(9);
    for (const Graph& a : cat) {
        std::vector<int> p(a.num_vertices()), q(a.num_vertices());
        std::iota(p.begin(), p.end(), 0);
        std::iota(q.begin(), q.end(), 0);
        std::shuffle(p.begin(), p.end(), rng);
        std::shuffle(q.begin(), q.end(), rng);
        Graph b = relabel(a, p), c = relabel(a, q);
        auto aa = graph_isomorphic(a, a);
        ASSERT_TRUE(aa);
        auto ab = graph_isomorphic(a, b);
        auto bc = graph_isomorphic(b, c);
        ASSERT_TRUE(ab && bc);
        GraphMorphism ba = inverse_isomorphism(*ab);
        EXPECT_TRUE(ba.well_formed());
        GraphMorphism ac = compose_morphisms(*ab, *bc);
        EXPECT_TRUE(ac.well_formed());
        EXPECT_TRUE(is_epimorphism(ac));
    }
}

TEST(Isomorphism, PinnedVerticesAreRespected) {
    Graph p = make_path(3);
    EXPECT_TRUE(graph_isomorphic(p, p, {{0, 2}}).has_value());
    EXPECT_FALSE(graph_isomorphic(p, p, {{1, 0}}).has_value());
}

TEST(Isomorphism, LoopsAndParallelEdgesCount) {
    Graph a, b;
    for (Graph* g : {&a, &b}) {
        g->add_vertex(0);
        g->add_vertex(1);
    }
    a.add_edge(0, 1);
    a.add_edge(0, 1);
    b.add_edge(0, 1);
    b.add_edge(1, 1);
    EXPECT_FALSE(graph_isomorphic(a, b).has_value());
}

TEST(CanonicalForm, InvariantUnderRelabelling) {
    Rng rng(3);
    for (int i = 0; i < 300; ++i) {
        Graph g = random_graph(rng, 6, 8, true);
        std::vector<int> perm(g.num_vertices());
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        Graph h = relabel(g, perm);
        ASSERT_EQ(canonical_form(g), canonical_form(h));
        Graph c = canonical_graph(g);
        ASSERT_TRUE(graph_isomorphic(c, g).has_value());
        ASSERT_EQ(canonical_form(c), canonical_form(g));
    }
}

TEST(CanonicalForm, SeparatesNonIsomorphicGraphs) {
    auto cat = catalog_with_empty(5, 10);
    std::set<std::string> codes;
    for (const Graph& g : cat) codes.insert(canonical_form(g));
    EXPECT_EQ(codes.size(), cat.size());
}

TEST(FiniteMaps, ImagesMatchElementwiseComputation) {
    Rng rng(17);
    for (int i = 0; i < 200; ++i) {
        VertexSet cod;
        int n = std::uniform_int_distribution<int>(1, 6)(rng);
        for (int v = 0; v < n; ++v) cod.insert(v);
        std::vector<int> a, b;
        int k = std::uniform_int_distribution<int>(0, 6)(rng);
        for (int j = 0; j < k; ++j) a.push_back(static_cast<int>(rng() % n)), b.push_back(static_cast<int>(rng() % n));
        FiniteMap f = FiniteMap::from_positions(a, cod), g = FiniteMap::from_positions(b, cod);
        VertexSet ia(a.begin(), a.end()), ib(b.begin(), b.end()), u = ia, x;
        u.insert(ib.begin(), ib.end());
        for (int v : ia)
            if (ib.count(v)) x.insert(v);
        ASSERT_EQ(image_union(f, g), u);
        ASSERT_EQ(image_intersection(f, g), x);
    }
}

TEST(GraphText, RoundTrip) {
    SourcedGraph g = parse_graph_text("# comment\nv 7\ne 0 1\ne 1 2 # trailing\ns 2\n");
    EXPECT_EQ(g.graph.vertices(), (VertexSet{0, 1, 2, 7}));
    EXPECT_EQ(g.graph.num_edges(), 2u);
    EXPECT_EQ(g.sources, (VertexSet{2}));
    SourcedGraph h = parse_graph_text(graph_to_text(g));
    EXPECT_EQ(g, h);
}

TEST(GraphText, ErrorsCarryLineNumbers) {
    try {
        parse_graph_text("v 0\n\ne 0 x\n");
        FAIL();
    } catch (const parse_error& e) {
        EXPECT_EQ(e.line(), 3);
        EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos);
    }
    EXPECT_THROW(parse_graph_text("e 0\n"), parse_error);
    EXPECT_THROW(parse_graph_text("edge 0 1\n"), parse_error);
    EXPECT_THROW(parse_graph_text("v -1\n"), parse_error);
}
