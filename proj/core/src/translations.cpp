#include "monowidth/translations.hpp"

#include <algorithm>
#include <numeric>

#include "set_util.hpp"

namespace mw {

using detail::set_and;
using detail::set_minus;
using detail::set_or;
using detail::subset_of;

namespace {

void require_valid(const Validation& v, const char* what) {
    if (!v) throw precondition_error(std::string("invalid ") + what + " (clause " + v.clause + "): " + v.message);
}

void ensure(bool ok, const std::string& what) {
    if (!ok) throw postcondition_error(what);
}

VertexSet image_of(const std::vector<int>& leg) { return {leg.begin(), leg.end()}; }

VertexSet map_set(const std::map<int, int>& m, const VertexSet& s) {
    VertexSet out;
    for (int x : s) out.insert(m.at(x));
    return out;
}

// Corestriction of a colimit injection onto its image subgraph.
GraphMorphism onto_image(const GraphMorphism& in) {
    GraphMorphism a = in;
    a.codomain = in.codomain.subgraph(in.image_vertices(), in.image_edges());
    return a;
}

void check_merges_on_boundary(const GraphMorphism& a, const VertexSet& boundary, const char* side) {
    std::map<int, int> first;
    for (const auto& [v, img] : a.vmap) {
        auto [it, fresh] = first.emplace(img, v);
        if (!fresh && (!boundary.count(v) || !boundary.count(it->second)))
            throw postcondition_error(std::string(side) + " merges vertices " + std::to_string(it->second) + " and " +
                                      std::to_string(v) + " off the shared boundary");
    }
}

}  // namespace

EpiWitness epis_from_composition(const Cospan& g1, const Cospan& g2) {
    if (g1.cod() != g2.dom())
        throw type_error("cannot compose " + std::to_string(g1.cod()) + " outputs with " + std::to_string(g2.dom()) +
                         " inputs");
    Colimit po = graph_pushout(g1.apex, g2.apex, g1.right, g2.left);
    EpiWitness w{onto_image(po.in1), onto_image(po.in2), po.apex};
    check_merges_on_boundary(w.alpha1, image_of(g1.right), "alpha1");
    check_merges_on_boundary(w.alpha2, image_of(g2.left), "alpha2");
    return w;
}

// ---- pushing decompositions through epimorphisms -----------------------------

namespace {

SourcedGraph map_gamma(const GraphMorphism& a, const SourcedGraph& g) {
    VertexSet vs = map_set(a.vmap, g.graph.vertices());
    EdgeSet es;
    for (int e : g.graph.edge_ids()) es.insert(a.emap.at(e));
    return {a.codomain.subgraph(vs, es), map_set(a.vmap, g.sources)};
}

RecTreeDec map_tree(const GraphMorphism& a, const RecTreeDec& t) {
    if (!t) return nullptr;
    return rec_tree_node(map_gamma(a, t->gamma), map_set(a.vmap, t->bag), map_tree(a, t->left), map_tree(a, t->right));
}

RecPathDec map_path(const GraphMorphism& a, const RecPathDec& t) {
    if (!t) return nullptr;
    return rec_path_node(map_gamma(a, t->gamma), map_set(a.vmap, t->bag), map_path(a, t->tail));
}

void collect_bags(const RecTreeDec& t, std::vector<VertexSet>& out) {
    if (!t) return;
    out.push_back(t->bag);
    collect_bags(t->left, out);
    collect_bags(t->right, out);
}

void check_epi(const GraphMorphism& a, const Graph& g, const std::vector<VertexSet>& bags) {
    if (!(a.domain == g)) throw precondition_error("morphism domain is not the decomposed graph");
    if (!a.well_formed()) throw precondition_error("morphism is not a graph homomorphism");
    if (!is_epimorphism(a)) throw precondition_error("morphism is not surjective");
    EdgeSet hit;
    for (const auto& [e, img] : a.emap)
        if (!hit.insert(img).second) throw precondition_error("edge map merges edge " + std::to_string(e));
    std::map<int, std::vector<int>> fibres;
    for (const auto& [v, img] : a.vmap) fibres[img].push_back(v);
    for (const auto& [_, f] : fibres)
        for (std::size_t i = 0; i < f.size(); ++i)
            for (std::size_t j = i + 1; j < f.size(); ++j) {
                bool shared = std::any_of(bags.begin(), bags.end(),
                                          [&](const VertexSet& b) { return b.count(f[i]) && b.count(f[j]); });
                if (!shared)
                    throw precondition_error("vertices " + std::to_string(f[i]) + " and " + std::to_string(f[j]) +
                                             " are merged but share no bag");
            }
}

}  // namespace

RecTreeDec epi_to_dec_tree(const GraphMorphism& alpha, const RecTreeDec& t) {
    std::vector<VertexSet> bags;
    collect_bags(t, bags);
    check_epi(alpha, rec_gamma(t).graph, bags);
    RecTreeDec out = map_tree(alpha, t);
    SourcedGraph target{alpha.codomain, map_set(alpha.vmap, rec_gamma(t).sources)};
    auto v = validate_rec_tree(out, target);
    ensure(v.ok, "epi_to_dec_tree produced an invalid decomposition: " + v.message);
    ensure(dec_width(out) <= dec_width(t), "epi_to_dec_tree increased the width");
    return out;
}

RecPathDec epi_to_dec_path(const GraphMorphism& alpha, const RecPathDec& t) {
    std::vector<VertexSet> bags;
    for (const RecPathNode* p = t.get(); p; p = p->tail.get()) bags.push_back(p->bag);
    check_epi(alpha, rec_gamma(t).graph, bags);
    RecPathDec out = map_path(alpha, t);
    SourcedGraph target{alpha.codomain, map_set(alpha.vmap, rec_gamma(t).sources)};
    auto v = validate_rec_path(out, target);
    ensure(v.ok, "epi_to_dec_path produced an invalid decomposition: " + v.message);
    ensure(dec_width(out) <= dec_width(t), "epi_to_dec_path increased the width");
    return out;
}

// ---- copying -------------------------------------------------------------------

namespace {

DecompTree weighted_leaf(const char* name, Cospan c, int weight) {
    int dom = c.dom(), cod = c.cod();
    return DecompTree::leaf(std::make_shared<const Atom>(Atom{name, dom, cod, weight, std::move(c)}));
}

}  // namespace

DecompTree id_leaf(int n, CopyWeights) { return weighted_leaf("id", identity(n), n); }

DecompTree copy_leaf(int n, CopyWeights w) {
    return weighted_leaf("cp", copy_cospan(n), w == CopyWeights::symbolic ? 2 * n : n);
}

DecompTree swap_leaf(int n, int m, CopyWeights) { return weighted_leaf("swap", swap_cospan(n, m), n + m); }

namespace {

DecompTree copy_rec(const DecompTree& d, int y, std::vector<int> xs, int z, CopyWeights w) {
    if (xs.empty()) return d;
    int xl = xs.back();
    xs.pop_back();
    if (xl == 0) return copy_rec(d, y, xs, z, w);
    int prefix = y + std::accumulate(xs.begin(), xs.end(), 0);
    DecompTree inner = copy_leaf(xl, w);
    if (z > 0)
        inner = DecompTree::compose(DecompTree::tensor(inner, id_leaf(z, w)),
                                    DecompTree::tensor(id_leaf(xl, w), swap_leaf(xl, z, w)));
    DecompTree head = prefix > 0 ? DecompTree::tensor(id_leaf(prefix, w), inner) : inner;
    DecompTree rest = copy_rec(d, y, xs, xl + z, w);
    return DecompTree::compose(head, DecompTree::tensor(rest, id_leaf(xl, w)));
}

}  // namespace

DecompTree copy_mdec(const DecompTree& d, int y, const std::vector<int>& xs, int z, CopyWeights weights) {
    int sum = std::accumulate(xs.begin(), xs.end(), 0);
    if (y < 0 || z < 0 || std::any_of(xs.begin(), xs.end(), [](int x) { return x < 0; }))
        throw precondition_error("negative object size");
    if (d.dom() != y + sum + z)
        throw type_error("copy_mdec: term has domain " + std::to_string(d.dom()) + ", expected " +
                         std::to_string(y + sum + z));
    DecompTree out = copy_rec(d, y, xs, z, weights);
    int xmax = xs.empty() ? 0 : *std::max_element(xs.begin(), xs.end());
    int n = static_cast<int>(xs.size());
    int bound = xs.empty() ? d.width() : std::max(d.width(), y + z + (n + 1) * xmax);
    ensure(out.width() <= bound, "copy_mdec width " + std::to_string(out.width()) + " exceeds " + std::to_string(bound));
    return out;
}

// ---- tree decompositions -------------------------------------------------------

namespace {

std::vector<int> ascending(const VertexSet& s) { return {s.begin(), s.end()}; }

std::vector<int> concat(std::initializer_list<std::vector<int>> parts) {
    std::vector<int> out;
    for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
    return out;
}

void check_order(const std::vector<int>& order, const VertexSet& sources) {
    VertexSet seen(order.begin(), order.end());
    if (seen.size() != order.size() || seen != sources)
        throw precondition_error("boundary order must list each source exactly once");
}

DecompTree graph_leaf(const Graph& g, const VertexSet& vs, const EdgeSet& es, const std::vector<int>& left,
                      const std::vector<int>& right) {
    return DecompTree::leaf(make_cospan(g.subgraph(vs, es), left, right), "g");
}

DecompTree t_rec(const RecTreeDec& t, const std::vector<int>& order) {
    if (!t) return DecompTree::leaf(Cospan{}, "g");
    const Graph& g = t->gamma.graph;
    if (!t->left && !t->right) return graph_leaf(g, g.vertices(), g.edge_ids(), order, {});

    const SourcedGraph& g1 = rec_gamma(t->left);
    const SourcedGraph& g2 = rec_gamma(t->right);
    std::vector<int> a = ascending(set_minus(g1.sources, g2.sources));
    std::vector<int> s = ascending(set_and(g1.sources, g2.sources));
    std::vector<int> b = ascending(set_minus(g2.sources, g1.sources));
    std::vector<int> mid = concat({a, s, b});

    EdgeSet rest = set_minus(g.edge_ids(), set_or(g1.graph.edge_ids(), g2.graph.edge_ids()));
    DecompTree h = graph_leaf(g, t->bag, rest, order, mid);

    Graph disc;
    for (int v : mid) disc.add_vertex(v);
    DecompTree copy_block = DecompTree::leaf(make_cospan(disc, mid, concat({a, s, s, b})), "b");

    DecompTree kids = DecompTree::tensor(t_rec(t->left, concat({a, s})), t_rec(t->right, concat({s, b})));
    return DecompTree::compose(h, DecompTree::compose(copy_block, kids));
}

}  // namespace

DecompTree t_to_mdec(const RecTreeDec& t, const SourcedGraph& gamma) {
    return t_to_mdec(t, gamma, ascending(gamma.sources));
}

DecompTree t_to_mdec(const RecTreeDec& t, const SourcedGraph& gamma, const std::vector<int>& order) {
    require_valid(validate_rec_tree(t, gamma), "recursive tree decomposition");
    check_order(order, gamma.sources);
    DecompTree d = t_rec(t, order);
    ensure(is_right_tree(d), "t_to_mdec produced a term that is not a right tree");
    ensure(d.width() <= 2 * dec_width(t), "t_to_mdec width " + std::to_string(d.width()) + " exceeds twice " +
                                              std::to_string(dec_width(t)));
    return d;
}

namespace {

struct TreeAndCospan {
    RecTreeDec tree;
    Cospan value;
};

SourcedGraph root_gamma(const Cospan& c) { return {c.apex, image_of(c.left)}; }

TreeAndCospan mt_rec(const DecompTree& d) {
    switch (d.op()) {
        case DecompTree::Op::leaf: {
            const Atom& a = d.atom();
            if (!a.cospan) throw precondition_error("atom '" + a.name + "' has no cospan");
            const Cospan& c = *a.cospan;
            if (c.apex.empty()) return {nullptr, c};
            return {rec_tree_node(root_gamma(c), c.apex.vertices(), nullptr, nullptr), c};
        }
        case DecompTree::Op::tensor: {
            TreeAndCospan l = mt_rec(d.left()), r = mt_rec(d.right());
            Cospan c = tensor(l.value, r.value);
            if (c.apex.empty()) return {nullptr, c};
            Colimit co = graph_coproduct(l.value.apex, r.value.apex);
            co.in1 = onto_image(co.in1);
            co.in2 = onto_image(co.in2);
            VertexSet im = image_of(c.left);
            return {rec_tree_node(root_gamma(c), im, map_tree(co.in1, l.tree), map_tree(co.in2, r.tree)), c};
        }
        case DecompTree::Op::compose: {
            if (!d.left().is_leaf()) throw precondition_error("m_to_tdec needs a right tree decomposition");
            const Atom& a = d.left().atom();
            if (!a.cospan) throw precondition_error("atom '" + a.name + "' has no cospan");
            const Cospan& h1 = *a.cospan;
            TreeAndCospan r = mt_rec(d.right());
            Cospan c = compose(h1, r.value);
            if (c.apex.empty()) return {nullptr, c};
            EpiWitness w = epis_from_composition(h1, r.value);
            RecTreeDec t2 = epi_to_dec_tree(w.alpha2, r.tree);
            const VertexSet& v1 = w.alpha1.codomain.vertices();
            const VertexSet& v2 = w.alpha2.codomain.vertices();
            VertexSet bag = set_or(image_of(c.left), set_and(v1, v2));
            RecTreeDec t1;
            if (!w.alpha1.codomain.empty())
                t1 = rec_tree_node({w.alpha1.codomain, set_and(v1, bag)}, v1, nullptr, nullptr);
            return {rec_tree_node(root_gamma(c), bag, t1, t2), c};
        }
    }
    return {};
}

}  // namespace

RecTreeDec m_to_tdec(const DecompTree& d) {
    if (!is_right_tree(d)) throw precondition_error("m_to_tdec needs a right tree decomposition");
    if (d.cod() != 0) throw precondition_error("m_to_tdec needs an empty right boundary");
    TreeAndCospan r = mt_rec(d);
    SourcedGraph gamma = root_gamma(r.value);
    auto v = validate_rec_tree(r.tree, gamma);
    ensure(v.ok, "m_to_tdec produced an invalid decomposition (clause " + v.clause + "): " + v.message);
    int bound = std::max(d.width(), static_cast<int>(gamma.sources.size()));
    ensure(dec_width(r.tree) <= bound, "m_to_tdec width exceeds max{wd(d), |im|}");
    return r.tree;
}

// ---- path decompositions -------------------------------------------------------

namespace {

DecompTree p_rec(const RecPathDec& t, const std::vector<int>& order) {
    if (!t) return DecompTree::leaf(Cospan{}, "g");
    const Graph& g = t->gamma.graph;
    if (!t->tail) return graph_leaf(g, g.vertices(), g.edge_ids(), order, {});
    const SourcedGraph& gt = t->tail->gamma;
    std::vector<int> mid = ascending(gt.sources);
    DecompTree head = graph_leaf(g, t->bag, set_minus(g.edge_ids(), gt.graph.edge_ids()), order, mid);
    return DecompTree::compose(head, p_rec(t->tail, mid));
}

}  // namespace

DecompTree p_to_mdec(const RecPathDec& t, const SourcedGraph& gamma) {
    return p_to_mdec(t, gamma, ascending(gamma.sources));
}

DecompTree p_to_mdec(const RecPathDec& t, const SourcedGraph& gamma, const std::vector<int>& order) {
    require_valid(validate_rec_path(t, gamma), "recursive path decomposition");
    check_order(order, gamma.sources);
    DecompTree d = p_rec(t, order);
    ensure(is_path(d), "p_to_mdec produced a term with a tensor");
    ensure(d.width() == dec_width(t), "p_to_mdec width " + std::to_string(d.width()) + " differs from " +
                                          std::to_string(dec_width(t)));
    return d;
}

namespace {

void flatten_path(const DecompTree& d, std::vector<Cospan>& out) {
    if (d.is_leaf()) {
        if (!d.atom().cospan) throw precondition_error("atom '" + d.atom().name + "' has no cospan");
        out.push_back(*d.atom().cospan);
        return;
    }
    flatten_path(d.left(), out);
    flatten_path(d.right(), out);
}

struct PathAndCospan {
    RecPathDec path;
    Cospan value;
};

PathAndCospan mp_rec(const std::vector<Cospan>& parts, std::size_t i) {
    const Cospan& h1 = parts[i];
    if (i + 1 == parts.size()) {
        if (h1.apex.empty()) return {nullptr, h1};
        return {rec_path_node(root_gamma(h1), h1.apex.vertices(), nullptr), h1};
    }
    PathAndCospan r = mp_rec(parts, i + 1);
    Cospan c = compose(h1, r.value);
    if (c.apex.empty()) return {nullptr, c};
    EpiWitness w = epis_from_composition(h1, r.value);
    RecPathDec tail = epi_to_dec_path(w.alpha2, r.path);
    return {rec_path_node(root_gamma(c), w.alpha1.codomain.vertices(), tail), c};
}

}  // namespace

RecPathDec m_to_pdec(const DecompTree& d) {
    if (!is_path(d)) throw precondition_error("m_to_pdec needs a composition-only term");
    if (d.cod() != 0) throw precondition_error("m_to_pdec needs an empty right boundary");
    // Composition is associative and the cuts stay the same, so the term is
    // read as the list of its atoms.
    std::vector<Cospan> parts;
    flatten_path(d, parts);
    PathAndCospan r = mp_rec(parts, 0);
    SourcedGraph gamma = root_gamma(r.value);
    auto v = validate_rec_path(r.path, gamma);
    ensure(v.ok, "m_to_pdec produced an invalid decomposition (clause " + v.clause + "): " + v.message);
    ensure(dec_width(r.path) <= d.width(), "m_to_pdec width exceeds wd(d)");
    return r.path;
}

// ---- branch decompositions -----------------------------------------------------

namespace {

DecompTree vertex_leaf(int v, bool source) {
    Graph g;
    g.add_vertex(v);
    return DecompTree::leaf(make_cospan(g, source ? std::vector<int>{v} : std::vector<int>{}, {}), "v");
}

// Wires `order` into the domain sequence `have` expected by d.
DecompTree with_order(const std::vector<int>& order, const std::vector<int>& have, const DecompTree& d) {
    if (order == have) return d;
    std::vector<int> perm;
    for (int v : have) perm.push_back(static_cast<int>(std::find(order.begin(), order.end(), v) - order.begin()));
    return DecompTree::compose(DecompTree::leaf(permutation(perm), "perm"), d);
}

DecompTree b_rec(const RecBranchDec& t, const std::vector<int>& order) {
    const Graph& g = t->gamma.graph;
    const VertexSet& x = t->gamma.sources;
    switch (t->kind) {
        case RecBranchNode::Kind::empty: {
            std::vector<DecompTree> parts;
            for (int v : order) parts.push_back(vertex_leaf(v, true));
            for (int v : set_minus(g.vertices(), x)) parts.push_back(vertex_leaf(v, false));
            if (parts.empty()) return DecompTree::leaf(Cospan{}, "g");
            return tensor_all(parts);
        }
        case RecBranchNode::Kind::leaf: {
            int e = *g.edge_ids().begin();
            VertexSet ends = g.ends_set(e);
            std::vector<int> xe = ascending(set_and(x, ends));
            std::vector<DecompTree> parts{graph_leaf(g, ends, {e}, xe, {})};
            std::vector<int> have = xe;
            VertexSet iso = set_minus(g.vertices(), ends);
            for (int v : set_and(iso, x)) {
                parts.push_back(vertex_leaf(v, true));
                have.push_back(v);
            }
            for (int v : set_minus(iso, x)) parts.push_back(vertex_leaf(v, false));
            return with_order(order, have, tensor_all(parts));
        }
        case RecBranchNode::Kind::node:
            break;
    }
    const VertexSet &v1 = t->left->gamma.graph.vertices(), &v2 = t->right->gamma.graph.vertices();
    std::vector<int> a = ascending(set_minus(set_and(x, v1), v2));
    std::vector<int> b = ascending(set_minus(set_and(x, v2), v1));
    VertexSet s = set_and(v1, v2);
    std::vector<int> sx = ascending(set_and(s, x));
    std::vector<int> sn = ascending(set_minus(s, x));
    int ns = static_cast<int>(s.size());

    // Bring in the shared vertices that are not sources, copy every shared
    // wire once, feed one copy to the first half and pass the rest along.
    std::vector<DecompTree> prep;
    if (!a.empty()) prep.push_back(id_leaf(static_cast<int>(a.size())));
    if (!sx.empty()) prep.push_back(id_leaf(static_cast<int>(sx.size())));
    if (!sn.empty()) prep.push_back(DecompTree::leaf(create_cospan(static_cast<int>(sn.size())), "create"));
    DecompTree d1 = b_rec(t->left, concat({a, sx, sn}));
    DecompTree first = copy_mdec(d1, static_cast<int>(a.size()), std::vector<int>(ns, 1), 0);
    if (!prep.empty()) first = DecompTree::compose(tensor_all(prep), first);
    if (!b.empty()) first = DecompTree::tensor(first, id_leaf(static_cast<int>(b.size())));
    DecompTree d2 = b_rec(t->right, concat({sx, sn, b}));
    return with_order(order, concat({a, sx, b}), DecompTree::compose(first, d2));
}

}  // namespace

DecompTree b_to_mdec(const RecBranchDec& t, const SourcedGraph& gamma) {
    return b_to_mdec(t, gamma, ascending(gamma.sources));
}

DecompTree b_to_mdec(const RecBranchDec& t, const SourcedGraph& gamma, const std::vector<int>& order) {
    require_valid(validate_rec_branch(t, gamma), "recursive branch decomposition");
    check_order(order, gamma.sources);
    DecompTree d = b_rec(t, order);
    int bound = std::max(b_to_mdec_bound(dec_width(t)), 2);
    ensure(d.width() <= bound, "b_to_mdec width " + std::to_string(d.width()) + " exceeds " + std::to_string(bound));
    return d;
}

// ---- monoidal to branch --------------------------------------------------------

GlueMap GlueMap::identity(const Graph& g) {
    GlueMap m;
    for (int v : g.vertices()) m.vmap[v] = v;
    for (int e : g.edge_ids()) m.emap[e] = e;
    return m;
}

void check_glueing(const Cospan& h, const GlueMap& phi) {
    for (int v : h.apex.vertices())
        if (!phi.vmap.count(v)) throw precondition_error("glue map undefined at vertex " + std::to_string(v));
    for (int e : h.apex.edge_ids())
        if (!phi.emap.count(e)) throw precondition_error("glue map undefined at edge " + std::to_string(e));
    EdgeSet hit;
    for (int e : h.apex.edge_ids())
        if (!hit.insert(phi.emap.at(e)).second)
            throw precondition_error("glue map merges edge " + std::to_string(e));
    VertexSet boundary = set_or(image_of(h.left), image_of(h.right));
    std::map<int, int> first;
    for (int v : h.apex.vertices()) {
        auto [it, fresh] = first.emplace(phi.vmap.at(v), v);
        if (!fresh && (!boundary.count(v) || !boundary.count(it->second)))
            throw precondition_error("glueing property fails for vertices " + std::to_string(it->second) + " and " +
                                     std::to_string(v));
    }
}

SourcedGraph glued_graph(const Cospan& h, const GlueMap& phi) {
    SourcedGraph out;
    for (int v : h.apex.vertices()) out.graph.add_vertex(phi.vmap.at(v));
    for (const auto& [e, en] : h.apex.edges()) out.graph.add_edge(phi.emap.at(e), phi.vmap.at(en.u), phi.vmap.at(en.v));
    for (int v : set_or(image_of(h.left), image_of(h.right))) out.sources.insert(phi.vmap.at(v));
    return out;
}

namespace {

GlueMap after(const GraphMorphism& in, const GlueMap& phi) {
    GlueMap out;
    for (const auto& [v, img] : in.vmap) out.vmap[v] = phi.vmap.at(img);
    for (const auto& [e, img] : in.emap) out.emap[e] = phi.emap.at(img);
    return out;
}

// Peels off the smallest edge until one is left.
RecBranchDec comb(const SourcedGraph& gamma) {
    const Graph& g = gamma.graph;
    if (g.num_edges() == 0) return rec_branch_empty(gamma);
    if (g.num_edges() == 1) return rec_branch_leaf(gamma);
    int e0 = *g.edge_ids().begin();
    EdgeSet e1{e0};
    EdgeSet e2 = set_minus(g.edge_ids(), e1);
    VertexSet v1 = g.ends_set(e0);
    VertexSet v2 = set_or(ends_of_edge_set(g, e2), set_minus(g.vertices(), v1));
    VertexSet shared = set_and(v1, v2);
    SourcedGraph g1{g.subgraph(v1, e1), set_or(shared, set_and(gamma.sources, v1))};
    SourcedGraph g2{g.subgraph(v2, e2), set_or(shared, set_and(gamma.sources, v2))};
    return rec_branch_node(gamma, comb(g1), comb(g2));
}

RecBranchDec mb_rec(const DecompTree& d, const GlueMap& phi) {
    Cospan h = evaluate(d);
    SourcedGraph gamma = glued_graph(h, phi);
    if (d.is_leaf()) return comb(gamma);
    Cospan c1 = evaluate(d.left()), c2 = evaluate(d.right());
    Colimit co = d.op() == DecompTree::Op::tensor ? graph_coproduct(c1.apex, c2.apex)
                                                  : graph_pushout(c1.apex, c2.apex, c1.right, c2.left);
    return rec_branch_node(gamma, mb_rec(d.left(), after(co.in1, phi)), mb_rec(d.right(), after(co.in2, phi)));
}

}  // namespace

RecBranchDec m_to_bdec(const DecompTree& d, const GlueMap& phi) {
    Cospan h = evaluate(d);
    check_glueing(h, phi);
    RecBranchDec t = mb_rec(d, phi);
    SourcedGraph gamma = glued_graph(h, phi);
    auto v = validate_rec_branch(t, gamma);
    ensure(v.ok, "m_to_bdec produced an invalid decomposition (clause " + v.clause + "): " + v.message);
    int bound = 2 * std::max({d.width(), d.dom(), d.cod()});
    ensure(dec_width(t) <= bound, "m_to_bdec width " + std::to_string(dec_width(t)) + " exceeds " +
                                      std::to_string(bound));
    return t;
}

}  // namespace mw
