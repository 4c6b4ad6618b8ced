#include <algorithm>
#include <functional>

#include "monowidth/graph_decomp.hpp"
#include "set_util.hpp"

namespace mw {

using detail::set_and;
using detail::set_minus;
using detail::set_or;
using detail::subset_of;

namespace {

const SourcedGraph& empty_sourced() {
    static const SourcedGraph e{};
    return e;
}

bool is_subgraph(const Graph& sub, const Graph& g) {
    if (!subset_of(sub.vertices(), g.vertices())) return false;
    for (const auto& [e, en] : sub.edges())
        if (!g.has_edge(e) || g.ends(e) != en) return false;
    return true;
}

std::string vs(const VertexSet& s) { return to_string(s); }

EdgeSet edges_within(const Graph& g, const VertexSet& vset) {
    EdgeSet out;
    for (const auto& [e, en] : g.edges())
        if (vset.count(en.u) && vset.count(en.v)) out.insert(e);
    return out;
}

}  // namespace

RecTreeDec rec_tree_node(SourcedGraph gamma, VertexSet bag, RecTreeDec l, RecTreeDec r) {
    return std::make_shared<const RecTreeNode>(RecTreeNode{std::move(gamma), std::move(bag), std::move(l), std::move(r)});
}

RecPathDec rec_path_node(SourcedGraph gamma, VertexSet bag, RecPathDec tail) {
    return std::make_shared<const RecPathNode>(RecPathNode{std::move(gamma), std::move(bag), std::move(tail)});
}

RecBranchDec rec_branch_empty(SourcedGraph gamma) {
    return std::make_shared<const RecBranchNode>(
        RecBranchNode{RecBranchNode::Kind::empty, std::move(gamma), nullptr, nullptr});
}

RecBranchDec rec_branch_leaf(SourcedGraph gamma) {
    return std::make_shared<const RecBranchNode>(
        RecBranchNode{RecBranchNode::Kind::leaf, std::move(gamma), nullptr, nullptr});
}

RecBranchDec rec_branch_node(SourcedGraph gamma, RecBranchDec l, RecBranchDec r) {
    if (!l || !r) throw precondition_error("branch node needs two children");
    return std::make_shared<const RecBranchNode>(
        RecBranchNode{RecBranchNode::Kind::node, std::move(gamma), std::move(l), std::move(r)});
}

const SourcedGraph& rec_gamma(const RecTreeDec& t) { return t ? t->gamma : empty_sourced(); }
const SourcedGraph& rec_gamma(const RecPathDec& t) { return t ? t->gamma : empty_sourced(); }

// ---- validators ------------------------------------------------------------

Validation validate_rec_tree(const RecTreeDec& t, const SourcedGraph& gamma) {
    const Graph& g = gamma.graph;
    if (!subset_of(gamma.sources, g.vertices())) return Validation::fail("graph", "sources are not vertices");
    if (!t) {
        if (!g.empty()) return Validation::fail("empty", "empty decomposition of a non-empty graph");
        return Validation::pass();
    }
    if (!(t->gamma == gamma)) return Validation::fail("graph", "stored graph differs from the one decomposed");
    const SourcedGraph& g1 = rec_gamma(t->left);
    const SourcedGraph& g2 = rec_gamma(t->right);
    if (!is_subgraph(g1.graph, g) || !is_subgraph(g2.graph, g))
        return Validation::fail("subgraph", "a child graph is not a subgraph");
    const VertexSet& bag = t->bag;
    const VertexSet &v1 = g1.graph.vertices(), &v2 = g2.graph.vertices();
    if (!subset_of(bag, g.vertices())) return Validation::fail("i", "bag " + vs(bag) + " is not inside V");
    if (!subset_of(gamma.sources, bag)) return Validation::fail("i", "sources not inside bag " + vs(bag));
    if (set_or(bag, set_or(v1, v2)) != g.vertices()) return Validation::fail("ii", "V' + V1 + V2 != V");
    if (g1.sources != set_and(v1, bag)) return Validation::fail("iii", "X1 != V1 & V'");
    if (g2.sources != set_and(v2, bag)) return Validation::fail("iii", "X2 != V2 & V'");
    if (!subset_of(set_and(v1, v2), bag)) return Validation::fail("iv", "V1 & V2 not inside V'");
    EdgeSet e1 = g1.graph.edge_ids(), e2 = g2.graph.edge_ids();
    if (!set_and(e1, e2).empty()) return Validation::fail("v", "E1 and E2 overlap");
    EdgeSet rest = set_minus(g.edge_ids(), set_or(e1, e2));
    if (!subset_of(ends_of_edge_set(g, rest), bag))
        return Validation::fail("vi", "an edge outside E1, E2 has an end outside V'");
    if (auto v = validate_rec_tree(t->left, g1); !v) return v;
    return validate_rec_tree(t->right, g2);
}

Validation validate_rec_path(const RecPathDec& t, const SourcedGraph& gamma) {
    const Graph& g = gamma.graph;
    if (!subset_of(gamma.sources, g.vertices())) return Validation::fail("graph", "sources are not vertices");
    if (!t) {
        if (!g.empty()) return Validation::fail("empty", "empty decomposition of a non-empty graph");
        return Validation::pass();
    }
    if (!(t->gamma == gamma)) return Validation::fail("graph", "stored graph differs from the one decomposed");
    const SourcedGraph& gt = rec_gamma(t->tail);
    if (!is_subgraph(gt.graph, g)) return Validation::fail("subgraph", "tail graph is not a subgraph");
    const VertexSet& bag = t->bag;
    const VertexSet& vt = gt.graph.vertices();
    if (!subset_of(bag, g.vertices())) return Validation::fail("i", "bag " + vs(bag) + " is not inside V");
    if (!subset_of(gamma.sources, bag)) return Validation::fail("i", "sources not inside bag " + vs(bag));
    if (set_or(bag, vt) != g.vertices()) return Validation::fail("ii", "V1 + V' != V");
    if (gt.sources != set_and(bag, vt)) return Validation::fail("iii", "X' != V1 & V'");
    EdgeSet rest = set_minus(g.edge_ids(), gt.graph.edge_ids());
    if (!subset_of(ends_of_edge_set(g, rest), bag))
        return Validation::fail("iv", "an edge outside E' has an end outside V1");
    return validate_rec_path(t->tail, gt);
}

Validation validate_rec_branch(const RecBranchDec& t, const SourcedGraph& gamma) {
    const Graph& g = gamma.graph;
    if (!t) return Validation::fail("graph", "null branch decomposition");
    if (!subset_of(gamma.sources, g.vertices())) return Validation::fail("graph", "sources are not vertices");
    if (!(t->gamma == gamma)) return Validation::fail("graph", "stored graph differs from the one decomposed");
    switch (t->kind) {
        case RecBranchNode::Kind::empty:
            if (g.num_edges() != 0) return Validation::fail("empty", "empty decomposition of a graph with edges");
            return Validation::pass();
        case RecBranchNode::Kind::leaf:
            if (g.num_edges() != 1) return Validation::fail("leaf", "leaf graph must have exactly one edge");
            return Validation::pass();
        case RecBranchNode::Kind::node:
            break;
    }
    if (!t->left || !t->right) return Validation::fail("node", "node without two children");
    const SourcedGraph &g1 = t->left->gamma, &g2 = t->right->gamma;
    if (!is_subgraph(g1.graph, g) || !is_subgraph(g2.graph, g))
        return Validation::fail("subgraph", "a child graph is not a subgraph");
    EdgeSet e1 = g1.graph.edge_ids(), e2 = g2.graph.edge_ids();
    if (!set_and(e1, e2).empty() || set_or(e1, e2) != g.edge_ids())
        return Validation::fail("i", "E is not the disjoint union of E1 and E2");
    const VertexSet &v1 = g1.graph.vertices(), &v2 = g2.graph.vertices();
    if (set_or(v1, v2) != g.vertices()) return Validation::fail("ii", "V != V1 + V2");
    VertexSet shared = set_and(v1, v2);
    if (g1.sources != set_or(shared, set_and(gamma.sources, v1)))
        return Validation::fail("iii", "X1 != (V1 & V2) + (X & V1)");
    if (g2.sources != set_or(shared, set_and(gamma.sources, v2)))
        return Validation::fail("iii", "X2 != (V1 & V2) + (X & V2)");
    if (auto v = validate_rec_branch(t->left, g1); !v) return v;
    return validate_rec_branch(t->right, g2);
}

// ---- widths ------------------------------------------------------------------

int dec_width(const RecTreeDec& t) {
    if (!t) return 0;
    return std::max({static_cast<int>(t->bag.size()), dec_width(t->left), dec_width(t->right)});
}

int dec_width(const RecPathDec& t) {
    int w = 0;
    for (const RecPathNode* p = t.get(); p; p = p->tail.get()) w = std::max(w, static_cast<int>(p->bag.size()));
    return w;
}

int dec_width(const RecBranchDec& t) {
    if (!t || t->kind == RecBranchNode::Kind::empty) return 0;
    int w = static_cast<int>(t->gamma.sources.size());
    if (t->kind == RecBranchNode::Kind::node) w = std::max({w, dec_width(t->left), dec_width(t->right)});
    return w;
}

namespace {

void require_valid(const Validation& v, const char* what) {
    if (!v) throw precondition_error(std::string("invalid ") + what + " (clause " + v.clause + "): " + v.message);
}

}  // namespace

int width_of(const RecTreeDec& t, const SourcedGraph& gamma) {
    require_valid(validate_rec_tree(t, gamma), "recursive tree decomposition");
    return dec_width(t);
}

int width_of(const RecPathDec& t, const SourcedGraph& gamma) {
    require_valid(validate_rec_path(t, gamma), "recursive path decomposition");
    return dec_width(t);
}

int width_of(const RecBranchDec& t, const SourcedGraph& gamma) {
    require_valid(validate_rec_branch(t, gamma), "recursive branch decomposition");
    return dec_width(t);
}

std::vector<RecBranchDec> subtrees(const RecBranchDec& t) {
    std::vector<RecBranchDec> out;
    std::function<void(const RecBranchDec&)> walk = [&](const RecBranchDec& s) {
        if (!s) return;
        out.push_back(s);
        walk(s->left);
        walk(s->right);
    };
    walk(t);
    return out;
}

VertexSet boundary_global(const RecBranchDec& t, const RecBranchDec& t0) {
    // Ancestors of t0 (including t0) along the path from the root.
    std::vector<const RecBranchNode*> path;
    std::function<bool(const RecBranchNode*)> find = [&](const RecBranchNode* s) {
        if (!s) return false;
        path.push_back(s);
        if (s == t0.get()) return true;
        if (find(s->left.get()) || find(s->right.get())) return true;
        path.pop_back();
        return false;
    };
    if (!t0 || !find(t.get())) throw std::domain_error("subtree is not part of the decomposition");

    std::set<const RecBranchNode*> related(path.begin(), path.end());
    for (const auto& s : subtrees(t0)) related.insert(s.get());

    VertexSet outside = t->gamma.sources;
    for (const auto& s : subtrees(t))
        if (!related.count(s.get())) {
            const auto& vv = s->gamma.graph.vertices();
            outside.insert(vv.begin(), vv.end());
        }
    return set_and(t0->gamma.graph.vertices(), outside);
}

// ---- classic <-> recursive -------------------------------------------------

namespace {

RecTreeDec tree_rec(const SourcedGraph& gamma, const Graph& shape, const std::map<int, VertexSet>& bags, int r) {
    const Graph& g = gamma.graph;
    if (g.empty()) return nullptr;
    VertexSet bag = set_and(bags.at(r), g.vertices());
    VertexSet nbrs = shape.neighbours(r);
    if (nbrs.empty()) return rec_tree_node(gamma, bag, nullptr, nullptr);

    int c1 = *nbrs.begin();
    Graph without_r = shape.induced(set_minus(shape.vertices(), {r}));
    VertexSet y1;
    for (const auto& comp : connected_components(without_r))
        if (comp.count(c1)) y1 = comp;
    VertexSet v1;
    for (int i : y1) v1 = set_or(v1, bags.at(i));
    v1 = set_and(v1, g.vertices());
    EdgeSet e1 = edges_within(g, v1);
    SourcedGraph gamma1{g.subgraph(v1, e1), set_and(v1, bag)};
    std::map<int, VertexSet> bags1;
    for (int i : y1) bags1[i] = bags.at(i);
    RecTreeDec t1 = tree_rec(gamma1, shape.induced(y1), bags1, c1);

    VertexSet rest = set_minus(set_minus(shape.vertices(), y1), {r});
    RecTreeDec t2;
    if (!rest.empty()) {
        VertexSet v2;
        for (int i : rest) v2 = set_or(v2, bags.at(i));
        v2 = set_and(v2, g.vertices());
        EdgeSet e2 = set_minus(edges_within(g, v2), e1);
        VertexSet x2 = set_and(v2, bag);
        SourcedGraph gamma2{g.subgraph(v2, e2), x2};
        // Chain the remaining branches under a fresh node whose bag is X2.
        Graph y2 = shape.induced(rest);
        int hub = shape.next_vertex_id();
        y2.add_vertex(hub);
        for (int c : nbrs)
            if (c != c1) y2.add_edge(hub, c);
        std::map<int, VertexSet> bags2;
        for (int i : rest) bags2[i] = bags.at(i);
        bags2[hub] = x2;
        t2 = tree_rec(gamma2, y2, bags2, hub);
    }
    return rec_tree_node(gamma, bag, t1, t2);
}

RecPathDec path_rec(const SourcedGraph& gamma, const std::vector<VertexSet>& bags, std::size_t from) {
    const Graph& g = gamma.graph;
    if (g.empty()) return nullptr;
    VertexSet bag = set_and(bags.at(from), g.vertices());
    VertexSet vt;
    for (std::size_t i = from + 1; i < bags.size(); ++i) vt = set_or(vt, bags[i]);
    vt = set_and(vt, g.vertices());
    SourcedGraph tail{g.subgraph(vt, edges_within(g, vt)), set_and(bag, vt)};
    return rec_path_node(gamma, bag, path_rec(tail, bags, from + 1));
}

}  // namespace

RecTreeDec tree_to_recursive(const TreeDec& d, const SourcedGraph& gamma, int root) {
    require_valid(validate_tree_dec(d, gamma.graph), "tree decomposition");
    check_sourced(gamma);
    if (gamma.graph.empty()) return nullptr;
    if (!d.bags.count(root)) throw precondition_error("root " + std::to_string(root) + " is not a tree vertex");
    if (!subset_of(gamma.sources, d.bags.at(root)))
        throw precondition_error("sources " + vs(gamma.sources) + " are not inside the root bag");
    return tree_rec(gamma, d.shape, d.bags, root);
}

RecTreeDec tree_to_recursive(const TreeDec& d, const SourcedGraph& gamma) {
    for (const auto& [i, b] : d.bags)
        if (subset_of(gamma.sources, b)) return tree_to_recursive(d, gamma, i);
    if (gamma.graph.empty()) return nullptr;
    throw precondition_error("no bag holds the sources " + vs(gamma.sources));
}

TreeDec tree_from_recursive(const RecTreeDec& t) {
    TreeDec out;
    std::function<int(const RecTreeDec&)> build = [&](const RecTreeDec& s) -> int {
        if (!s) return -1;
        int id = out.shape.next_vertex_id();
        out.shape.add_vertex(id);
        out.bags[id] = s->bag;
        for (const RecTreeDec& c : {s->left, s->right}) {
            int cid = build(c);
            if (cid >= 0) out.shape.add_edge(id, cid);
        }
        return id;
    };
    build(t);
    return out;
}

RecPathDec path_to_recursive(const PathDec& d, const SourcedGraph& gamma) {
    require_valid(validate_path_dec(d, gamma.graph), "path decomposition");
    check_sourced(gamma);
    if (gamma.graph.empty()) return nullptr;
    if (!subset_of(gamma.sources, d.bags.front()))
        throw precondition_error("sources " + vs(gamma.sources) + " are not inside the first bag");
    return path_rec(gamma, d.bags, 0);
}

PathDec path_from_recursive(const RecPathDec& t) {
    PathDec out;
    for (const RecPathNode* p = t.get(); p; p = p->tail.get()) out.bags.push_back(p->bag);
    return out;
}

namespace {

// Tree vertices reachable from start inside `allowed` without crossing `cut`.
VertexSet side_within(const Graph& shape, const VertexSet& allowed, int start, int cut) {
    VertexSet seen{start};
    std::vector<int> stack{start};
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        for (const auto& [id, en] : shape.edges()) {
            if (id == cut) continue;
            int y = en.u == x ? en.v : en.v == x ? en.u : -1;
            if (y >= 0 && allowed.count(y) && seen.insert(y).second) stack.push_back(y);
        }
    }
    return seen;
}

// `nodes` is a connected part of the shape and `root` the vertex where the
// parent tree edge attaches (-1 at the top). Below the top every split is at
// an edge incident to `root`, so each subtree is cut off from the rest of the
// shape by a single tree edge and its sources are bounded by that edge's order.
RecBranchDec branch_rec(const SourcedGraph& gamma, const BranchDec& d, VertexSet nodes, int root) {
    const Graph& g = gamma.graph;
    if (g.num_edges() == 0) return rec_branch_empty(gamma);
    if (g.num_edges() == 1) return rec_branch_leaf(gamma);

    auto leaf_count = [&](const VertexSet& side) {
        int c = 0;
        for (int v : side) c += d.leaf_map.count(v) ? 1 : 0;
        return c;
    };
    auto incident = [&](const Ends& en) {
        return nodes.count(en.u) && nodes.count(en.v) && (root < 0 || en.u == root || en.v == root);
    };
    // A root of degree one inside `nodes` carries no edge of G; step past it.
    while (root >= 0 && !d.leaf_map.count(root)) {
        std::vector<int> next;
        for (const auto& [_, en] : d.shape.edges())
            if (incident(en)) next.push_back(en.u == root ? en.v : en.u);
        if (next.size() != 1) break;
        nodes.erase(root);
        root = next[0];
    }
    int total = leaf_count(nodes);
    int best_edge = -1, best_balance = -1;
    VertexSet best_side;
    for (const auto& [id, en] : d.shape.edges()) {
        if (!incident(en)) continue;
        // The side away from the root.
        int far = root < 0 || en.u == root ? en.v : en.u;
        int near = far == en.u ? en.v : en.u;
        VertexSet side = side_within(d.shape, nodes, root < 0 ? near : far, id);
        int c = leaf_count(side);
        int balance = std::min(c, total - c);
        if (balance > best_balance) {
            best_balance = balance;
            best_edge = id;
            best_side = side;
        }
    }
    if (best_edge < 0 || best_balance < 1) throw postcondition_error("branch split found no separating edge");

    VertexSet other = set_minus(nodes, best_side);
    Ends cut = d.shape.ends(best_edge);
    int root1 = best_side.count(cut.u) ? cut.u : cut.v;
    int root2 = other.count(cut.u) ? cut.u : cut.v;
    EdgeSet e1, e2;
    for (int v : best_side)
        if (auto it = d.leaf_map.find(v); it != d.leaf_map.end()) e1.insert(it->second);
    e2 = set_minus(g.edge_ids(), e1);
    VertexSet v1 = ends_of_edge_set(g, e1);
    VertexSet v2 = set_or(ends_of_edge_set(g, e2), set_minus(g.vertices(), v1));
    VertexSet shared = set_and(v1, v2);
    SourcedGraph gamma1{g.subgraph(v1, e1), set_or(shared, set_and(gamma.sources, v1))};
    SourcedGraph gamma2{g.subgraph(v2, e2), set_or(shared, set_and(gamma.sources, v2))};
    return rec_branch_node(gamma, branch_rec(gamma1, d, best_side, root1), branch_rec(gamma2, d, other, root2));
}

}  // namespace

RecBranchDec branch_to_recursive(const BranchDec& d, const SourcedGraph& gamma) {
    require_valid(validate_branch_dec(d, gamma.graph), "branch decomposition");
    check_sourced(gamma);
    return branch_rec(gamma, d, d.shape.vertices(), -1);
}

BranchDec branch_from_recursive(const RecBranchDec& t) {
    BranchDec out;
    std::function<int(const RecBranchDec&)> build = [&](const RecBranchDec& s) -> int {
        if (!s || s->kind == RecBranchNode::Kind::empty) return -1;
        if (s->kind == RecBranchNode::Kind::leaf) {
            int id = out.shape.next_vertex_id();
            out.shape.add_vertex(id);
            out.leaf_map[id] = *s->gamma.graph.edge_ids().begin();
            return id;
        }
        int a = build(s->left), b = build(s->right);
        if (a < 0) return b;
        if (b < 0) return a;
        int id = out.shape.next_vertex_id();
        out.shape.add_vertex(id);
        out.shape.add_edge(id, a);
        out.shape.add_edge(id, b);
        return id;
    };
    build(t);
    return out;
}

}  // namespace mw
