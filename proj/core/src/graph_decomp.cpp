#include <algorithm>

#include "monowidth/graph_decomp.hpp"
#include "set_util.hpp"

namespace mw {

using detail::set_and;
using detail::subset_of;

namespace {

std::string vs(const VertexSet& s) { return to_string(s); }

// Tree vertices reachable from `start` without crossing tree edge `cut`.
VertexSet side_of(const Graph& shape, int start, int cut) {
    VertexSet seen{start};
    std::vector<int> stack{start};
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        for (const auto& [id, en] : shape.edges()) {
            if (id == cut) continue;
            int y = en.u == x ? en.v : en.v == x ? en.u : -1;
            if (y >= 0 && seen.insert(y).second) stack.push_back(y);
        }
    }
    return seen;
}

// The vertices of the tree holding v must induce a connected subtree.
bool occurrences_connected(const Graph& shape, const std::map<int, VertexSet>& bags, int v) {
    VertexSet holders;
    for (const auto& [i, b] : bags)
        if (b.count(v)) holders.insert(i);
    if (holders.empty()) return true;
    return connected_components(shape.induced(holders)).size() == 1;
}

}  // namespace

VertexSet tree_leaves(const Graph& shape) {
    VertexSet out;
    for (int v : shape.vertices())
        if (shape.neighbours(v).size() <= 1) out.insert(v);
    return out;
}

Validation validate_tree_dec(const TreeDec& d, const Graph& g) {
    if (d.shape.num_vertices() == 0) {
        if (g.num_vertices() != 0) return Validation::fail("1", "empty shape for a non-empty graph");
        return Validation::pass();
    }
    if (!is_tree(d.shape)) return Validation::fail("shape", "shape is not a tree");
    for (int i : d.shape.vertices())
        if (!d.bags.count(i)) return Validation::fail("shape", "tree vertex " + std::to_string(i) + " has no bag");
    if (d.bags.size() != d.shape.num_vertices()) return Validation::fail("shape", "bag for a vertex outside the tree");
    VertexSet covered;
    for (const auto& [i, b] : d.bags) {
        if (!subset_of(b, g.vertices()))
            return Validation::fail("1", "bag " + std::to_string(i) + " = " + vs(b) + " is not inside V");
        covered.insert(b.begin(), b.end());
    }
    if (covered != g.vertices()) return Validation::fail("1", "bags miss some vertex of G");
    for (const auto& [e, _] : g.edges()) {
        VertexSet en = g.ends_set(e);
        bool ok = std::any_of(d.bags.begin(), d.bags.end(), [&](const auto& kv) { return subset_of(en, kv.second); });
        if (!ok) return Validation::fail("2", "no bag holds both ends of edge " + std::to_string(e));
    }
    for (int v : g.vertices())
        if (!occurrences_connected(d.shape, d.bags, v))
            return Validation::fail("3", "bags holding vertex " + std::to_string(v) + " are not connected");
    return Validation::pass();
}

Validation validate_path_dec(const PathDec& d, const Graph& g) {
    if (d.bags.empty()) {
        if (g.num_vertices() != 0) return Validation::fail("1", "no bags for a non-empty graph");
        return Validation::pass();
    }
    VertexSet covered;
    for (std::size_t i = 0; i < d.bags.size(); ++i) {
        if (!subset_of(d.bags[i], g.vertices()))
            return Validation::fail("1", "bag " + std::to_string(i) + " = " + vs(d.bags[i]) + " is not inside V");
        covered.insert(d.bags[i].begin(), d.bags[i].end());
    }
    if (covered != g.vertices()) return Validation::fail("1", "bags miss some vertex of G");
    for (const auto& [e, _] : g.edges()) {
        VertexSet en = g.ends_set(e);
        bool ok = std::any_of(d.bags.begin(), d.bags.end(), [&](const VertexSet& b) { return subset_of(en, b); });
        if (!ok) return Validation::fail("2", "no bag holds both ends of edge " + std::to_string(e));
    }
    for (int v : g.vertices()) {
        int first = -1, last = -1, count = 0;
        for (std::size_t i = 0; i < d.bags.size(); ++i)
            if (d.bags[i].count(v)) {
                if (first < 0) first = static_cast<int>(i);
                last = static_cast<int>(i);
                ++count;
            }
        if (count != last - first + 1)
            return Validation::fail("3", "bags holding vertex " + std::to_string(v) + " are not contiguous");
    }
    return Validation::pass();
}

Validation validate_branch_dec(const BranchDec& d, const Graph& g) {
    if (d.shape.num_vertices() == 0) {
        if (g.num_edges() != 0) return Validation::fail("bijection", "empty shape for a graph with edges");
        if (!d.leaf_map.empty()) return Validation::fail("bijection", "leaf map on an empty shape");
        return Validation::pass();
    }
    if (!is_subcubic_tree(d.shape)) return Validation::fail("shape", "shape is not a subcubic tree");
    VertexSet leaves = tree_leaves(d.shape);
    VertexSet mapped;
    EdgeSet hit;
    for (const auto& [leaf, e] : d.leaf_map) {
        mapped.insert(leaf);
        if (!g.has_edge(e)) return Validation::fail("bijection", "leaf " + std::to_string(leaf) + " maps to unknown edge");
        if (!hit.insert(e).second) return Validation::fail("bijection", "edge " + std::to_string(e) + " hit twice");
    }
    if (mapped != leaves) return Validation::fail("bijection", "leaf map domain is not the leaf set");
    if (hit != g.edge_ids()) return Validation::fail("bijection", "some edge has no leaf");
    return Validation::pass();
}

int dec_width(const TreeDec& d) {
    int w = 0;
    for (const auto& [_, b] : d.bags) w = std::max(w, static_cast<int>(b.size()));
    return w;
}

int dec_width(const PathDec& d) {
    int w = 0;
    for (const auto& b : d.bags) w = std::max(w, static_cast<int>(b.size()));
    return w;
}

int dec_width(const BranchDec& d, const Graph& g) {
    int w = 0;
    for (const auto& [e, _] : d.shape.edges()) w = std::max(w, edge_order(d, g, e));
    return w;
}

namespace {

void require_valid(const Validation& v, const char* what) {
    if (!v) throw precondition_error(std::string("invalid ") + what + " (clause " + v.clause + "): " + v.message);
}

}  // namespace

int width_of(const TreeDec& d, const Graph& g) {
    require_valid(validate_tree_dec(d, g), "tree decomposition");
    return dec_width(d);
}

int width_of(const PathDec& d, const Graph& g) {
    require_valid(validate_path_dec(d, g), "path decomposition");
    return dec_width(d);
}

int width_of(const BranchDec& d, const Graph& g) {
    require_valid(validate_branch_dec(d, g), "branch decomposition");
    return dec_width(d, g);
}

int edge_order(const BranchDec& d, const Graph& g, int tree_edge) {
    Ends te = d.shape.ends(tree_edge);
    VertexSet side = side_of(d.shape, te.u, tree_edge);
    EdgeSet a, b;
    for (const auto& [leaf, e] : d.leaf_map) (side.count(leaf) ? a : b).insert(e);
    return static_cast<int>(set_and(ends_of_edge_set(g, a), ends_of_edge_set(g, b)).size());
}

}  // namespace mw
