#include "support.hpp"

#include <algorithm>
#include <numeric>

#include "monowidth/oracles.hpp"

namespace mw::testing {

Graph random_graph(Rng& rng, int max_v, int max_e, bool multi) {
    int n = std::uniform_int_distribution<int>(0, max_v)(rng);
    Graph g;
    for (int v = 0; v < n; ++v) g.add_vertex(v);
    if (n == 0) return g;
    int m = std::uniform_int_distribution<int>(0, max_e)(rng);
    std::uniform_int_distribution<int> pick(0, n - 1);
    for (int tries = 0; static_cast<int>(g.num_edges()) < m && tries < 200; ++tries) {
        int a = pick(rng), b = pick(rng);
        if (!multi) {
            if (a == b) continue;
            bool dup = false;
            for (const auto& [_, en] : g.edges()) dup |= en == Ends{std::min(a, b), std::max(a, b)};
            if (dup) continue;
        }
        g.add_edge(a, b);
    }
    return g;
}

Cospan random_cospan(Rng& rng, int dom, int cod, int max_v, int max_e) {
    Graph g;
    do {
        g = random_graph(rng, max_v, max_e, true);
    } while (g.num_vertices() == 0 && dom + cod > 0);
    std::uniform_int_distribution<int> pick(0, std::max<int>(0, static_cast<int>(g.num_vertices()) - 1));
    Cospan c{g, {}, {}};
    for (int i = 0; i < dom; ++i) c.left.push_back(pick(rng));
    for (int i = 0; i < cod; ++i) c.right.push_back(pick(rng));
    return c;
}

VertexSet random_subset(Rng& rng, const VertexSet& s) {
    VertexSet out;
    for (int v : s)
        if (rng() & 1) out.insert(v);
    return out;
}

std::vector<Graph> catalog_with_empty(int max_v, int max_e) {
    std::vector<Graph> out{Graph{}};
    for (auto& g : enumerate_graphs(max_v, max_e)) out.push_back(std::move(g));
    return out;
}

namespace {

std::vector<VertexSet> all_subsets(const VertexSet& s) {
    std::vector<int> v(s.begin(), s.end());
    std::vector<VertexSet> out;
    for (unsigned m = 0; m < (1u << v.size()); ++m) {
        VertexSet x;
        for (std::size_t i = 0; i < v.size(); ++i)
            if ((m >> i) & 1) x.insert(v[i]);
        out.push_back(x);
    }
    return out;
}

std::vector<Graph> small_shapes() {
    std::vector<Graph> out;
    Graph one;
    one.add_vertex(0);
    out.push_back(one);
    Graph two = one;
    two.add_vertex(1);
    two.add_edge(0, 1);
    out.push_back(two);
    for (int centre = 0; centre < 3; ++centre) {
        Graph three;
        for (int v = 0; v < 3; ++v) three.add_vertex(v);
        for (int v = 0; v < 3; ++v)
            if (v != centre) three.add_edge(centre, v);
        out.push_back(three);
    }
    return out;
}

}  // namespace

std::vector<TreeDec> all_small_tree_decs(const Graph& g) {
    std::vector<TreeDec> out;
    if (g.num_vertices() == 0) {
        out.push_back({});
        return out;
    }
    auto subsets = all_subsets(g.vertices());
    for (const Graph& shape : small_shapes()) {
        int k = static_cast<int>(shape.num_vertices());
        std::vector<std::size_t> idx(k, 0);
        while (true) {
            TreeDec d{shape, {}};
            for (int i = 0; i < k; ++i) d.bags[i] = subsets[idx[i]];
            if (validate_tree_dec(d, g)) out.push_back(d);
            int i = 0;
            while (i < k && ++idx[i] == subsets.size()) idx[i++] = 0;
            if (i == k) break;
        }
    }
    return out;
}

std::vector<PathDec> all_small_path_decs(const Graph& g) {
    std::vector<PathDec> out;
    if (g.num_vertices() == 0) {
        out.push_back({});
        return out;
    }
    auto subsets = all_subsets(g.vertices());
    for (int k = 1; k <= 3; ++k) {
        std::vector<std::size_t> idx(k, 0);
        while (true) {
            PathDec d;
            for (int i = 0; i < k; ++i) d.bags.push_back(subsets[idx[i]]);
            if (validate_path_dec(d, g)) out.push_back(d);
            int i = 0;
            while (i < k && ++idx[i] == subsets.size()) idx[i++] = 0;
            if (i == k) break;
        }
    }
    return out;
}

std::vector<BranchDec> all_branch_decs(const Graph& g) {
    std::vector<int> edges;
    for (int e : g.edge_ids()) edges.push_back(e);
    std::vector<BranchDec> out;
    if (edges.empty()) {
        out.push_back({});
        return out;
    }
    if (edges.size() == 1) {
        BranchDec d;
        d.shape.add_vertex(0);
        d.leaf_map[0] = edges[0];
        out.push_back(d);
        return out;
    }
    // Grow leaf-labelled ternary trees by subdividing an edge and hanging the
    // next leaf there.
    BranchDec start;
    start.shape.add_vertex(0);
    start.shape.add_vertex(1);
    start.shape.add_edge(0, 1);
    start.leaf_map = {{0, edges[0]}, {1, edges[1]}};
    std::vector<BranchDec> layer{start};
    for (std::size_t k = 2; k < edges.size(); ++k) {
        std::vector<BranchDec> next;
        for (const BranchDec& d : layer) {
            for (const auto& [id, en] : d.shape.edges()) {
                BranchDec e;
                int mid = d.shape.next_vertex_id(), leaf = mid + 1;
                for (int v : d.shape.vertices()) e.shape.add_vertex(v);
                e.shape.add_vertex(mid);
                e.shape.add_vertex(leaf);
                for (const auto& [id2, en2] : d.shape.edges())
                    if (id2 != id) e.shape.add_edge(en2.u, en2.v);
                e.shape.add_edge(en.u, mid);
                e.shape.add_edge(mid, en.v);
                e.shape.add_edge(mid, leaf);
                e.leaf_map = d.leaf_map;
                e.leaf_map[leaf] = edges[k];
                next.push_back(e);
            }
        }
        layer = std::move(next);
    }
    return layer;
}

int treewidth_by_elimination(const Graph& g) {
    std::vector<int> order(g.vertices().begin(), g.vertices().end());
    if (order.empty()) return 0;
    int best = 1 << 20;
    do {
        std::map<int, VertexSet> adj;
        for (int v : order) adj[v];
        for (const auto& [_, en] : g.edges())
            if (!en.loop()) adj[en.u].insert(en.v), adj[en.v].insert(en.u);
        int w = 0;
        for (int v : order) {
            VertexSet nb = adj[v];
            w = std::max(w, static_cast<int>(nb.size()));
            for (int a : nb) {
                adj[a].erase(v);
                for (int b : nb)
                    if (a != b) adj[a].insert(b);
            }
            adj.erase(v);
        }
        best = std::min(best, w + 1);
    } while (std::next_permutation(order.begin(), order.end()));
    return best;
}

int pathwidth_by_vertex_separation(const Graph& g) {
    std::vector<int> order(g.vertices().begin(), g.vertices().end());
    if (order.empty()) return 0;
    int best = 1 << 20;
    do {
        int w = 0;
        for (std::size_t i = 0; i < order.size(); ++i) {
            VertexSet prefix(order.begin(), order.begin() + static_cast<long>(i) + 1);
            int sep = 0;
            for (int u : prefix) {
                bool out = false;
                for (int x : g.neighbours(u)) out |= !prefix.count(x);
                sep += out;
            }
            w = std::max(w, sep);
        }
        best = std::min(best, w + 1);
    } while (std::next_permutation(order.begin(), order.end()));
    return best;
}

int branchwidth_by_enumeration(const Graph& g) {
    int best = 1 << 20;
    for (const BranchDec& d : all_branch_decs(g)) best = std::min(best, dec_width(d, g));
    return best;
}

ExampleAtoms symbolic_atoms() {
    return {DecompTree::leaf(make_atom("f", 1, 2, 2)), DecompTree::leaf(make_atom("g", 2, 1, 2))};
}

ExampleAtoms cospan_atoms() {
    Graph e = make_edge();
    return {DecompTree::leaf(cospan_atom("f", make_cospan(e, {0}, {0, 1}))),
            DecompTree::leaf(cospan_atom("g", make_cospan(e, {0, 1}, {0})))};
}

DecompTree example_decomposition(const ExampleAtoms& a) {
    DecompTree fg = DecompTree::compose(a.f, a.g);
    return DecompTree::compose(a.f, DecompTree::compose(DecompTree::tensor(fg, fg), a.g));
}

DecompTree h_balanced(const ExampleAtoms& a, int n) {
    if (n == 0) return DecompTree::compose(a.f, a.g);
    DecompTree h = h_balanced(a, n - 1);
    return DecompTree::compose(a.f, DecompTree::compose(DecompTree::tensor(h, h), a.g));
}

namespace {

DecompTree fan_out(const ExampleAtoms& a, int n) {
    if (n == 1) return a.f;
    DecompTree t = fan_out(a, n - 1);
    return DecompTree::compose(a.f, DecompTree::tensor(t, t));
}

DecompTree fan_in(const ExampleAtoms& a, int n) {
    if (n == 1) return a.g;
    DecompTree t = fan_in(a, n - 1);
    return DecompTree::compose(DecompTree::tensor(t, t), a.g);
}

}  // namespace

DecompTree h_naive(const ExampleAtoms& a, int n) {
    DecompTree h0 = DecompTree::compose(a.f, a.g);
    if (n == 0) return h0;
    std::vector<DecompTree> copies(std::size_t{1} << n, h0);
    return DecompTree::compose(fan_out(a, n), DecompTree::compose(tensor_all(copies), fan_in(a, n)));
}

}  // namespace mw::testing
