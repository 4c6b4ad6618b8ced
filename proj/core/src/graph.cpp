#include "monowidth/graph.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace mw {

void Graph::add_vertex(int v) {
    if (v < 0) throw std::domain_error("negative vertex id " + std::to_string(v));
    vertices_.insert(v);
}

int Graph::add_edge(int u, int v) {
    int id = next_edge_id();
    add_edge(id, u, v);
    return id;
}

void Graph::add_edge(int id, int u, int v) {
    if (id < 0) throw std::domain_error("negative edge id " + std::to_string(id));
    if (!has_vertex(u) || !has_vertex(v))
        throw std::domain_error("edge " + std::to_string(id) + " has an endpoint outside the graph");
    if (has_edge(id)) throw std::domain_error("duplicate edge id " + std::to_string(id));
    edges_[id] = Ends{std::min(u, v), std::max(u, v)};
}

EdgeSet Graph::edge_ids() const {
    EdgeSet out;
    for (const auto& [id, _] : edges_) out.insert(out.end(), id);
    return out;
}

Ends Graph::ends(int e) const {
    auto it = edges_.find(e);
    if (it == edges_.end()) throw std::domain_error("unknown edge id " + std::to_string(e));
    return it->second;
}

VertexSet Graph::ends_set(int e) const {
    Ends en = ends(e);
    return en.loop() ? VertexSet{en.u} : VertexSet{en.u, en.v};
}

VertexSet Graph::neighbours(int v) const {
    VertexSet out;
    for (const auto& [_, en] : edges_) {
        if (en.u == v) out.insert(en.v);
        if (en.v == v) out.insert(en.u);
    }
    return out;
}

int Graph::degree(int v) const {
    int d = 0;
    for (const auto& [_, en] : edges_) d += (en.u == v) + (en.v == v);
    return d;
}

Graph Graph::subgraph(const VertexSet& vs, const EdgeSet& es) const {
    Graph out;
    for (int v : vs) {
        if (!has_vertex(v)) throw std::domain_error("unknown vertex id " + std::to_string(v));
        out.add_vertex(v);
    }
    for (int e : es) {
        Ends en = ends(e);
        out.add_edge(e, en.u, en.v);
    }
    return out;
}

Graph Graph::induced(const VertexSet& vs) const {
    Graph out;
    for (int v : vs) {
        if (!has_vertex(v)) throw std::domain_error("unknown vertex id " + std::to_string(v));
        out.add_vertex(v);
    }
    for (const auto& [id, en] : edges_)
        if (vs.count(en.u) && vs.count(en.v)) out.add_edge(id, en.u, en.v);
    return out;
}

void check_sourced(const SourcedGraph& sg) {
    for (int x : sg.sources)
        if (!sg.graph.has_vertex(x))
            throw precondition_error("source " + std::to_string(x) + " is not a vertex");
}

int FiniteMap::operator()(int x) const {
    auto it = table.find(x);
    if (it == table.end()) throw std::domain_error("map undefined at " + std::to_string(x));
    return it->second;
}

VertexSet FiniteMap::domain() const {
    VertexSet out;
    for (const auto& [k, _] : table) out.insert(out.end(), k);
    return out;
}

VertexSet FiniteMap::image() const {
    VertexSet out;
    for (const auto& [_, v] : table) out.insert(v);
    return out;
}

void FiniteMap::check() const {
    for (const auto& [k, v] : table)
        if (!codomain.count(v))
            throw std::domain_error("map sends " + std::to_string(k) + " outside its codomain");
}

FiniteMap FiniteMap::identity(const VertexSet& s) {
    FiniteMap m;
    m.codomain = s;
    for (int x : s) m.table[x] = x;
    return m;
}

FiniteMap FiniteMap::from_positions(const std::vector<int>& leg, const VertexSet& codomain) {
    FiniteMap m;
    m.codomain = codomain;
    for (std::size_t i = 0; i < leg.size(); ++i) m.table[static_cast<int>(i)] = leg[i];
    return m;
}

int GraphMorphism::v(int x) const {
    auto it = vmap.find(x);
    if (it == vmap.end()) throw std::domain_error("morphism undefined at vertex " + std::to_string(x));
    return it->second;
}

int GraphMorphism::e(int x) const {
    auto it = emap.find(x);
    if (it == emap.end()) throw std::domain_error("morphism undefined at edge " + std::to_string(x));
    return it->second;
}

VertexSet GraphMorphism::image_vertices() const {
    VertexSet out;
    for (const auto& [_, y] : vmap) out.insert(y);
    return out;
}

EdgeSet GraphMorphism::image_edges() const {
    EdgeSet out;
    for (const auto& [_, y] : emap) out.insert(y);
    return out;
}

bool GraphMorphism::well_formed() const {
    if (vmap.size() != domain.num_vertices() || emap.size() != domain.num_edges()) return false;
    for (int x : domain.vertices()) {
        auto it = vmap.find(x);
        if (it == vmap.end() || !codomain.has_vertex(it->second)) return false;
    }
    for (const auto& [id, en] : domain.edges()) {
        auto it = emap.find(id);
        if (it == emap.end() || !codomain.has_edge(it->second)) return false;
        VertexSet mapped{vmap.at(en.u), vmap.at(en.v)};
        if (mapped != codomain.ends_set(it->second)) return false;
    }
    return true;
}

GraphMorphism identity_morphism(const Graph& g) {
    GraphMorphism m{g, g, {}, {}};
    for (int v : g.vertices()) m.vmap[v] = v;
    for (const auto& [e, _] : g.edges()) m.emap[e] = e;
    return m;
}

GraphMorphism compose_morphisms(const GraphMorphism& f, const GraphMorphism& g) {
    GraphMorphism m{f.domain, g.codomain, {}, {}};
    for (const auto& [x, y] : f.vmap) m.vmap[x] = g.v(y);
    for (const auto& [x, y] : f.emap) m.emap[x] = g.e(y);
    return m;
}

GraphMorphism inverse_isomorphism(const GraphMorphism& f) {
    GraphMorphism m{f.codomain, f.domain, {}, {}};
    for (const auto& [x, y] : f.vmap) m.vmap[y] = x;
    for (const auto& [x, y] : f.emap) m.emap[y] = x;
    return m;
}

VertexSet ends_of_edge_set(const Graph& g, const EdgeSet& es) {
    VertexSet out;
    for (int e : es) {
        Ends en = g.ends(e);
        out.insert(en.u);
        out.insert(en.v);
    }
    return out;
}

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    // The smaller index stays the representative.
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (b < a) std::swap(a, b);
        parent[b] = a;
    }
};

}  // namespace

Colimit graph_pushout(const Graph& g1, const Graph& g2, const FiniteMap& l1, const FiniteMap& l2) {
    if (l1.domain() != l2.domain()) throw std::domain_error("pushout legs have different domains");
    for (const auto& [y, v] : l1.table)
        if (!g1.has_vertex(v))
            throw std::domain_error("left leg sends " + std::to_string(y) + " outside the first graph");
    for (const auto& [y, v] : l2.table)
        if (!g2.has_vertex(v))
            throw std::domain_error("right leg sends " + std::to_string(y) + " outside the second graph");

    std::map<int, int> idx1, idx2;
    int n = 0;
    for (int v : g1.vertices()) idx1[v] = n++;
    for (int v : g2.vertices()) idx2[v] = n++;

    UnionFind uf(n);
    for (const auto& [y, v] : l1.table) uf.unite(idx1.at(v), idx2.at(l2.table.at(y)));

    // Representatives are class minima, so ascending index order numbers the
    // classes by first appearance.
    std::vector<int> cls(n, -1);
    int k = 0;
    Colimit out;
    for (int i = 0; i < n; ++i) {
        int r = uf.find(i);
        if (cls[r] < 0) {
            cls[r] = k++;
            out.apex.add_vertex(cls[r]);
        }
        cls[i] = cls[r];
    }

    out.in1.domain = g1;
    out.in2.domain = g2;
    for (const auto& [v, i] : idx1) out.in1.vmap[v] = cls[i];
    for (const auto& [v, i] : idx2) out.in2.vmap[v] = cls[i];
    int eid = 0;
    for (const auto& [e, en] : g1.edges()) {
        out.apex.add_edge(eid, out.in1.vmap[en.u], out.in1.vmap[en.v]);
        out.in1.emap[e] = eid++;
    }
    for (const auto& [e, en] : g2.edges()) {
        out.apex.add_edge(eid, out.in2.vmap[en.u], out.in2.vmap[en.v]);
        out.in2.emap[e] = eid++;
    }
    out.in1.codomain = out.apex;
    out.in2.codomain = out.apex;
    return out;
}

Colimit graph_pushout(const Graph& g1, const Graph& g2, const std::vector<int>& l1,
                      const std::vector<int>& l2) {
    if (l1.size() != l2.size()) throw std::domain_error("pushout legs have different lengths");
    return graph_pushout(g1, g2, FiniteMap::from_positions(l1, g1.vertices()),
                         FiniteMap::from_positions(l2, g2.vertices()));
}

Colimit graph_coproduct(const Graph& g1, const Graph& g2) {
    return graph_pushout(g1, g2, FiniteMap{}, FiniteMap{});
}

std::vector<VertexSet> connected_components(const Graph& g) {
    std::map<int, int> idx;
    std::vector<int> ids;
    for (int v : g.vertices()) {
        idx[v] = static_cast<int>(ids.size());
        ids.push_back(v);
    }
    UnionFind uf(static_cast<int>(ids.size()));
    for (const auto& [_, en] : g.edges()) uf.unite(idx[en.u], idx[en.v]);
    std::map<int, VertexSet> by_root;
    for (std::size_t i = 0; i < ids.size(); ++i) by_root[uf.find(static_cast<int>(i))].insert(ids[i]);
    std::vector<VertexSet> out;
    for (auto& [_, s] : by_root) out.push_back(std::move(s));
    return out;
}

bool is_connected(const Graph& g) { return connected_components(g).size() == 1; }

bool is_tree(const Graph& g) {
    if (g.num_vertices() == 0) return false;
    for (const auto& [_, en] : g.edges())
        if (en.loop()) return false;
    return g.num_edges() + 1 == g.num_vertices() && is_connected(g);
}

bool is_subcubic_tree(const Graph& g) {
    if (!is_tree(g)) return false;
    for (int v : g.vertices())
        if (g.neighbours(v).size() > 3) return false;
    return true;
}

bool is_epimorphism(const GraphMorphism& m) {
    return m.image_vertices() == m.codomain.vertices() && m.image_edges() == m.codomain.edge_ids();
}

namespace {

// Edge multiplicities between unordered vertex pairs.
std::map<std::pair<int, int>, std::vector<int>> edge_bundles(const Graph& g) {
    std::map<std::pair<int, int>, std::vector<int>> out;
    for (const auto& [id, en] : g.edges()) out[{en.u, en.v}].push_back(id);
    return out;
}

int loops_at(const Graph& g, int v) {
    int c = 0;
    for (const auto& [_, en] : g.edges()) c += (en.u == v && en.v == v);
    return c;
}

}  // namespace

std::optional<GraphMorphism> graph_isomorphic(const Graph& g1, const Graph& g2,
                                              const std::map<int, int>& fixed) {
    if (g1.num_vertices() != g2.num_vertices() || g1.num_edges() != g2.num_edges()) return std::nullopt;

    auto b1 = edge_bundles(g1);
    auto b2 = edge_bundles(g2);
    auto mult = [](const std::map<std::pair<int, int>, std::vector<int>>& b, int a, int c) {
        auto it = b.find({std::min(a, c), std::max(a, c)});
        return it == b.end() ? 0 : static_cast<int>(it->second.size());
    };

    std::map<int, std::pair<int, int>> inv1, inv2;
    for (int v : g1.vertices()) inv1[v] = {g1.degree(v), loops_at(g1, v)};
    for (int v : g2.vertices()) inv2[v] = {g2.degree(v), loops_at(g2, v)};
    {
        std::vector<std::pair<int, int>> s1, s2;
        for (auto& [_, x] : inv1) s1.push_back(x);
        for (auto& [_, x] : inv2) s2.push_back(x);
        std::sort(s1.begin(), s1.end());
        std::sort(s2.begin(), s2.end());
        if (s1 != s2) return std::nullopt;
    }

    // Pinned vertices first, then by decreasing degree.
    std::vector<int> order(g1.vertices().begin(), g1.vertices().end());
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        bool fa = fixed.count(a), fb = fixed.count(b);
        if (fa != fb) return fa;
        return inv1[a].first > inv1[b].first;
    });

    std::map<int, int> phi;
    std::set<int> used;
    std::function<bool(std::size_t)> extend = [&](std::size_t i) -> bool {
        if (i == order.size()) return true;
        int a = order[i];
        auto try_candidate = [&](int c) -> bool {
            if (used.count(c) || inv1[a] != inv2[c]) return false;
            for (const auto& [x, y] : phi)
                if (mult(b1, a, x) != mult(b2, c, y)) return false;
            phi[a] = c;
            used.insert(c);
            if (extend(i + 1)) return true;
            phi.erase(a);
            used.erase(c);
            return false;
        };
        auto f = fixed.find(a);
        if (f != fixed.end()) return g2.has_vertex(f->second) && try_candidate(f->second);
        for (int c : g2.vertices())
            if (try_candidate(c)) return true;
        return false;
    };
    for (const auto& [a, _] : fixed)
        if (!g1.has_vertex(a)) return std::nullopt;
    if (!extend(0)) return std::nullopt;

    GraphMorphism m{g1, g2, phi, {}};
    for (const auto& [key, es] : b1) {
        int x = phi[key.first], y = phi[key.second];
        const auto& target = b2.at({std::min(x, y), std::max(x, y)});
        for (std::size_t i = 0; i < es.size(); ++i) m.emap[es[i]] = target[i];
    }
    return m;
}

VertexSet image_union(const FiniteMap& f, const FiniteMap& g) {
    if (f.codomain != g.codomain) throw std::domain_error("image_union: codomains differ");
    VertexSet out = f.image();
    for (int x : g.image()) out.insert(x);
    return out;
}

VertexSet image_intersection(const FiniteMap& f, const FiniteMap& g) {
    if (f.codomain != g.codomain) throw std::domain_error("image_intersection: codomains differ");
    VertexSet a = f.image(), b = g.image(), out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
    return out;
}

namespace {

// Best relabelling found so far: the lexicographically smallest code over all
// orderings that respect the (degree, loops) cells.
struct Canon {
    std::vector<int> best_code;
    std::vector<int> best_order;
};

std::vector<int> code_for(const std::vector<int>& order,
                          const std::map<std::pair<int, int>, std::vector<int>>& b) {
    std::vector<int> code;
    std::size_t n = order.size();
    code.reserve(n * (n + 1) / 2);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            int a = order[i], c = order[j];
            auto it = b.find({std::min(a, c), std::max(a, c)});
            code.push_back(it == b.end() ? 0 : static_cast<int>(it->second.size()));
        }
    return code;
}

Canon canonicalise(const Graph& g) {
    auto b = edge_bundles(g);
    std::map<std::pair<int, int>, std::vector<int>> cells;
    for (int v : g.vertices()) cells[{-g.degree(v), -loops_at(g, v)}].push_back(v);
    std::vector<std::vector<int>> parts;
    for (auto& [_, vs] : cells) parts.push_back(vs);

    Canon c;
    std::vector<int> order;
    std::function<void(std::size_t)> rec = [&](std::size_t p) {
        if (p == parts.size()) {
            auto code = code_for(order, b);
            if (c.best_order.empty() || code < c.best_code) {
                c.best_code = code;
                c.best_order = order;
            }
            return;
        }
        std::vector<int> cell = parts[p];
        std::sort(cell.begin(), cell.end());
        do {
            order.insert(order.end(), cell.begin(), cell.end());
            rec(p + 1);
            order.resize(order.size() - cell.size());
        } while (std::next_permutation(cell.begin(), cell.end()));
    };
    rec(0);
    return c;
}

}  // namespace

std::string canonical_form(const Graph& g) {
    Canon c = canonicalise(g);
    std::ostringstream os;
    os << g.num_vertices() << ':' << g.num_edges() << ':';
    for (int x : c.best_code) os << x;
    return os.str();
}

Graph canonical_graph(const Graph& g) {
    Canon c = canonicalise(g);
    std::map<int, int> relabel;
    for (std::size_t i = 0; i < c.best_order.size(); ++i) relabel[c.best_order[i]] = static_cast<int>(i);
    Graph out;
    for (std::size_t i = 0; i < c.best_order.size(); ++i) out.add_vertex(static_cast<int>(i));
    std::vector<Ends> es;
    for (const auto& [_, en] : g.edges()) {
        int a = relabel[en.u], b = relabel[en.v];
        es.push_back(Ends{std::min(a, b), std::max(a, b)});
    }
    std::sort(es.begin(), es.end());
    for (const auto& en : es) out.add_edge(en.u, en.v);
    return out;
}

Graph make_path(int n) {
    Graph g;
    for (int i = 0; i < n; ++i) g.add_vertex(i);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

Graph make_cycle(int n) {
    Graph g = make_path(n);
    if (n >= 2) g.add_edge(0, n - 1);
    return g;
}

Graph make_complete(int n) {
    Graph g;
    for (int i = 0; i < n; ++i) g.add_vertex(i);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

Graph make_star(int leaves) {
    Graph g;
    g.add_vertex(0);
    for (int i = 1; i <= leaves; ++i) {
        g.add_vertex(i);
        g.add_edge(0, i);
    }
    return g;
}

Graph make_edge() { return make_path(2); }

std::string to_string(const VertexSet& s) {
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (int x : s) {
        if (!first) os << ',';
        os << x;
        first = false;
    }
    os << '}';
    return os.str();
}

}  // namespace mw
