#include "monowidth/oracles.hpp"

#include <bit>
#include <cstdint>
#include <unordered_map>

namespace mw {

namespace {

using Mask = std::uint32_t;

Mask bit(int i) { return Mask{1} << i; }
int count(Mask m) { return std::popcount(m); }

// Vertices renumbered 0..n-1; adjacency ignores loops.
struct Indexed {
    std::vector<int> orig;
    std::vector<Mask> adj;
    struct E {
        int id, a, b;
    };
    std::vector<E> edges;

    explicit Indexed(const Graph& g) {
        std::map<int, int> idx;
        for (int v : g.vertices()) {
            idx.emplace(v, static_cast<int>(orig.size()));
            orig.push_back(v);
        }
        adj.assign(orig.size(), 0);
        for (const auto& [id, en] : g.edges()) {
            int a = idx.at(en.u), b = idx.at(en.v);
            edges.push_back({id, a, b});
            if (a != b) {
                adj[a] |= bit(b);
                adj[b] |= bit(a);
            }
        }
    }

    int n() const { return static_cast<int>(orig.size()); }

    Mask neighbours(Mask s) const {
        Mask out = 0;
        for (int i = 0; i < n(); ++i)
            if (s & bit(i)) out |= adj[i];
        return out;
    }

    VertexSet to_set(Mask m) const {
        VertexSet out;
        for (int i = 0; i < n(); ++i)
            if (m & bit(i)) out.insert(orig[i]);
        return out;
    }

    // Components of the subgraph induced on s.
    std::vector<Mask> components(Mask s) const {
        std::vector<Mask> out;
        while (s) {
            Mask c = s & (~s + 1), grown = 0;
            while (c != grown) {
                grown = c;
                c |= neighbours(c) & s;
            }
            out.push_back(c);
            s &= ~c;
        }
        return out;
    }

    // The graph a (remaining vertices, sources) state decomposes: vertices u,
    // and the edges inside u that are not inside x.
    SourcedGraph state_graph(Mask u, Mask x) const {
        SourcedGraph sg;
        for (int i = 0; i < n(); ++i)
            if (u & bit(i)) sg.graph.add_vertex(orig[i]);
        for (const auto& e : edges) {
            Mask ends = bit(e.a) | bit(e.b);
            if ((ends & u) == ends && (ends & x) != ends) sg.graph.add_edge(e.id, orig[e.a], orig[e.b]);
        }
        sg.sources = to_set(x);
        return sg;
    }
};

void check_limits(const Graph& g, OracleLimits limits, bool vertices) {
    if (vertices && static_cast<int>(g.num_vertices()) > std::min(limits.max_vertices, 15))
        throw refusal_error("oracle refuses graphs with more than " + std::to_string(limits.max_vertices) +
                            " vertices");
    if (!vertices && static_cast<int>(g.num_edges()) > std::min(limits.max_edges, 20))
        throw refusal_error("oracle refuses graphs with more than " + std::to_string(limits.max_edges) + " edges");
}

std::uint32_t key(Mask u, Mask x) { return (u << 16) | x; }

class TreeSearch {
public:
    explicit TreeSearch(const Indexed& ix) : ix_(ix) {}

    int width(Mask u, Mask x) { return solve(u, x).width; }

    RecTreeDec build(Mask u, Mask x) {
        if (!u) return nullptr;
        const Choice& c = solve(u, x);
        Mask r = u & ~c.bag;
        Mask r2 = r & ~c.r1;
        return rec_tree_node(ix_.state_graph(u, x), ix_.to_set(c.bag), child(c.r1, c.bag), child(r2, c.bag));
    }

private:
    struct Choice {
        int width;
        Mask bag, r1;
    };
    const Indexed& ix_;
    std::unordered_map<std::uint32_t, Choice> memo_;

    RecTreeDec child(Mask r, Mask bag) {
        if (!r) return nullptr;
        Mask xi = ix_.neighbours(r) & bag;
        return build(r | xi, xi);
    }

    const Choice& solve(Mask u, Mask x) {
        if (auto it = memo_.find(key(u, x)); it != memo_.end()) return it->second;
        Choice best{u ? 1 << 20 : 0, u, 0};
        if (u) {
            Mask rest = u & ~x;
            // Every subset of the non-sources, the empty one included.
            for (Mask sub = rest;; sub = (sub - 1) & rest) {
                Mask bag = x | sub;
                if (bag && count(bag) < best.width) try_bag(u, x, bag, best);
                if (!sub) break;
            }
        }
        return memo_.emplace(key(u, x), best).first->second;
    }

    void try_bag(Mask u, Mask x, Mask bag, Choice& best) {
        Mask r = u & ~bag;
        std::vector<Mask> comps = ix_.components(r);
        std::size_t c = comps.size();
        if (c == 0) {
            best = {count(bag), bag, 0};
            return;
        }
        // The first component always goes to the left child.
        for (std::uint32_t g = 1; g < (1u << c); g += 2) {
            Mask r1 = 0;
            for (std::size_t i = 0; i < c; ++i)
                if ((g >> i) & 1) r1 |= comps[i];
            Mask r2 = r & ~r1;
            int w = count(bag);
            bool loops = false;
            for (Mask ri : {r1, r2}) {
                if (!ri || w >= best.width) continue;
                Mask xi = ix_.neighbours(ri) & bag;
                if ((ri | xi) == u && xi == x) {
                    loops = true;
                    break;
                }
                w = std::max(w, solve(ri | xi, xi).width);
            }
            if (!loops && w < best.width) best = {w, bag, r1};
        }
    }
};

class PathSearch {
public:
    explicit PathSearch(const Indexed& ix) : ix_(ix) {}

    int width(Mask u, Mask x) { return solve(u, x).width; }

    RecPathDec build(Mask u, Mask x) {
        if (!u) return nullptr;
        const Choice& c = solve(u, x);
        Mask r = u & ~c.bag;
        Mask xt = ix_.neighbours(r) & c.bag;
        return rec_path_node(ix_.state_graph(u, x), ix_.to_set(c.bag), r ? build(r | xt, xt) : nullptr);
    }

private:
    struct Choice {
        int width;
        Mask bag;
    };
    const Indexed& ix_;
    std::unordered_map<std::uint32_t, Choice> memo_;

    const Choice& solve(Mask u, Mask x) {
        if (auto it = memo_.find(key(u, x)); it != memo_.end()) return it->second;
        Choice best{u ? 1 << 20 : 0, u};
        if (u) {
            Mask rest = u & ~x;
            for (Mask sub = rest;; sub = (sub - 1) & rest) {
                Mask bag = x | sub;
                if (bag && count(bag) < best.width) {
                    Mask r = u & ~bag;
                    Mask xt = ix_.neighbours(r) & bag;
                    if (!r) {
                        best = {count(bag), bag};
                    } else if (!((r | xt) == u && xt == x)) {
                        int w = std::max(count(bag), solve(r | xt, xt).width);
                        if (w < best.width) best = {w, bag};
                    }
                }
                if (!sub) break;
            }
        }
        return memo_.emplace(key(u, x), best).first->second;
    }
};

}  // namespace

TreeWidthResult exact_treewidth(const Graph& g, OracleLimits limits) {
    check_limits(g, limits, true);
    Indexed ix(g);
    Mask all = static_cast<Mask>((1u << ix.n()) - 1);
    TreeSearch s(ix);
    TreeWidthResult r;
    r.width = s.width(all, 0);
    r.recursive = s.build(all, 0);
    r.witness = tree_from_recursive(r.recursive);
    if (!validate_tree_dec(r.witness, g) || dec_width(r.witness) != r.width)
        throw postcondition_error("tree width oracle produced a bad witness");
    return r;
}

PathWidthResult exact_pathwidth(const Graph& g, OracleLimits limits) {
    check_limits(g, limits, true);
    Indexed ix(g);
    Mask all = static_cast<Mask>((1u << ix.n()) - 1);
    PathSearch s(ix);
    PathWidthResult r;
    r.width = s.width(all, 0);
    r.recursive = s.build(all, 0);
    r.witness = path_from_recursive(r.recursive);
    if (!validate_path_dec(r.witness, g) || dec_width(r.witness) != r.width)
        throw postcondition_error("path width oracle produced a bad witness");
    return r;
}

BranchWidthResult exact_branchwidth(const Graph& g, OracleLimits limits) {
    check_limits(g, limits, false);
    Indexed ix(g);
    int m = static_cast<int>(ix.edges.size());
    BranchWidthResult r;
    if (m == 0) return r;
    if (m == 1) {
        r.witness.shape.add_vertex(0);
        r.witness.leaf_map[0] = ix.edges[0].id;
        return r;
    }
    Mask full = static_cast<Mask>((1u << m) - 1);
    std::vector<Mask> ends(std::size_t{1} << m, 0);
    for (Mask s = 1; s <= full; ++s) {
        int low = std::countr_zero(s);
        ends[s] = ends[s & (s - 1)] | bit(ix.edges[low].a) | bit(ix.edges[low].b);
    }
    auto order = [&](Mask s) { return count(ends[s] & ends[full & ~s]); };

    std::vector<int> best(std::size_t{1} << m, -1);
    std::vector<Mask> split(std::size_t{1} << m, 0);
    // best[s]: width of the cheapest rooted binary tree with leaves s, counting
    // the orders of its internal tree edges taken in the whole graph.
    auto solve = [&](auto&& self, Mask s) -> int {
        if (best[s] >= 0) return best[s];
        if (count(s) <= 1) return best[s] = 0;
        Mask low = s & (~s + 1);
        Mask rest = s & ~low;
        int w = 1 << 20;
        Mask pick = 0;
        // Splits with the lowest edge on the first side; the second side
        // must be non-empty.
        for (Mask sub = rest;; sub = (sub - 1) & rest) {
            Mask s1 = low | sub, s2 = s & ~s1;
            if (s2) {
                int c = std::max(order(s1), order(s2));
                if (c < w) {
                    c = std::max({c, self(self, s1), self(self, s2)});
                    if (c < w) {
                        w = c;
                        pick = s1;
                    }
                }
            }
            if (!sub) break;
        }
        split[s] = pick;
        return best[s] = w;
    };
    Mask tail = full & ~Mask{1};
    r.width = std::max(order(1), solve(solve, tail));

    BranchDec& d = r.witness;
    int next = 0;
    auto build = [&](auto&& self, Mask s) -> int {
        int id = next++;
        d.shape.add_vertex(id);
        if (count(s) == 1) {
            d.leaf_map[id] = ix.edges[std::countr_zero(s)].id;
            return id;
        }
        Mask s1 = split[s];
        d.shape.add_edge(id, self(self, s1));
        d.shape.add_edge(id, self(self, s & ~s1));
        return id;
    };
    int root_leaf = next++;
    d.shape.add_vertex(root_leaf);
    d.leaf_map[root_leaf] = ix.edges[0].id;
    d.shape.add_edge(root_leaf, build(build, tail));
    if (!validate_branch_dec(d, g) || dec_width(d, g) != r.width)
        throw postcondition_error("branch width oracle produced a bad witness");
    return r;
}

Widths exact_widths(const Graph& g, OracleLimits limits) {
    return {exact_treewidth(g, limits).width, exact_pathwidth(g, limits).width, exact_branchwidth(g, limits).width};
}

}  // namespace mw
