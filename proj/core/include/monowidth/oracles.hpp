#pragma once

#include <optional>
#include <string>
#include <vector>

#include "monowidth/graph.hpp"
#include "monowidth/graph_decomp.hpp"

namespace mw {

struct OracleLimits {
    int max_vertices = 8;   // tree and path width
    int max_edges = 7;      // branch width
};

struct TreeWidthResult {
    int width = 0;
    TreeDec witness;
    RecTreeDec recursive;   // decomposes (G, {})
};

struct PathWidthResult {
    int width = 0;
    PathDec witness;
    RecPathDec recursive;
};

struct BranchWidthResult {
    int width = 0;
    BranchDec witness;
};

// Exact widths by exhaustive search; refusal_error above the limits. Tree and
// path width minimise over recursive decompositions, memoised on the pair
// (remaining vertices, sources). Branch width minimises over rooted splits of
// the edge set.
TreeWidthResult exact_treewidth(const Graph& g, OracleLimits limits = {});
PathWidthResult exact_pathwidth(const Graph& g, OracleLimits limits = {});
BranchWidthResult exact_branchwidth(const Graph& g, OracleLimits limits = {});

// All simple graphs with 1..max_v vertices and at most max_e edges, one per
// isomorphism class, ordered by vertex count, edge count, then canonical
// form. Each entry is the canonical representative (vertices 0..n-1).
std::vector<Graph> enumerate_graphs(int max_v, int max_e);

struct Widths {
    int tw = 0;
    int pw = 0;
    int bw = 0;
    bool operator==(const Widths&) const = default;
};

Widths exact_widths(const Graph& g, OracleLimits limits = {});

// JSON file of widths keyed by canonical_form. Missing or unreadable files
// start empty; save() rewrites the whole file.
class ResultsCache {
public:
    explicit ResultsCache(std::string path);

    std::optional<Widths> get(const Graph& g) const;
    void put(const Graph& g, const Widths& w);
    // Cached value, or computed with the oracles and stored.
    Widths widths(const Graph& g, OracleLimits limits = {});
    void save() const;
    std::size_t size() const { return entries_.size(); }

private:
    std::string path_;
    std::map<std::string, Widths> entries_;
};

}  // namespace mw
