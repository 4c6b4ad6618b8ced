#pragma once

#include <random>
#include <vector>

#include "monowidth/cospan.hpp"
#include "monowidth/decomp.hpp"
#include "monowidth/graph.hpp"
#include "monowidth/graph_decomp.hpp"

namespace mw::testing {

using Rng = std::mt19937;

// Vertices 0..n-1 with n in [0, max_v] and up to max_e edges. Loops and
// parallel edges only when `multi` is set.
Graph random_graph(Rng& rng, int max_v, int max_e, bool multi = false);
// Random cospan with the given arities; legs are arbitrary functions.
Cospan random_cospan(Rng& rng, int dom, int cod, int max_v = 4, int max_e = 4);
VertexSet random_subset(Rng& rng, const VertexSet& s);

// The empty graph followed by the catalog up to max_v vertices.
std::vector<Graph> catalog_with_empty(int max_v, int max_e);

// Every valid tree decomposition whose shape has at most three nodes
// (vertices 0..k-1). Bags range over all subsets of V.
std::vector<TreeDec> all_small_tree_decs(const Graph& g);
// Every valid path decomposition with at most three bags.
std::vector<PathDec> all_small_path_decs(const Graph& g);
// Every branch decomposition on a tree whose inner nodes have degree three,
// one per leaf-labelled tree.
std::vector<BranchDec> all_branch_decs(const Graph& g);

// Independent widths in the convention without "-1".
int treewidth_by_elimination(const Graph& g);
int pathwidth_by_vertex_separation(const Graph& g);
int branchwidth_by_enumeration(const Graph& g);

// Atoms f : 1 -> 2 and g : 2 -> 1 of weight 2, either bare symbols or
// cospans (f a pendant edge, g an edge that is merged back).
struct ExampleAtoms {
    DecompTree f;
    DecompTree g;
};
ExampleAtoms symbolic_atoms();
ExampleAtoms cospan_atoms();

// f ;2 (((f ;2 g) * (f ;2 g)) ;2 g)
DecompTree example_decomposition(const ExampleAtoms& a);
// h_0 = f ; g and h_{n+1} = f ; (h_n * h_n) ; g, decomposed recursively
// (balanced) or by cutting the 2^n wires feeding the innermost copies of
// h_0 (naive).
DecompTree h_balanced(const ExampleAtoms& a, int n);
DecompTree h_naive(const ExampleAtoms& a, int n);

}  // namespace mw::testing
