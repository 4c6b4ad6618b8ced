#pragma once

#include <map>
#include <vector>

#include "monowidth/cospan.hpp"
#include "monowidth/decomp.hpp"
#include "monowidth/graph_decomp.hpp"

namespace mw {

// Surjections from the apexes of a composable pair onto their images inside
// the apex of the composite. alpha_i.codomain is the image subgraph.
struct EpiWitness {
    GraphMorphism alpha1;
    GraphMorphism alpha2;
    Graph composite;
};

// Throws type_error on an arity mismatch. Checks that alpha_i only merges
// vertices hit by the shared boundary.
EpiWitness epis_from_composition(const Cospan& g1, const Cospan& g2);

// Push a decomposition of (G, X) through an epimorphism alpha : G -> H.
// Requires alpha surjective, injective on edges, and every pair of vertices it
// merges to share a bag. The result decomposes (H, alpha(X)).
RecTreeDec epi_to_dec_tree(const GraphMorphism& alpha, const RecTreeDec& t);
RecPathDec epi_to_dec_path(const GraphMorphism& alpha, const RecPathDec& t);

// Weights used for the copy, swap and identity atoms emitted by copy_mdec.
// `cospan` uses apex sizes; `symbolic` uses w(cp_X) = 2|X|, w(swap_{X,Y}) =
// |X| + |Y|, w(id_X) = |X|. Both carry cospans, so the result evaluates.
enum class CopyWeights { cospan, symbolic };

// d decomposes f : Y + X1 + ... + Xn + Z -> W. Returns a decomposition of
// (id_Y + cp_X + id_Z) ; (id + swap_{X,Z}) ; (f + id_X) where X = X1+...+Xn.
// The width bound max{wd(d), Y + Z + (n+1) max Xi} is checked.
DecompTree copy_mdec(const DecompTree& d, int y, const std::vector<int>& xs, int z,
                     CopyWeights weights = CopyWeights::cospan);

// Cospan atoms used by the translations.
DecompTree id_leaf(int n, CopyWeights weights = CopyWeights::cospan);
DecompTree copy_leaf(int n, CopyWeights weights = CopyWeights::cospan);
DecompTree swap_leaf(int n, int m, CopyWeights weights = CopyWeights::cospan);

// Right tree decomposition of <order -> G <- 0> for the recursive tree
// decomposition t of gamma. `order` lists the sources; by default ascending.
// Width at most 2 wd(t), checked.
DecompTree t_to_mdec(const RecTreeDec& t, const SourcedGraph& gamma);
DecompTree t_to_mdec(const RecTreeDec& t, const SourcedGraph& gamma, const std::vector<int>& order);

// Inverse direction for right tree decompositions of a cospan n -> 0. The
// result decomposes (apex of evaluate(d), image of the left leg), with width
// at most max{wd(d), |im|}, checked. Rejects other shapes.
RecTreeDec m_to_tdec(const DecompTree& d);

// Path decomposition of <order -> G <- 0> with width exactly wd(t), checked.
DecompTree p_to_mdec(const RecPathDec& t, const SourcedGraph& gamma);
DecompTree p_to_mdec(const RecPathDec& t, const SourcedGraph& gamma, const std::vector<int>& order);

// Path decomposition of (apex of evaluate(d), image of the left leg) for a
// composition-only term with empty codomain. Width at most wd(d), checked.
RecPathDec m_to_pdec(const DecompTree& d);

// Monoidal decomposition of <order -> G <- 0> from a recursive branch
// decomposition. The checked bound is max{wd(t) + 1, 2}: a single non-loop
// edge already needs two apex vertices, so wd(t) + 1 alone fails when
// wd(t) = 0.
DecompTree b_to_mdec(const RecBranchDec& t, const SourcedGraph& gamma);
DecompTree b_to_mdec(const RecBranchDec& t, const SourcedGraph& gamma, const std::vector<int>& order);
// The literal bound wd(t) + 1, reported separately by the theorem checks.
inline int b_to_mdec_bound(int wd) { return wd + 1; }

// A map from the apex of a cospan h into a target graph. It may merge only
// vertices that lie on the boundary of h; the edge map must be injective.
struct GlueMap {
    std::map<int, int> vmap;
    std::map<int, int> emap;

    static GlueMap identity(const Graph& g);
};

// Throws precondition_error naming the first pair that breaks the glueing
// property.
void check_glueing(const Cospan& h, const GlueMap& phi);

// Recursive branch decomposition of (phi(H), phi(boundary of h)) where h =
// evaluate(d). Width at most 2 max{wd(d), |A|, |B|}, checked.
RecBranchDec m_to_bdec(const DecompTree& d, const GlueMap& phi);

// The graph with sources that m_to_bdec(d, phi) decomposes.
SourcedGraph glued_graph(const Cospan& h, const GlueMap& phi);

}  // namespace mw
