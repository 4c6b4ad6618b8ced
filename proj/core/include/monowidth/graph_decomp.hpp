#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "monowidth/graph.hpp"

namespace mw {

// Widths follow the convention without the "-1": a tree with an edge has tree
// width 2, and a graph without vertices has width 0 everywhere.

// Result of a validator: ok, or the first violated clause with a message.
struct Validation {
    bool ok = true;
    std::string clause;
    std::string message;

    explicit operator bool() const { return ok; }
    static Validation pass() { return {}; }
    static Validation fail(std::string clause, std::string message) {
        return {false, std::move(clause), std::move(message)};
    }
};

// ---- classic decompositions ------------------------------------------------

struct TreeDec {
    Graph shape;                     // a tree; empty only for the empty graph
    std::map<int, VertexSet> bags;   // tree vertex -> bag
};

struct PathDec {
    std::vector<VertexSet> bags;
};

struct BranchDec {
    Graph shape;                     // a subcubic tree; empty only for edgeless graphs
    std::map<int, int> leaf_map;     // leaf of shape -> edge of G
};

// Clauses are "shape", "1" (vertex cover), "2" (edge cover), "3" (glueing).
Validation validate_tree_dec(const TreeDec& d, const Graph& g);
Validation validate_path_dec(const PathDec& d, const Graph& g);
// Clauses are "shape" and "bijection".
Validation validate_branch_dec(const BranchDec& d, const Graph& g);

// Leaves of a tree shape: vertices with at most one neighbour.
VertexSet tree_leaves(const Graph& shape);

// Max bag size. The checked overloads validate first and throw
// precondition_error on an invalid decomposition.
int dec_width(const TreeDec& d);
int dec_width(const PathDec& d);
int dec_width(const BranchDec& d, const Graph& g);
int width_of(const TreeDec& d, const Graph& g);
int width_of(const PathDec& d, const Graph& g);
int width_of(const BranchDec& d, const Graph& g);

// |ends(A_e) & ends(B_e)| for the tree edge e of the shape.
int edge_order(const BranchDec& d, const Graph& g, int tree_edge);

// ---- recursive decompositions ----------------------------------------------

struct RecTreeNode;
struct RecPathNode;
struct RecBranchNode;

// nullptr is the empty decomposition.
using RecTreeDec = std::shared_ptr<const RecTreeNode>;
using RecPathDec = std::shared_ptr<const RecPathNode>;
// Never null: the empty case is an explicit node carrying its edgeless graph.
using RecBranchDec = std::shared_ptr<const RecBranchNode>;

struct RecTreeNode {
    SourcedGraph gamma;   // the graph with sources this subtree decomposes
    VertexSet bag;
    RecTreeDec left;
    RecTreeDec right;
};

struct RecPathNode {
    SourcedGraph gamma;
    VertexSet bag;
    RecPathDec tail;
};

struct RecBranchNode {
    enum class Kind { empty, leaf, node };
    Kind kind = Kind::empty;
    SourcedGraph gamma;
    RecBranchDec left;    // set only for Kind::node
    RecBranchDec right;
};

RecTreeDec rec_tree_node(SourcedGraph gamma, VertexSet bag, RecTreeDec l, RecTreeDec r);
RecPathDec rec_path_node(SourcedGraph gamma, VertexSet bag, RecPathDec tail);
RecBranchDec rec_branch_empty(SourcedGraph gamma);
RecBranchDec rec_branch_leaf(SourcedGraph gamma);
RecBranchDec rec_branch_node(SourcedGraph gamma, RecBranchDec l, RecBranchDec r);

// The graph with sources a subtree decomposes; empty for nullptr.
const SourcedGraph& rec_gamma(const RecTreeDec& t);
const SourcedGraph& rec_gamma(const RecPathDec& t);

// Clauses are "graph" (stored graph differs), "subgraph", and the roman
// numerals of the recursive definitions.
Validation validate_rec_tree(const RecTreeDec& t, const SourcedGraph& gamma);
Validation validate_rec_path(const RecPathDec& t, const SourcedGraph& gamma);
Validation validate_rec_branch(const RecBranchDec& t, const SourcedGraph& gamma);

// Recursive widths. Empty has width 0; branch leaves and nodes contribute
// their source count.
int dec_width(const RecTreeDec& t);
int dec_width(const RecPathDec& t);
int dec_width(const RecBranchDec& t);
int width_of(const RecTreeDec& t, const SourcedGraph& gamma);
int width_of(const RecPathDec& t, const SourcedGraph& gamma);
int width_of(const RecBranchDec& t, const SourcedGraph& gamma);

// Vertices of subtree t0 that meet the sources of t or a subtree of t disjoint
// from t0. Throws std::domain_error when t0 is not a subtree of t.
VertexSet boundary_global(const RecBranchDec& t, const RecBranchDec& t0);
// Every subtree of t, in preorder.
std::vector<RecBranchDec> subtrees(const RecBranchDec& t);

// ---- classic <-> recursive ---------------------------------------------------

// Requires gamma.sources to lie in the bag of root. Without a root the first
// tree vertex whose bag holds the sources is used.
RecTreeDec tree_to_recursive(const TreeDec& d, const SourcedGraph& gamma, int root);
RecTreeDec tree_to_recursive(const TreeDec& d, const SourcedGraph& gamma);
TreeDec tree_from_recursive(const RecTreeDec& t);

// Requires gamma.sources to lie in the first bag.
RecPathDec path_to_recursive(const PathDec& d, const SourcedGraph& gamma);
PathDec path_from_recursive(const RecPathDec& t);

// The top split is at the tree edge with the most balanced leaf partition
// (ties go to the smallest edge id); below it, splits follow the shape rooted
// at that edge, so wd(result) <= wd(d) + |sources|. Isolated vertices go to
// the second side.
RecBranchDec branch_to_recursive(const BranchDec& d, const SourcedGraph& gamma);
BranchDec branch_from_recursive(const RecBranchDec& t);

// ---- serialisation -----------------------------------------------------------

nlohmann::json graph_to_json(const SourcedGraph& g);
SourcedGraph graph_from_json(const nlohmann::json& j);

nlohmann::json to_json(const TreeDec& d);
nlohmann::json to_json(const PathDec& d);
nlohmann::json to_json(const BranchDec& d);
nlohmann::json to_json(const RecTreeDec& t);
nlohmann::json to_json(const RecPathDec& t);
nlohmann::json to_json(const RecBranchDec& t);

TreeDec tree_dec_from_json(const nlohmann::json& j);
PathDec path_dec_from_json(const nlohmann::json& j);
BranchDec branch_dec_from_json(const nlohmann::json& j);
RecTreeDec rec_tree_from_json(const nlohmann::json& j);
RecPathDec rec_path_from_json(const nlohmann::json& j);
RecBranchDec rec_branch_from_json(const nlohmann::json& j);

std::string to_dot(const TreeDec& d);
std::string to_dot(const PathDec& d);
std::string to_dot(const BranchDec& d);
std::string to_dot(const RecTreeDec& t);
std::string to_dot(const RecPathDec& t);
std::string to_dot(const RecBranchDec& t);

}  // namespace mw
