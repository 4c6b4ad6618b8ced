#pragma once

#include <cstddef>
#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "monowidth/errors.hpp"

namespace mw {

using VertexSet = std::set<int>;
using EdgeSet = std::set<int>;

// Endpoints of an edge, normalised so that u <= v. u == v is a self-loop.
struct Ends {
    int u = 0;
    int v = 0;
    bool loop() const { return u == v; }
    bool operator==(const Ends&) const = default;
    auto operator<=>(const Ends&) const = default;
};

// Finite undirected multigraph. Vertex and edge ids are non-negative ints.
class Graph {
public:
    Graph() = default;

    void add_vertex(int v);
    // Adds an edge with the next free id and returns it.
    int add_edge(int u, int v);
    void add_edge(int id, int u, int v);

    bool has_vertex(int v) const { return vertices_.count(v) != 0; }
    bool has_edge(int e) const { return edges_.count(e) != 0; }

    const VertexSet& vertices() const { return vertices_; }
    const std::map<int, Ends>& edges() const { return edges_; }
    EdgeSet edge_ids() const;

    Ends ends(int e) const;
    VertexSet ends_set(int e) const;

    std::size_t num_vertices() const { return vertices_.size(); }
    std::size_t num_edges() const { return edges_.size(); }
    bool empty() const { return vertices_.empty() && edges_.empty(); }

    int next_vertex_id() const { return vertices_.empty() ? 0 : *vertices_.rbegin() + 1; }
    int next_edge_id() const { return edges_.empty() ? 0 : edges_.rbegin()->first + 1; }

    // Distinct vertices adjacent to v (a self-loop makes v its own neighbour).
    VertexSet neighbours(int v) const;
    // Number of edge incidences at v; a loop counts twice.
    int degree(int v) const;

    // Subgraph on the given vertex and edge ids. Edges must have their ends
    // inside `vs`.
    Graph subgraph(const VertexSet& vs, const EdgeSet& es) const;
    // Vertices `vs` with every edge whose ends lie inside `vs`.
    Graph induced(const VertexSet& vs) const;

    bool operator==(const Graph&) const = default;

private:
    VertexSet vertices_;
    std::map<int, Ends> edges_;
};

struct SourcedGraph {
    Graph graph;
    VertexSet sources;

    bool operator==(const SourcedGraph&) const = default;
};

// Throws precondition_error when the sources are not vertices of the graph.
void check_sourced(const SourcedGraph& sg);

// A total function between finite sets of ids.
struct FiniteMap {
    std::map<int, int> table;
    VertexSet codomain;

    int operator()(int x) const;
    VertexSet domain() const;
    VertexSet image() const;
    // Throws std::domain_error unless every value lies in the codomain.
    void check() const;

    static FiniteMap identity(const VertexSet& s);
    // Positional map: position i is sent to leg[i].
    static FiniteMap from_positions(const std::vector<int>& leg, const VertexSet& codomain);

    bool operator==(const FiniteMap&) const = default;
};

struct GraphMorphism {
    Graph domain;
    Graph codomain;
    std::map<int, int> vmap;
    std::map<int, int> emap;

    int v(int x) const;
    int e(int x) const;
    VertexSet image_vertices() const;
    EdgeSet image_edges() const;
    // Total, lands in the codomain, and the naturality square commutes.
    bool well_formed() const;
};

GraphMorphism identity_morphism(const Graph& g);
GraphMorphism compose_morphisms(const GraphMorphism& f, const GraphMorphism& g);
GraphMorphism inverse_isomorphism(const GraphMorphism& f);

// Union of ends(e) over es. Throws std::domain_error on unknown edge ids.
VertexSet ends_of_edge_set(const Graph& g, const EdgeSet& es);

struct Colimit {
    Graph apex;
    GraphMorphism in1;
    GraphMorphism in2;
};

// Disjoint union. Vertices of g1 come first, then g2, each in ascending id
// order; edges likewise.
Colimit graph_coproduct(const Graph& g1, const Graph& g2);

// Pushout of V(g1) <- y -> V(g2). Vertex classes are numbered by their first
// member in the order used by graph_coproduct.
Colimit graph_pushout(const Graph& g1, const Graph& g2, const FiniteMap& l1, const FiniteMap& l2);
Colimit graph_pushout(const Graph& g1, const Graph& g2, const std::vector<int>& l1,
                      const std::vector<int>& l2);

bool is_subcubic_tree(const Graph& g);
bool is_tree(const Graph& g);
bool is_connected(const Graph& g);
bool is_epimorphism(const GraphMorphism& m);

// Returns a witnessing isomorphism g1 -> g2 or nothing. `fixed` pins some
// vertex images in advance.
std::optional<GraphMorphism> graph_isomorphic(const Graph& g1, const Graph& g2,
                                              const std::map<int, int>& fixed = {});

// Connected components as vertex sets, ordered by their least vertex.
std::vector<VertexSet> connected_components(const Graph& g);

VertexSet image_union(const FiniteMap& f, const FiniteMap& g);
VertexSet image_intersection(const FiniteMap& f, const FiniteMap& g);

// Isomorphism-invariant string, intended for graphs with at most ~9 vertices.
std::string canonical_form(const Graph& g);
// The same graph relabelled so that canonical_form orders it: vertices
// 0..n-1, edges 0..m-1.
Graph canonical_graph(const Graph& g);

// Graph text format: '#' comments, "v <id>", "e <id> <id>", "s <id>".
SourcedGraph read_graph_text(std::istream& in);
SourcedGraph parse_graph_text(const std::string& text);
SourcedGraph load_graph_file(const std::string& path);
void write_graph_text(std::ostream& out, const SourcedGraph& g);
std::string graph_to_text(const SourcedGraph& g);

// Small named graphs, vertices 0..n-1.
Graph make_path(int n);
Graph make_cycle(int n);
Graph make_complete(int n);
Graph make_star(int leaves);
Graph make_edge();

std::string to_string(const VertexSet& s);

}  // namespace mw
