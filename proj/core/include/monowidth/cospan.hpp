#pragma once

#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "monowidth/graph.hpp"

namespace mw {

// A morphism n -> m of the cospan category with discrete boundaries. Boundary
// objects are positions 0..n-1; left[i] is the apex vertex hit by position i.
struct Cospan {
    Graph apex;
    std::vector<int> left;
    std::vector<int> right;

    int dom() const { return static_cast<int>(left.size()); }
    int cod() const { return static_cast<int>(right.size()); }
    // Number of apex vertices.
    int weight() const { return static_cast<int>(apex.num_vertices()); }

    bool operator==(const Cospan&) const = default;
};

inline int boundary_weight(int n) { return n; }

// Throws std::domain_error if a leg leaves the apex.
void check_cospan(const Cospan& c);

// Glues the right boundary of a to the left boundary of b. Apex vertices are
// renumbered as in graph_pushout. Throws type_error on arity mismatch.
Cospan compose(const Cospan& a, const Cospan& b);
Cospan tensor(const Cospan& a, const Cospan& b);

Cospan identity(int n);
// n + m -> m + n.
Cospan swap_cospan(int n, int m);
// n -> n, output position j is wired to input position perm[j].
Cospan permutation(const std::vector<int>& perm);
Cospan copy_cospan(int n);
Cospan merge_cospan(int n);
Cospan delete_cospan(int n);
Cospan create_cospan(int n);
inline Cospan codelete_cospan(int n) { return create_cospan(n); }
// 1 -> 1 with apex u -e- v, left at u and right at v.
Cospan edge_cospan();

// <order -> G <- nothing>, the cospan of a graph with sources listed in order.
Cospan sourced_cospan(const Graph& g, const std::vector<int>& order);
// <left -> G <- right> with explicit legs into g.
Cospan make_cospan(const Graph& g, const std::vector<int>& left, const std::vector<int>& right);

// Isomorphism of apexes commuting with both legs.
bool cospan_iso_eq(const Cospan& a, const Cospan& b);

nlohmann::json cospan_to_json(const Cospan& c);
Cospan cospan_from_json(const nlohmann::json& j);

}  // namespace mw
