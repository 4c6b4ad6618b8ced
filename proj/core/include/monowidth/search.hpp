#pragma once

#include <cstddef>

#include "monowidth/cospan.hpp"
#include "monowidth/decomp.hpp"

namespace mw {

// Which terms the search may build.
//   any        : composition, tensor and permutation atoms anywhere
//   right_tree : the left factor of every composition is an atom
//   path       : compositions of atoms only
enum class SearchShape { any, right_tree, path };

struct SearchBudget {
    std::size_t max_states = 50000;
};

struct SearchResult {
    DecompTree best;
    int width = 0;
    // True when the budget ran out, so `width` is only an upper bound.
    bool bound_only = false;
    std::size_t states = 0;
};

// Memoised search over splits of g into smaller cospans. Three kinds of split
// are tried at every subproblem: a composition through a cut, a tensor of
// connected pieces, and (with an empty right boundary) a discrete atom feeding
// a tensor of two parts. The result evaluates to a cospan iso-equal to g with
// apex vertices renumbered 0..n-1. Exhaustive over these splits when the
// budget suffices; ties go to fewer nodes, then to the smaller serialisation.
SearchResult bounded_mwd_search(const Cospan& g, SearchShape shape = SearchShape::any, SearchBudget budget = {});

}  // namespace mw
