#pragma once

#include <nlohmann/json.hpp>

#include "monowidth/graph.hpp"
#include "monowidth/oracles.hpp"
#include "monowidth/search.hpp"

namespace mw {

struct TheoremOptions {
    OracleLimits limits;
    SearchBudget budget;
};

// Intervals implied by the three width correspondences for cospans
// <0 -> G <- 0>. The monoidal upper bound is raised to 2 when G has a
// non-loop edge, because such an edge forces an apex with two vertices.
struct MonoidalBounds {
    int mwd_lo = 0, mwd_hi = 0;
    int mtwd_lo = 0, mtwd_hi = 0;
    int mpwd = 0;
};

MonoidalBounds monoidal_bounds(const Graph& g, const Widths& w);

// Outcome of checking the tree, path and branch sandwiches on one graph.
struct TheoremReport {
    Widths widths;

    // tw <= t_upper <= 2 tw, and tw <= t_cert <= t_upper where t_cert is the
    // width of m_to_tdec applied to the t_to_mdec term.
    int t_upper = 0;
    int t_cert = 0;
    bool tree_ok = false;

    // p_translated == pw; min(p_searched, p_translated) == pw; and
    // pw <= p_cert <= p_searched for p_cert from m_to_pdec on the searched term.
    int p_translated = 0;
    int p_searched = 0;
    int p_cert = 0;
    bool path_ok = false;

    // b_upper <= bw + 1 as stated, and bw <= b_cert <= 2 b_best where b_best
    // is the best searched monoidal width and b_cert the width of m_to_bdec
    // on that term.
    int b_upper = 0;
    int b_best = 0;
    int b_cert = 0;
    bool branch_upper_ok = false;
    bool branch_lower_ok = false;

    bool search_exhausted = true;
    std::vector<std::string> failures;
    nlohmann::json witnesses;

    bool ok() const { return failures.empty(); }
    nlohmann::json to_json() const;
};

// Runs the oracles, the translations and the bounded search on G with no
// sources. Inequalities that fail are listed in `failures`; exceptions from
// hard postconditions propagate.
TheoremReport check_theorems(const Graph& g, const TheoremOptions& opts = {});

}  // namespace mw
