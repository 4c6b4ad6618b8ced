#include "monowidth/theorems.hpp"

#include "monowidth/translations.hpp"

namespace mw {

MonoidalBounds monoidal_bounds(const Graph& g, const Widths& w) {
    bool proper_edge = false;
    for (const auto& [_, en] : g.edges()) proper_edge |= !en.loop();
    MonoidalBounds b;
    b.mwd_lo = (w.bw + 1) / 2;
    b.mwd_hi = std::max(w.bw + 1, proper_edge ? 2 : 0);
    b.mtwd_lo = w.tw;
    b.mtwd_hi = 2 * w.tw;
    b.mpwd = w.pw;
    return b;
}

nlohmann::json TheoremReport::to_json() const {
    return {
        {"widths", {{"tw", widths.tw}, {"pw", widths.pw}, {"bw", widths.bw}}},
        {"tree", {{"upper", t_upper}, {"certified", t_cert}, {"ok", tree_ok}}},
        {"path", {{"translated", p_translated}, {"searched", p_searched}, {"certified", p_cert}, {"ok", path_ok}}},
        {"branch",
         {{"upper", b_upper},
          {"best_searched", b_best},
          {"certified", b_cert},
          {"upper_ok", branch_upper_ok},
          {"lower_ok", branch_lower_ok}}},
        {"search_exhausted", search_exhausted},
        {"failures", failures},
        {"ok", ok()},
        {"witnesses", witnesses},
    };
}

namespace {

// Map from the apex of a searched term back onto G.
GlueMap onto(const Graph& apex, const Graph& g) {
    auto iso = graph_isomorphic(apex, g);
    if (!iso) throw postcondition_error("searched term does not evaluate to the input graph");
    return {iso->vmap, iso->emap};
}

}  // namespace

TheoremReport check_theorems(const Graph& g, const TheoremOptions& opts) {
    TheoremReport r;
    TreeWidthResult tw = exact_treewidth(g, opts.limits);
    PathWidthResult pw = exact_pathwidth(g, opts.limits);
    BranchWidthResult bw = exact_branchwidth(g, opts.limits);
    r.widths = {tw.width, pw.width, bw.width};
    SourcedGraph gamma{g, {}};
    Cospan target = sourced_cospan(g, {});
    auto fail = [&](std::string msg) { r.failures.push_back(std::move(msg)); };

    // tree
    DecompTree dt = t_to_mdec(tw.recursive, gamma);
    r.t_upper = dt.width();
    if (!cospan_iso_eq(evaluate(dt), target)) fail("tree: t_to_mdec term does not evaluate to G");
    RecTreeDec back = m_to_tdec(dt);
    r.t_cert = dec_width(back);
    if (!validate_tree_dec(tree_from_recursive(back), evaluate(dt).apex)) fail("tree: m_to_tdec output is invalid");
    if (!(tw.width <= r.t_cert && r.t_cert <= r.t_upper)) fail("tree: tw <= wd(m_to_tdec(d)) <= wd(d) fails");
    if (!(tw.width <= r.t_upper && r.t_upper <= 2 * tw.width)) fail("tree: tw <= mtwd_upper <= 2 tw fails");
    r.tree_ok = r.failures.empty();
    r.witnesses["tree"] = decomp_to_json(dt);

    // path
    std::size_t before = r.failures.size();
    DecompTree dp = p_to_mdec(pw.recursive, gamma);
    r.p_translated = dp.width();
    if (!cospan_iso_eq(evaluate(dp), target)) fail("path: p_to_mdec term does not evaluate to G");
    SearchResult sp = bounded_mwd_search(target, SearchShape::path, opts.budget);
    r.search_exhausted &= !sp.bound_only;
    r.p_searched = sp.width;
    RecPathDec pback = m_to_pdec(sp.best);
    r.p_cert = dec_width(pback);
    if (!validate_path_dec(path_from_recursive(pback), evaluate(sp.best).apex))
        fail("path: m_to_pdec output is invalid");
    if (r.p_translated != pw.width) fail("path: p_to_mdec width differs from pw");
    if (std::min(r.p_searched, r.p_translated) != pw.width) fail("path: min searched width differs from pw");
    if (!(pw.width <= r.p_cert && r.p_cert <= r.p_searched)) fail("path: pw <= wd(m_to_pdec(d)) <= wd(d) fails");
    r.path_ok = r.failures.size() == before;
    r.witnesses["path"] = decomp_to_json(sp.width < dp.width() ? sp.best : dp);

    // branch
    before = r.failures.size();
    DecompTree db = b_to_mdec(branch_to_recursive(bw.witness, gamma), gamma);
    r.b_upper = db.width();
    if (!cospan_iso_eq(evaluate(db), target)) fail("branch: b_to_mdec term does not evaluate to G");
    r.branch_upper_ok = r.b_upper <= b_to_mdec_bound(bw.width);
    if (!r.branch_upper_ok)
        fail("branch: b_to_mdec width " + std::to_string(r.b_upper) + " exceeds bw + 1 = " +
             std::to_string(bw.width + 1));
    SearchResult sb = bounded_mwd_search(target, SearchShape::any, opts.budget);
    r.search_exhausted &= !sb.bound_only;
    r.b_best = sb.width;
    Cospan h = evaluate(sb.best);
    RecBranchDec bback = m_to_bdec(sb.best, onto(h.apex, g));
    BranchDec classic = branch_from_recursive(bback);
    if (!validate_branch_dec(classic, g)) fail("branch: m_to_bdec output is invalid");
    r.b_cert = dec_width(classic, g);
    r.branch_lower_ok = bw.width <= r.b_cert && r.b_cert <= 2 * r.b_best;
    if (!r.branch_lower_ok) fail("branch: bw <= wd(m_to_bdec(d)) <= 2 wd(d) fails");
    r.witnesses["branch_upper"] = decomp_to_json(db);
    r.witnesses["branch_best"] = decomp_to_json(sb.best);
    r.witnesses["branch_dec"] = mw::to_json(classic);
    return r;
}

}  // namespace mw
