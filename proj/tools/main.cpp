// monowidth: command-line front end.
//
// Exit codes: 0 success, 1 validation or theorem failure, 2 usage or parse error.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "monowidth/cospan.hpp"
#include "monowidth/decomp.hpp"
#include "monowidth/graph.hpp"
#include "monowidth/graph_decomp.hpp"
#include "monowidth/oracles.hpp"
#include "monowidth/search.hpp"
#include "monowidth/theorems.hpp"
#include "monowidth/translations.hpp"

using nlohmann::json;
using namespace mw;

namespace {

enum Exit { ok = 0, failed = 1, usage = 2 };

struct Output {
    bool json = false;
    bool dot = false;
};

json read_json_arg(const std::string& arg) {
    std::string text;
    if (!arg.empty() && (arg.front() == '{' || arg.front() == '[')) {
        text = arg;
    } else {
        std::ifstream in(arg);
        if (!in) throw parse_error("cannot open " + arg);
        std::stringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    }
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        // nlohmann reports a byte offset; turn it into a line number.
        std::size_t upto = std::min<std::size_t>(e.byte, text.size());
        int line = 1 + static_cast<int>(std::count(text.begin(), text.begin() + static_cast<long>(upto), '\n'));
        throw parse_error(std::string("bad json: ") + e.what(), line);
    }
}

std::vector<int> ascending(const VertexSet& s) { return {s.begin(), s.end()}; }

void emit(const Output& out, const json& j, const std::string& dot, const std::string& human) {
    if (out.dot)
        std::cout << dot;
    else if (out.json)
        std::cout << j.dump(2) << "\n";
    else
        std::cout << human;
}

// ---- widths -----------------------------------------------------------------

int cmd_widths(const std::string& file, const Output& out) {
    SourcedGraph g = load_graph_file(file);
    Widths w = exact_widths(g.graph);
    MonoidalBounds b = monoidal_bounds(g.graph, w);
    json j{{"tw", w.tw},
           {"pw", w.pw},
           {"bw", w.bw},
           {"mwd", {b.mwd_lo, b.mwd_hi}},
           {"mtwd", {b.mtwd_lo, b.mtwd_hi}},
           {"mpwd", b.mpwd}};
    std::ostringstream h;
    h << "tw=" << w.tw << " pw=" << w.pw << " bw=" << w.bw << " mwd∈[" << b.mwd_lo << "," << b.mwd_hi
      << "] mtwd∈[" << b.mtwd_lo << "," << b.mtwd_hi << "] mpwd=" << b.mpwd << "\n";
    emit(out, j, "", h.str());
    return ok;
}

// ---- decompose --------------------------------------------------------------

// Adds the sources to every bag so that any bag can serve as the root.
TreeDec with_sources(TreeDec d, const VertexSet& x) {
    for (auto& [_, b] : d.bags) b.insert(x.begin(), x.end());
    if (d.bags.empty() && !x.empty()) {
        d.shape.add_vertex(0);
        d.bags[0] = x;
    }
    return d;
}

PathDec with_sources(PathDec d, const VertexSet& x) {
    if (d.bags.empty() && !x.empty()) d.bags.push_back({});
    for (auto& b : d.bags) b.insert(x.begin(), x.end());
    return d;
}

bool bag_holds(const TreeDec& d, const VertexSet& x) {
    for (const auto& [_, b] : d.bags)
        if (std::includes(b.begin(), b.end(), x.begin(), x.end())) return true;
    return d.bags.empty() && x.empty();
}

int cmd_decompose(const std::string& file, const std::string& kind, bool recursive, const Output& out) {
    SourcedGraph g = load_graph_file(file);
    json j;
    std::string dot;
    int width = 0;
    if (kind == "tree") {
        TreeDec d = exact_treewidth(g.graph).witness;
        if (recursive) {
            if (!bag_holds(d, g.sources)) d = with_sources(d, g.sources);
            RecTreeDec t = tree_to_recursive(d, g);
            width = dec_width(t);
            j = to_json(t);
            dot = to_dot(t);
        } else {
            width = dec_width(d);
            j = to_json(d);
            dot = to_dot(d);
        }
    } else if (kind == "path") {
        PathDec d = exact_pathwidth(g.graph).witness;
        if (recursive) {
            const VertexSet& first = d.bags.empty() ? VertexSet{} : d.bags.front();
            if (!std::includes(first.begin(), first.end(), g.sources.begin(), g.sources.end()))
                d = with_sources(d, g.sources);
            RecPathDec t = path_to_recursive(d, g);
            width = dec_width(t);
            j = to_json(t);
            dot = to_dot(t);
        } else {
            width = dec_width(d);
            j = to_json(d);
            dot = to_dot(d);
        }
    } else if (kind == "branch") {
        BranchDec d = exact_branchwidth(g.graph).witness;
        if (recursive) {
            RecBranchDec t = branch_to_recursive(d, g);
            width = dec_width(t);
            j = to_json(t);
            dot = to_dot(t);
        } else {
            width = dec_width(d, g.graph);
            j = to_json(d);
            dot = to_dot(d);
        }
    } else {
        SearchResult r = bounded_mwd_search(sourced_cospan(g.graph, ascending(g.sources)));
        width = r.width;
        j = decomp_to_json(r.best);
        j["exhaustive"] = !r.bound_only;
        dot = decomp_to_dot(r.best);
    }
    json wrapped{{"width", width}, {"decomposition", j}};
    emit(out, wrapped, dot, "width=" + std::to_string(width) + "\n" + j.dump(2) + "\n");
    return ok;
}

// ---- validate ---------------------------------------------------------------

int report(const Validation& v, int width, const Output& out) {
    json j{{"valid", v.ok}};
    if (v.ok)
        j["width"] = width;
    else
        j["clause"] = v.clause, j["message"] = v.message;
    std::string h = v.ok ? "valid width=" + std::to_string(width) + "\n"
                         : "invalid: clause " + v.clause + ": " + v.message + "\n";
    emit(out, j, "", h);
    return v.ok ? ok : failed;
}

// Accepts the wrapped output of decompose and translate as well.
json unwrap(json j) {
    if (j.is_object() && j.contains("decomposition")) return j.at("decomposition");
    if (j.is_object() && j.contains("result")) return j.at("result");
    return j;
}

int cmd_validate(const std::string& file, const std::string& dec, const Output& out) {
    SourcedGraph g = load_graph_file(file);
    json j = unwrap(read_json_arg(dec));
    if (j.contains("op")) {
        DecompTree d = decomp_from_json(j);
        Cospan target = sourced_cospan(g.graph, ascending(g.sources));
        Validation v;
        try {
            if (!cospan_iso_eq(evaluate(d), target))
                v = Validation::fail("evaluation", "term does not evaluate to the graph's cospan");
        } catch (const type_error& e) {
            v = Validation::fail("evaluation", e.what());
        }
        return report(v, d.width(), out);
    }
    std::string kind = j.value("kind", "");
    if (kind == "tree") {
        TreeDec d = tree_dec_from_json(j);
        return report(validate_tree_dec(d, g.graph), dec_width(d), out);
    }
    if (kind == "path") {
        PathDec d = path_dec_from_json(j);
        return report(validate_path_dec(d, g.graph), dec_width(d), out);
    }
    if (kind == "branch") {
        BranchDec d = branch_dec_from_json(j);
        Validation v = validate_branch_dec(d, g.graph);
        return report(v, v ? dec_width(d, g.graph) : 0, out);
    }
    if (kind == "rec-tree") {
        RecTreeDec t = rec_tree_from_json(j);
        return report(validate_rec_tree(t, g), dec_width(t), out);
    }
    if (kind == "rec-path") {
        RecPathDec t = rec_path_from_json(j);
        return report(validate_rec_path(t, g), dec_width(t), out);
    }
    if (kind == "rec-branch") {
        RecBranchDec t = rec_branch_from_json(j);
        return report(validate_rec_branch(t, g), dec_width(t), out);
    }
    throw parse_error("decomposition json has no recognised 'kind' or 'op'");
}

// ---- translate --------------------------------------------------------------

int cmd_translate(const std::string& from, const std::string& to, const std::string& graph_file, const Output& out) {
    json j = unwrap(read_json_arg(from));
    int w_from = 0, w_to = 0;
    json result;
    std::string dot;
    auto need_graph = [&]() {
        if (graph_file.empty()) throw parse_error("classic decompositions need --graph");
        return load_graph_file(graph_file);
    };
    if (j.contains("op")) {
        DecompTree d = decomp_from_json(j);
        w_from = d.width();
        if (to == "tree") {
            RecTreeDec t = m_to_tdec(d);
            w_to = dec_width(t), result = to_json(t), dot = to_dot(t);
        } else if (to == "path") {
            RecPathDec t = m_to_pdec(d);
            w_to = dec_width(t), result = to_json(t), dot = to_dot(t);
        } else if (to == "branch") {
            RecBranchDec t = m_to_bdec(d, GlueMap::identity(evaluate(d).apex));
            w_to = dec_width(t), result = to_json(t), dot = to_dot(t);
        } else {
            throw parse_error("a monoidal decomposition translates to tree, path or branch");
        }
    } else {
        if (to != "monoidal") throw parse_error("graph decompositions translate to monoidal");
        std::string kind = j.value("kind", "");
        DecompTree d = DecompTree::leaf(Cospan{});
        if (kind == "rec-tree" || kind == "tree") {
            RecTreeDec t;
            if (kind == "tree") {
                SourcedGraph g = need_graph();
                t = tree_to_recursive(tree_dec_from_json(j), g);
            } else {
                t = rec_tree_from_json(j);
            }
            w_from = dec_width(t);
            d = t_to_mdec(t, rec_gamma(t));
        } else if (kind == "rec-path" || kind == "path") {
            RecPathDec t;
            if (kind == "path") {
                SourcedGraph g = need_graph();
                t = path_to_recursive(path_dec_from_json(j), g);
            } else {
                t = rec_path_from_json(j);
            }
            w_from = dec_width(t);
            d = p_to_mdec(t, rec_gamma(t));
        } else if (kind == "rec-branch" || kind == "branch") {
            RecBranchDec t;
            if (kind == "branch") {
                SourcedGraph g = need_graph();
                t = branch_to_recursive(branch_dec_from_json(j), g);
            } else {
                t = rec_branch_from_json(j);
            }
            w_from = dec_width(t);
            d = b_to_mdec(t, t->gamma);
        } else {
            throw parse_error("unknown decomposition kind '" + kind + "'");
        }
        w_to = d.width();
        result = decomp_to_json(d);
        dot = decomp_to_dot(d);
    }
    json wrapped{{"from_width", w_from}, {"to_width", w_to}, {"result", result}};
    emit(out, wrapped, dot,
         "from width=" + std::to_string(w_from) + " to width=" + std::to_string(w_to) + "\n" + result.dump(2) + "\n");
    return ok;
}

// ---- check-theorems ---------------------------------------------------------

int cmd_check(const std::string& file, std::size_t budget, const Output& out) {
    SourcedGraph g = load_graph_file(file);
    TheoremOptions opts;
    opts.budget.max_states = budget;
    TheoremReport r = check_theorems(g.graph, opts);
    std::ostringstream h;
    h << "tw=" << r.widths.tw << " pw=" << r.widths.pw << " bw=" << r.widths.bw << "\n";
    h << "tree    " << (r.tree_ok ? "ok  " : "FAIL") << "  tw=" << r.widths.tw << " <= m_to_tdec=" << r.t_cert
      << " <= t_to_mdec=" << r.t_upper << " <= 2tw=" << 2 * r.widths.tw << "\n";
    h << "path    " << (r.path_ok ? "ok  " : "FAIL") << "  p_to_mdec=" << r.p_translated
      << " searched=" << r.p_searched << " m_to_pdec=" << r.p_cert << " pw=" << r.widths.pw << "\n";
    h << "branch  " << (r.branch_upper_ok && r.branch_lower_ok ? "ok  " : "FAIL") << "  b_to_mdec=" << r.b_upper
      << " (bw+1=" << r.widths.bw + 1 << ") best searched=" << r.b_best << " m_to_bdec=" << r.b_cert << "\n";
    if (!r.search_exhausted) h << "note: search budget exhausted; searched widths are upper bounds\n";
    for (const auto& f : r.failures) h << "failure: " << f << "\n";
    json j = r.to_json();
    emit(out, j, "", h.str());
    return r.ok() ? ok : failed;
}

// ---- catalog ----------------------------------------------------------------

int cmd_catalog(int max_v, int max_e, const std::string& cache_file, const Output& out) {
    std::optional<ResultsCache> cache;
    if (!cache_file.empty()) cache.emplace(cache_file);
    for (const Graph& g : enumerate_graphs(max_v, max_e)) {
        Widths w = cache ? cache->widths(g) : exact_widths(g);
        std::string edges;
        for (const auto& [_, en] : g.edges()) edges += (edges.empty() ? "" : " ") + std::to_string(en.u) + "-" + std::to_string(en.v);
        if (out.json) {
            json j{{"graph", graph_to_json({g, {}})}, {"tw", w.tw}, {"pw", w.pw}, {"bw", w.bw}};
            std::cout << j.dump() << "\n";
        } else {
            std::cout << "n=" << g.num_vertices() << " m=" << g.num_edges() << " tw=" << w.tw << " pw=" << w.pw
                      << " bw=" << w.bw << " edges=[" << edges << "]\n";
        }
    }
    if (cache) cache->save();
    return ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Monoidal width of graph cospans: exact widths, decompositions and translations"};
    app.require_subcommand(1);
    Output out;
    app.add_flag("--json", out.json, "Machine-readable JSON output");
    app.add_flag("--dot", out.dot, "Graphviz output where a decomposition is produced");

    std::string file, kind = "tree", dec, from, to, graph_file, cache_file;
    bool recursive = false;
    int max_v = 4, max_e = 15;
    std::size_t budget = SearchBudget{}.max_states;

    auto* widths = app.add_subcommand("widths", "Exact tw/pw/bw and the implied monoidal bounds");
    widths->add_option("file", file, "Graph file")->required();

    auto* decompose = app.add_subcommand("decompose", "Emit an optimal decomposition");
    decompose->add_option("file", file, "Graph file")->required();
    decompose->add_option("--kind", kind, "tree, path, branch or monoidal")
        ->check(CLI::IsMember({"tree", "path", "branch", "monoidal"}));
    decompose->add_flag("--recursive", recursive, "Emit the recursive form");

    auto* validate = app.add_subcommand("validate", "Check a decomposition against a graph");
    validate->add_option("file", file, "Graph file")->required();
    validate->add_option("--dec", dec, "Decomposition JSON (file or inline)")->required();

    auto* translate = app.add_subcommand("translate", "Translate between monoidal and graph decompositions");
    translate->add_option("--from", from, "Decomposition JSON (file or inline)")->required();
    translate->add_option("--to", to, "tree, path, branch or monoidal")
        ->required()
        ->check(CLI::IsMember({"tree", "path", "branch", "monoidal"}));
    translate->add_option("--graph", graph_file, "Graph file, needed for classic decompositions");

    auto* check = app.add_subcommand("check-theorems", "Check the three width correspondences on a graph");
    check->add_option("file", file, "Graph file")->required();
    check->add_option("--budget", budget, "State budget of the monoidal search");

    auto* catalog = app.add_subcommand("catalog", "Stream small graphs up to isomorphism with their widths");
    catalog->add_option("--max-v", max_v, "Maximum number of vertices (at most 6)")->check(CLI::Range(1, 6));
    catalog->add_option("--max-e", max_e, "Maximum number of edges");
    catalog->add_option("--cache", cache_file, "JSON cache of computed widths");

    for (auto* sub : {widths, decompose, validate, translate, check, catalog}) {
        sub->add_flag("--json", out.json, "Machine-readable JSON output");
        sub->add_flag("--dot", out.dot, "Graphviz output where a decomposition is produced");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? ok : usage;
    }

    try {
        if (*widths) return cmd_widths(file, out);
        if (*decompose) return cmd_decompose(file, kind, recursive, out);
        if (*validate) return cmd_validate(file, dec, out);
        if (*translate) return cmd_translate(from, to, graph_file, out);
        if (*check) return cmd_check(file, budget, out);
        if (*catalog) return cmd_catalog(max_v, max_e, cache_file, out);
    } catch (const parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return usage;
    } catch (const refusal_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return usage;
    } catch (const precondition_error& e) {
        std::cerr << "invalid: " << e.what() << "\n";
        return failed;
    } catch (const type_error& e) {
        std::cerr << "invalid: " << e.what() << "\n";
        return failed;
    } catch (const postcondition_error& e) {
        std::cerr << "bound violated: " << e.what() << "\n";
        return failed;
    }
    return usage;
}
