#include <functional>
#include <sstream>

#include <nlohmann/json.hpp>

#include "monowidth/graph_decomp.hpp"

namespace mw {

using nlohmann::json;

namespace {

std::vector<int> as_vec(const VertexSet& s) { return {s.begin(), s.end()}; }

json shape_json(const Graph& shape) {
    json es = json::array();
    for (const auto& [_, en] : shape.edges()) es.push_back({en.u, en.v});
    return json{{"nodes", as_vec(shape.vertices())}, {"edges", es}};
}

Graph shape_from(const json& j) {
    Graph g;
    for (int v : j.at("nodes").get<std::vector<int>>()) g.add_vertex(v);
    for (const auto& e : j.at("edges")) g.add_edge(e.at(0).get<int>(), e.at(1).get<int>());
    return g;
}

void expect_kind(const json& j, const char* kind) {
    if (j.contains("kind") && j.at("kind").get<std::string>() != kind)
        throw parse_error(std::string("expected a '") + kind + "' decomposition, got '" +
                          j.at("kind").get<std::string>() + "'");
}

template <class F>
auto guarded(F&& f) -> decltype(f()) {
    try {
        return f();
    } catch (const json::exception& e) {
        throw parse_error(std::string("bad decomposition json: ") + e.what());
    } catch (const std::domain_error& e) {
        throw parse_error(std::string("bad decomposition json: ") + e.what());
    }
}

std::string label(const VertexSet& s) { return to_string(s); }

}  // namespace

json graph_to_json(const SourcedGraph& g) {
    json es = json::array();
    for (const auto& [id, en] : g.graph.edges()) es.push_back({id, en.u, en.v});
    return json{{"v", as_vec(g.graph.vertices())}, {"e", es}, {"s", as_vec(g.sources)}};
}

SourcedGraph graph_from_json(const json& j) {
    return guarded([&] {
        SourcedGraph g;
        for (int v : j.at("v").get<std::vector<int>>()) g.graph.add_vertex(v);
        for (const auto& e : j.at("e")) {
            if (e.size() == 3)
                g.graph.add_edge(e.at(0).get<int>(), e.at(1).get<int>(), e.at(2).get<int>());
            else
                g.graph.add_edge(e.at(0).get<int>(), e.at(1).get<int>());
        }
        if (j.contains("s"))
            for (int s : j.at("s").get<std::vector<int>>()) g.sources.insert(s);
        check_sourced(g);
        return g;
    });
}

json to_json(const TreeDec& d) {
    json bags = json::object();
    for (const auto& [i, b] : d.bags) bags[std::to_string(i)] = as_vec(b);
    json j = shape_json(d.shape);
    j["kind"] = "tree";
    j["bags"] = bags;
    return j;
}

json to_json(const PathDec& d) {
    json bags = json::array();
    for (const auto& b : d.bags) bags.push_back(as_vec(b));
    return json{{"kind", "path"}, {"bags", bags}};
}

json to_json(const BranchDec& d) {
    json leaves = json::object();
    for (const auto& [l, e] : d.leaf_map) leaves[std::to_string(l)] = e;
    json j = shape_json(d.shape);
    j["kind"] = "branch";
    j["leaves"] = leaves;
    return j;
}

namespace {

json rec_tree_json(const RecTreeDec& t) {
    if (!t) return nullptr;
    return json{{"graph", graph_to_json(t->gamma)},
                {"bag", as_vec(t->bag)},
                {"left", rec_tree_json(t->left)},
                {"right", rec_tree_json(t->right)}};
}

json rec_path_json(const RecPathDec& t) {
    if (!t) return nullptr;
    return json{{"graph", graph_to_json(t->gamma)}, {"bag", as_vec(t->bag)}, {"tail", rec_path_json(t->tail)}};
}

json rec_branch_json(const RecBranchDec& t) {
    static const char* names[] = {"empty", "leaf", "node"};
    json j{{"kind", names[static_cast<int>(t->kind)]}, {"graph", graph_to_json(t->gamma)}};
    if (t->kind == RecBranchNode::Kind::node) {
        j["left"] = rec_branch_json(t->left);
        j["right"] = rec_branch_json(t->right);
    }
    return j;
}

VertexSet set_from(const json& j) {
    auto v = j.get<std::vector<int>>();
    return {v.begin(), v.end()};
}

RecTreeDec rec_tree_parse(const json& j) {
    if (j.is_null()) return nullptr;
    return rec_tree_node(graph_from_json(j.at("graph")), set_from(j.at("bag")), rec_tree_parse(j.at("left")),
                         rec_tree_parse(j.at("right")));
}

RecPathDec rec_path_parse(const json& j) {
    if (j.is_null()) return nullptr;
    return rec_path_node(graph_from_json(j.at("graph")), set_from(j.at("bag")), rec_path_parse(j.at("tail")));
}

RecBranchDec rec_branch_parse(const json& j) {
    std::string kind = j.at("kind").get<std::string>();
    SourcedGraph g = graph_from_json(j.at("graph"));
    if (kind == "empty") return rec_branch_empty(std::move(g));
    if (kind == "leaf") return rec_branch_leaf(std::move(g));
    if (kind == "node")
        return rec_branch_node(std::move(g), rec_branch_parse(j.at("left")), rec_branch_parse(j.at("right")));
    throw parse_error("unknown branch node kind '" + kind + "'");
}

}  // namespace

json to_json(const RecTreeDec& t) { return json{{"kind", "rec-tree"}, {"root", rec_tree_json(t)}}; }
json to_json(const RecPathDec& t) { return json{{"kind", "rec-path"}, {"root", rec_path_json(t)}}; }
json to_json(const RecBranchDec& t) { return json{{"kind", "rec-branch"}, {"root", rec_branch_json(t)}}; }

TreeDec tree_dec_from_json(const json& j) {
    return guarded([&] {
        expect_kind(j, "tree");
        TreeDec d;
        d.shape = shape_from(j);
        for (const auto& [k, v] : j.at("bags").items()) d.bags[std::stoi(k)] = set_from(v);
        return d;
    });
}

PathDec path_dec_from_json(const json& j) {
    return guarded([&] {
        expect_kind(j, "path");
        PathDec d;
        for (const auto& b : j.at("bags")) d.bags.push_back(set_from(b));
        return d;
    });
}

BranchDec branch_dec_from_json(const json& j) {
    return guarded([&] {
        expect_kind(j, "branch");
        BranchDec d;
        d.shape = shape_from(j);
        for (const auto& [k, v] : j.at("leaves").items()) d.leaf_map[std::stoi(k)] = v.get<int>();
        return d;
    });
}

RecTreeDec rec_tree_from_json(const json& j) {
    return guarded([&] {
        expect_kind(j, "rec-tree");
        return rec_tree_parse(j.at("root"));
    });
}

RecPathDec rec_path_from_json(const json& j) {
    return guarded([&] {
        expect_kind(j, "rec-path");
        return rec_path_parse(j.at("root"));
    });
}

RecBranchDec rec_branch_from_json(const json& j) {
    return guarded([&] {
        expect_kind(j, "rec-branch");
        return rec_branch_parse(j.at("root"));
    });
}

// ---- DOT ---------------------------------------------------------------------

std::string to_dot(const TreeDec& d) {
    std::ostringstream os;
    os << "graph tree_decomposition {\n";
    for (const auto& [i, b] : d.bags) os << "  t" << i << " [label=\"" << label(b) << "\"];\n";
    for (const auto& [_, en] : d.shape.edges()) os << "  t" << en.u << " -- t" << en.v << ";\n";
    os << "}\n";
    return os.str();
}

std::string to_dot(const PathDec& d) {
    std::ostringstream os;
    os << "graph path_decomposition {\n  rankdir=LR;\n";
    for (std::size_t i = 0; i < d.bags.size(); ++i) os << "  p" << i << " [label=\"" << label(d.bags[i]) << "\"];\n";
    for (std::size_t i = 0; i + 1 < d.bags.size(); ++i) os << "  p" << i << " -- p" << i + 1 << ";\n";
    os << "}\n";
    return os.str();
}

std::string to_dot(const BranchDec& d) {
    std::ostringstream os;
    os << "graph branch_decomposition {\n";
    for (int v : d.shape.vertices()) {
        auto it = d.leaf_map.find(v);
        os << "  b" << v << " [label=\"" << (it == d.leaf_map.end() ? std::string("") : "e" + std::to_string(it->second))
           << "\"];\n";
    }
    for (const auto& [_, en] : d.shape.edges()) os << "  b" << en.u << " -- b" << en.v << ";\n";
    os << "}\n";
    return os.str();
}

std::string to_dot(const RecTreeDec& t) { return to_dot(tree_from_recursive(t)); }
std::string to_dot(const RecPathDec& t) { return to_dot(path_from_recursive(t)); }

std::string to_dot(const RecBranchDec& t) {
    std::ostringstream os;
    os << "digraph recursive_branch_decomposition {\n  node [shape=box];\n";
    int next = 0;
    std::function<int(const RecBranchDec&)> emit = [&](const RecBranchDec& s) {
        int id = next++;
        std::string edges;
        for (int e : s->gamma.graph.edge_ids()) edges += (edges.empty() ? "e" : ",e") + std::to_string(e);
        os << "  r" << id << " [label=\"" << (edges.empty() ? "()" : edges) << "\\nX=" << label(s->gamma.sources)
           << "\"];\n";
        if (s->kind == RecBranchNode::Kind::node) {
            int a = emit(s->left), b = emit(s->right);
            os << "  r" << id << " -> r" << a << ";\n  r" << id << " -> r" << b << ";\n";
        }
        return id;
    };
    emit(t);
    os << "}\n";
    return os.str();
}

}  // namespace mw
