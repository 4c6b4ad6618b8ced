#include "monowidth/decomp.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include <nlohmann/json.hpp>

namespace mw {

AtomPtr make_atom(std::string name, int dom, int cod, int weight) {
    if (dom < 0 || cod < 0 || weight < 0) throw precondition_error("negative arity or weight");
    return std::make_shared<const Atom>(Atom{std::move(name), dom, cod, weight, std::nullopt});
}

AtomPtr cospan_atom(std::string name, Cospan c) {
    check_cospan(c);
    int dom = c.dom(), cod = c.cod(), w = c.weight();
    return std::make_shared<const Atom>(Atom{std::move(name), dom, cod, w, std::move(c)});
}

DecompTree DecompTree::leaf(AtomPtr a) {
    if (!a) throw precondition_error("null atom");
    auto n = std::make_shared<Node>();
    n->op = Op::leaf;
    n->dom = a->dom;
    n->cod = a->cod;
    n->width = a->weight;
    n->atom = std::move(a);
    return DecompTree(std::move(n));
}

DecompTree DecompTree::leaf(const Cospan& c, std::string name) { return leaf(cospan_atom(std::move(name), c)); }

DecompTree DecompTree::tensor(const DecompTree& l, const DecompTree& r) {
    auto n = std::make_shared<Node>();
    n->op = Op::tensor;
    n->dom = l.dom() + r.dom();
    n->cod = l.cod() + r.cod();
    n->width = std::max(l.width(), r.width());
    n->count = 1 + l.node_count() + r.node_count();
    n->l = std::make_shared<const DecompTree>(l);
    n->r = std::make_shared<const DecompTree>(r);
    return DecompTree(std::move(n));
}

DecompTree DecompTree::compose(const DecompTree& l, const DecompTree& r) {
    if (l.cod() != r.dom())
        throw type_error("composition boundary mismatch: " + std::to_string(l.cod()) + " vs " +
                         std::to_string(r.dom()));
    auto n = std::make_shared<Node>();
    n->op = Op::compose;
    n->cut = l.cod();
    n->dom = l.dom();
    n->cod = r.cod();
    n->width = std::max({l.width(), boundary_weight(n->cut), r.width()});
    n->count = 1 + l.node_count() + r.node_count();
    n->l = std::make_shared<const DecompTree>(l);
    n->r = std::make_shared<const DecompTree>(r);
    return DecompTree(std::move(n));
}

const Atom& DecompTree::atom() const {
    if (!node_->atom) throw precondition_error("not a leaf");
    return *node_->atom;
}

const DecompTree& DecompTree::left() const {
    if (!node_->l) throw precondition_error("leaf has no children");
    return *node_->l;
}

const DecompTree& DecompTree::right() const {
    if (!node_->r) throw precondition_error("leaf has no children");
    return *node_->r;
}

void Signature::add(const std::string& name, int dom, int cod, int weight) {
    add(make_atom(name, dom, cod, weight));
}

void Signature::add(AtomPtr a) {
    std::string name = a->name;
    atoms_[name] = std::move(a);
}

AtomPtr Signature::at(const std::string& name) const {
    auto it = atoms_.find(name);
    if (it == atoms_.end()) throw precondition_error("unknown atom " + name);
    return it->second;
}

DecompTree tensor_all(const std::vector<DecompTree>& parts) {
    if (parts.empty()) throw precondition_error("tensor_all of nothing");
    DecompTree acc = parts.back();
    for (auto it = parts.rbegin() + 1; it != parts.rend(); ++it) acc = DecompTree::tensor(*it, acc);
    return acc;
}

DecompTree compose_all(const std::vector<DecompTree>& parts) {
    if (parts.empty()) throw precondition_error("compose_all of nothing");
    DecompTree acc = parts.back();
    for (auto it = parts.rbegin() + 1; it != parts.rend(); ++it) acc = DecompTree::compose(*it, acc);
    return acc;
}

int width_by_nodes(const DecompTree& d) {
    switch (d.op()) {
        case DecompTree::Op::leaf:
            return d.atom().weight;
        case DecompTree::Op::tensor:
            return std::max(width_by_nodes(d.left()), width_by_nodes(d.right()));
        case DecompTree::Op::compose:
            return std::max({boundary_weight(d.cut()), width_by_nodes(d.left()), width_by_nodes(d.right())});
    }
    return 0;
}

bool is_right_tree(const DecompTree& d) {
    switch (d.op()) {
        case DecompTree::Op::leaf:
            return true;
        case DecompTree::Op::tensor:
            return is_right_tree(d.left()) && is_right_tree(d.right());
        case DecompTree::Op::compose:
            return d.left().is_leaf() && is_right_tree(d.right());
    }
    return false;
}

bool is_left_tree(const DecompTree& d) {
    switch (d.op()) {
        case DecompTree::Op::leaf:
            return true;
        case DecompTree::Op::tensor:
            return is_left_tree(d.left()) && is_left_tree(d.right());
        case DecompTree::Op::compose:
            return d.right().is_leaf() && is_left_tree(d.left());
    }
    return false;
}

bool is_path(const DecompTree& d) {
    switch (d.op()) {
        case DecompTree::Op::leaf:
            return true;
        case DecompTree::Op::tensor:
            return false;
        case DecompTree::Op::compose:
            return is_path(d.left()) && is_path(d.right());
    }
    return false;
}

namespace {

Cospan eval_at(const DecompTree& d, const std::string& path) {
    switch (d.op()) {
        case DecompTree::Op::leaf: {
            const Atom& a = d.atom();
            if (!a.cospan) throw type_error(path + ": atom '" + a.name + "' has no cospan");
            if (a.cospan->dom() != a.dom || a.cospan->cod() != a.cod)
                throw type_error(path + ": atom '" + a.name + "' disagrees with its declared arity");
            return *a.cospan;
        }
        case DecompTree::Op::tensor: {
            Cospan l = eval_at(d.left(), path + ".0");
            return tensor(l, eval_at(d.right(), path + ".1"));
        }
        case DecompTree::Op::compose: {
            Cospan l = eval_at(d.left(), path + ".0");
            Cospan r = eval_at(d.right(), path + ".1");
            try {
                return compose(l, r);
            } catch (const type_error& e) {
                if (std::string(e.what()).rfind("root", 0) == 0) throw;
                throw type_error(path + ": " + e.what());
            }
        }
    }
    return {};
}

void serialize_into(const DecompTree& d, std::ostringstream& os) {
    switch (d.op()) {
        case DecompTree::Op::leaf: {
            const Atom& a = d.atom();
            os << a.name << '[' << a.dom << ',' << a.cod << ',' << a.weight;
            if (a.cospan) {
                os << '|';
                for (int v : a.cospan->left) os << v << ' ';
                os << '/';
                for (const auto& [_, en] : a.cospan->apex.edges()) os << en.u << '-' << en.v << ' ';
                os << '/';
                for (int v : a.cospan->right) os << v << ' ';
            }
            os << ']';
            return;
        }
        case DecompTree::Op::tensor:
            os << '(';
            serialize_into(d.left(), os);
            os << " * ";
            serialize_into(d.right(), os);
            os << ')';
            return;
        case DecompTree::Op::compose:
            os << '(';
            serialize_into(d.left(), os);
            os << " ;" << d.cut() << ' ';
            serialize_into(d.right(), os);
            os << ')';
            return;
    }
}

}  // namespace

Cospan evaluate(const DecompTree& d) { return eval_at(d, "root"); }

std::string serialize(const DecompTree& d) {
    std::ostringstream os;
    serialize_into(d, os);
    return os.str();
}

nlohmann::json decomp_to_json(const DecompTree& d) {
    nlohmann::json j;
    switch (d.op()) {
        case DecompTree::Op::leaf: {
            const Atom& a = d.atom();
            j["op"] = "leaf";
            nlohmann::json atom{{"name", a.name}, {"dom", a.dom}, {"cod", a.cod}, {"weight", a.weight}};
            if (a.cospan) atom["cospan"] = cospan_to_json(*a.cospan);
            j["atom"] = atom;
            break;
        }
        case DecompTree::Op::tensor:
            j["op"] = "tensor";
            j["children"] = {decomp_to_json(d.left()), decomp_to_json(d.right())};
            break;
        case DecompTree::Op::compose:
            j["op"] = "compose";
            j["cut"] = d.cut();
            j["children"] = {decomp_to_json(d.left()), decomp_to_json(d.right())};
            break;
    }
    return j;
}

DecompTree decomp_from_json(const nlohmann::json& j) {
    try {
        std::string op = j.at("op").get<std::string>();
        if (op == "leaf") {
            const auto& a = j.at("atom");
            if (a.contains("cospan")) {
                Cospan c = cospan_from_json(a.at("cospan"));
                std::string name = a.value("name", std::string("g"));
                if (!a.contains("weight")) return DecompTree::leaf(cospan_atom(std::move(name), std::move(c)));
                int dom = c.dom(), cod = c.cod(), w = a.at("weight").get<int>();
                if (w < 0) throw parse_error("negative weight");
                return DecompTree::leaf(std::make_shared<const Atom>(Atom{std::move(name), dom, cod, w, std::move(c)}));
            }
            return DecompTree::leaf(make_atom(a.at("name").get<std::string>(), a.at("dom").get<int>(),
                                              a.at("cod").get<int>(), a.at("weight").get<int>()));
        }
        const auto& ch = j.at("children");
        if (ch.size() != 2) throw parse_error("'" + op + "' node needs two children");
        DecompTree l = decomp_from_json(ch[0]), r = decomp_from_json(ch[1]);
        if (op == "tensor") return DecompTree::tensor(l, r);
        if (op == "compose") {
            DecompTree d = DecompTree::compose(l, r);
            if (j.contains("cut") && j.at("cut").get<int>() != d.cut())
                throw parse_error("declared cut " + std::to_string(j.at("cut").get<int>()) +
                                  " does not match the boundary " + std::to_string(d.cut()));
            return d;
        }
        throw parse_error("unknown op '" + op + "'");
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(std::string("bad decomposition json: ") + e.what());
    }
}

std::string decomp_to_dot(const DecompTree& d) {
    std::ostringstream os;
    os << "digraph decomposition {\n  node [shape=box];\n";
    int next = 0;
    std::function<int(const DecompTree&)> emit = [&](const DecompTree& t) {
        int id = next++;
        std::string label;
        switch (t.op()) {
            case DecompTree::Op::leaf:
                label = t.atom().name + " (w=" + std::to_string(t.atom().weight) + ")";
                break;
            case DecompTree::Op::tensor:
                label = "tensor";
                break;
            case DecompTree::Op::compose:
                label = ";" + std::to_string(t.cut());
                break;
        }
        os << "  n" << id << " [label=\"" << label << "\"];\n";
        if (!t.is_leaf()) {
            int a = emit(t.left());
            int b = emit(t.right());
            os << "  n" << id << " -> n" << a << ";\n  n" << id << " -> n" << b << ";\n";
        }
        return id;
    };
    emit(d);
    os << "}\n";
    return os.str();
}

}  // namespace mw
