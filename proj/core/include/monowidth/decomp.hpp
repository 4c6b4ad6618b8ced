#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>

#include <nlohmann/json_fwd.hpp>

#include "monowidth/cospan.hpp"

namespace mw {

// An atomic morphism: a name, its arities, and its weight. When the atom
// lives in the cospan category the cospan itself is attached.
struct Atom {
    std::string name;
    int dom = 0;
    int cod = 0;
    int weight = 0;
    std::optional<Cospan> cospan;
};

using AtomPtr = std::shared_ptr<const Atom>;

AtomPtr make_atom(std::string name, int dom, int cod, int weight);
AtomPtr cospan_atom(std::string name, Cospan c);

// Monoidal decomposition term. Immutable; copies share structure. Typing is
// checked when nodes are built, so every value is well typed.
class DecompTree {
public:
    enum class Op { leaf, tensor, compose };

    static DecompTree leaf(AtomPtr a);
    static DecompTree leaf(const Cospan& c, std::string name = "g");
    static DecompTree tensor(const DecompTree& l, const DecompTree& r);
    // Throws type_error unless l.cod() == r.dom().
    static DecompTree compose(const DecompTree& l, const DecompTree& r);

    Op op() const { return node_->op; }
    bool is_leaf() const { return node_->op == Op::leaf; }
    const Atom& atom() const;
    const AtomPtr& atom_ptr() const { return node_->atom; }
    const DecompTree& left() const;
    const DecompTree& right() const;
    // Arity of the composition boundary; only meaningful on compose nodes.
    int cut() const { return node_->cut; }
    int dom() const { return node_->dom; }
    int cod() const { return node_->cod; }

    // leaf: atom weight; tensor: max of children; compose: max(l, cut, r).
    int width() const { return node_->width; }
    int node_count() const { return node_->count; }

private:
    struct Node {
        Op op = Op::leaf;
        AtomPtr atom;
        std::shared_ptr<const DecompTree> l, r;
        int cut = 0, dom = 0, cod = 0, width = 0, count = 1;
    };
    explicit DecompTree(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    std::shared_ptr<const Node> node_;
};

// A table of named atoms.
class Signature {
public:
    void add(const std::string& name, int dom, int cod, int weight);
    void add(AtomPtr a);
    AtomPtr at(const std::string& name) const;
    DecompTree leaf(const std::string& name) const { return DecompTree::leaf(at(name)); }

private:
    std::map<std::string, AtomPtr> atoms_;
};

// Tensor of a non-empty list, associated to the right.
DecompTree tensor_all(const std::vector<DecompTree>& parts);
// Composite of a non-empty list, associated to the right.
DecompTree compose_all(const std::vector<DecompTree>& parts);

// Max node weight over the labelled tree. Agrees with width().
int width_by_nodes(const DecompTree& d);

bool is_right_tree(const DecompTree& d);
bool is_left_tree(const DecompTree& d);
bool is_path(const DecompTree& d);

// Folds the term back into a cospan. Throws type_error naming the node path
// (e.g. "root.1.0") when an atom has no cospan or its arity disagrees.
Cospan evaluate(const DecompTree& d);

// Compact, deterministic text form used for tie-breaking and golden tests.
std::string serialize(const DecompTree& d);

nlohmann::json decomp_to_json(const DecompTree& d);
DecompTree decomp_from_json(const nlohmann::json& j);
std::string decomp_to_dot(const DecompTree& d);

}  // namespace mw
