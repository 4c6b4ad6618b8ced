#include "monowidth/search.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <optional>

namespace mw {

namespace {

using Mask = std::uint32_t;

struct Key {
    Mask vmask = 0;
    Mask emask = 0;
    std::vector<int> left;
    std::vector<int> right;
    auto operator<=>(const Key&) const = default;
};

struct Entry {
    DecompTree term;
    int width;
};

Mask bit(int i) { return Mask{1} << i; }

Mask mask_of(const std::vector<int>& xs) {
    Mask m = 0;
    for (int x : xs) m |= bit(x);
    return m;
}

std::vector<int> members(Mask m) {
    std::vector<int> out;
    for (int i = 0; m; ++i, m >>= 1)
        if (m & 1) out.push_back(i);
    return out;
}

// Splits of k items tried exhaustively up to this count; above it only
// single items are split off.
constexpr int kExhaustiveItems = 12;

class Searcher {
public:
    Searcher(const Cospan& g, SearchShape shape, SearchBudget budget) : shape_(shape), budget_(budget) {
        const auto& vs = g.apex.vertices();
        if (vs.size() > 30 || g.apex.num_edges() > 30)
            throw refusal_error("monoidal search handles at most 30 vertices and 30 edges");
        std::map<int, int> index;
        for (int v : vs) index.emplace(v, static_cast<int>(index.size()));
        for (const auto& [_, en] : g.apex.edges()) {
            eu_.push_back(index.at(en.u));
            ev_.push_back(index.at(en.v));
        }
        for (int v : g.left) root_.left.push_back(index.at(v));
        for (int v : g.right) root_.right.push_back(index.at(v));
        root_.vmask = vs.empty() ? 0 : static_cast<Mask>((std::uint64_t{1} << vs.size()) - 1);
        root_.emask = eu_.empty() ? 0 : static_cast<Mask>((std::uint64_t{1} << eu_.size()) - 1);
    }

    SearchResult run() {
        const Entry& e = solve(root_);
        return {e.term, e.width, bound_only_, states_};
    }

private:
    SearchShape shape_;
    SearchBudget budget_;
    std::vector<int> eu_, ev_;
    Key root_;
    std::map<Key, Entry> memo_;
    std::size_t states_ = 0;
    bool bound_only_ = false;

    Mask ends(Mask emask) const {
        Mask m = 0;
        for (int e : members(emask)) m |= bit(eu_[e]) | bit(ev_[e]);
        return m;
    }

    DecompTree leaf(const Key& k) const {
        Graph h;
        for (int v : members(k.vmask)) h.add_vertex(v);
        for (int e : members(k.emask)) h.add_edge(e, eu_[e], ev_[e]);
        return DecompTree::leaf(make_cospan(h, k.left, k.right), "g");
    }

    static bool better(const DecompTree& a, const DecompTree& b) {
        if (a.width() != b.width()) return a.width() < b.width();
        if (a.node_count() != b.node_count()) return a.node_count() < b.node_count();
        return serialize(a) < serialize(b);
    }

    static void offer(std::optional<DecompTree>& best, const DecompTree& cand) {
        if (!best || better(cand, *best)) best = cand;
    }

    const Entry& solve(const Key& k) {
        if (auto it = memo_.find(k); it != memo_.end()) return it->second;
        std::optional<DecompTree> best = leaf(k);
        if (states_ >= budget_.max_states) {
            bound_only_ = true;
        } else {
            ++states_;
            search_splits(k, best);
        }
        return memo_.emplace(k, Entry{*best, best->width()}).first->second;
    }

    // A child can be solved or, when the shape forces it, kept as an atom.
    DecompTree child(const Key& k, bool as_leaf) { return as_leaf ? leaf(k) : solve(k).term; }

    void search_splits(const Key& k, std::optional<DecompTree>& best) {
        std::vector<int> edges = members(k.emask);
        Mask touched = ends(k.emask);
        std::vector<int> isolated = members(k.vmask & ~touched);
        int n_items = static_cast<int>(edges.size() + isolated.size());
        auto item_split = [&](std::uint64_t s, Mask& e1, Mask& i1, Mask& e2, Mask& i2) {
            e1 = i1 = e2 = i2 = 0;
            for (int i = 0; i < n_items; ++i) {
                bool first = (s >> i) & 1;
                if (i < static_cast<int>(edges.size()))
                    (first ? e1 : e2) |= bit(edges[i]);
                else
                    (first ? i1 : i2) |= bit(isolated[i - edges.size()]);
            }
        };
        std::vector<std::uint64_t> splits;
        if (n_items <= kExhaustiveItems) {
            for (std::uint64_t s = 0; s < (std::uint64_t{1} << n_items); ++s) splits.push_back(s);
        } else {
            for (int i = 0; i < n_items; ++i) {
                splits.push_back(std::uint64_t{1} << i);
                splits.push_back(((std::uint64_t{1} << n_items) - 1) ^ (std::uint64_t{1} << i));
            }
        }
        Mask lmask = mask_of(k.left), rmask = mask_of(k.right);

        for (std::uint64_t s : splits) {
            Mask e1, i1, e2, i2;
            item_split(s, e1, i1, e2, i2);
            compose_split(k, e1, i1 | lmask, e2, i2 | rmask, best);
            if (shape_ != SearchShape::path && k.right.empty() && e1 + i1 != 0 && e2 + i2 != 0 && (s & 1))
                frobenius_split(k, e1, i1, e2, i2, lmask, best);
        }
        if (shape_ != SearchShape::path) tensor_splits(k, best);
    }

    void compose_split(const Key& k, Mask e1, Mask extra1, Mask e2, Mask extra2, std::optional<DecompTree>& best) {
        Mask v1 = ends(e1) | extra1, v2 = ends(e2) | extra2;
        if ((v1 == k.vmask && e1 == k.emask) || (v2 == k.vmask && e2 == k.emask)) return;
        std::vector<int> cut = members(v1 & v2);
        if (static_cast<int>(cut.size()) > best->width()) return;
        Key k1{v1, e1, k.left, cut}, k2{v2, e2, cut, k.right};
        DecompTree l = child(k1, shape_ != SearchShape::any);
        DecompTree r = child(k2, false);
        offer(best, DecompTree::compose(l, r));
    }

    void frobenius_split(const Key& k, Mask e1, Mask i1, Mask e2, Mask i2, Mask lmask,
                         std::optional<DecompTree>& best) {
        Mask p1 = ends(e1) | i1, p2 = ends(e2) | i2;
        Mask shared = p1 & p2;
        Mask hub = lmask | shared;
        std::vector<int> x1 = members(p1 & hub), x2 = members(p2 & hub);
        if (std::popcount(hub) > best->width()) return;
        Graph disc;
        for (int v : members(hub)) disc.add_vertex(v);
        std::vector<int> mid = x1;
        mid.insert(mid.end(), x2.begin(), x2.end());
        DecompTree h = DecompTree::leaf(make_cospan(disc, k.left, mid), "g");
        DecompTree c1 = child(Key{p1, e1, x1, {}}, false);
        DecompTree c2 = child(Key{p2, e2, x2, {}}, false);
        offer(best, DecompTree::compose(h, DecompTree::tensor(c1, c2)));
    }

    // Positions of seq whose vertex lies in `side`, followed by the others.
    static std::vector<int> regroup(const std::vector<int>& seq, Mask side) {
        std::vector<int> pos;
        for (int pass = 0; pass < 2; ++pass)
            for (std::size_t i = 0; i < seq.size(); ++i)
                if (((side & bit(seq[i])) != 0) == (pass == 0)) pos.push_back(static_cast<int>(i));
        return pos;
    }

    static bool is_identity(const std::vector<int>& p) {
        for (std::size_t i = 0; i < p.size(); ++i)
            if (p[i] != static_cast<int>(i)) return false;
        return true;
    }

    void tensor_splits(const Key& k, std::optional<DecompTree>& best) {
        // Components of the subproblem graph.
        std::vector<Mask> comps;
        Mask rest = k.vmask;
        while (rest) {
            Mask c = rest & (~rest + 1), grown = 0;
            while (grown != c) {
                grown = c;
                for (int e : members(k.emask))
                    if (c & (bit(eu_[e]) | bit(ev_[e]))) c |= bit(eu_[e]) | bit(ev_[e]);
            }
            comps.push_back(c);
            rest &= ~c;
        }
        if (comps.size() < 2 || comps.size() > 16) return;
        for (std::uint32_t g = 1; g + 1 < (1u << comps.size()); ++g) {
            Mask side = 0;
            for (std::size_t i = 0; i < comps.size(); ++i)
                if ((g >> i) & 1) side |= comps[i];
            std::vector<int> lpos = regroup(k.left, side), rpos = regroup(k.right, side);
            bool lperm = !is_identity(lpos), rperm = !is_identity(rpos);
            if (rperm && shape_ != SearchShape::any) continue;
            if (lperm && shape_ == SearchShape::path) continue;
            auto pick = [&](const std::vector<int>& seq, Mask in) {
                std::vector<int> out;
                for (int v : seq)
                    if (in & bit(v)) out.push_back(v);
                return out;
            };
            Mask other = k.vmask & ~side;
            Key k1{side, k.emask & ~ends_outside(k.emask, side), pick(k.left, side), pick(k.right, side)};
            Key k2{other, k.emask & ~ends_outside(k.emask, other), pick(k.left, other), pick(k.right, other)};
            DecompTree t = DecompTree::tensor(child(k1, false), child(k2, false));
            if (rperm) {
                // output j of the permutation is original right position j
                std::vector<int> inv(rpos.size());
                for (std::size_t j = 0; j < rpos.size(); ++j) inv[rpos[j]] = static_cast<int>(j);
                t = DecompTree::compose(t, DecompTree::leaf(permutation(inv), "perm"));
            }
            if (lperm) t = DecompTree::compose(DecompTree::leaf(permutation(lpos), "perm"), t);
            offer(best, t);
        }
    }

    Mask ends_outside(Mask emask, Mask side) const {
        Mask out = 0;
        for (int e : members(emask))
            if (!(side & bit(eu_[e]))) out |= bit(e);
        return out;
    }
};

}  // namespace

SearchResult bounded_mwd_search(const Cospan& g, SearchShape shape, SearchBudget budget) {
    check_cospan(g);
    return Searcher(g, shape, budget).run();
}

}  // namespace mw
