#include <algorithm>
#include <bit>
#include <cstdint>
#include <fstream>
#include <tuple>

#include <nlohmann/json.hpp>

#include "monowidth/oracles.hpp"

namespace mw {

std::vector<Graph> enumerate_graphs(int max_v, int max_e) {
    if (max_v > 6) throw refusal_error("catalog is limited to 6 vertices");
    struct Item {
        int n, m;
        std::string code;
        Graph g;
    };
    std::vector<Item> items;
    for (int n = 1; n <= max_v; ++n) {
        std::vector<std::pair<int, int>> pairs;
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b) pairs.emplace_back(a, b);
        std::map<std::string, Graph> seen;
        int np = static_cast<int>(pairs.size());
        for (std::uint32_t s = 0; s < (1u << np); ++s) {
            if (std::popcount(s) > max_e) continue;
            Graph g;
            for (int v = 0; v < n; ++v) g.add_vertex(v);
            for (int i = 0; i < np; ++i)
                if ((s >> i) & 1) g.add_edge(pairs[i].first, pairs[i].second);
            std::string code = canonical_form(g);
            if (!seen.count(code)) seen.emplace(code, canonical_graph(g));
        }
        for (auto& [code, g] : seen) items.push_back({n, static_cast<int>(g.num_edges()), code, std::move(g)});
    }
    std::stable_sort(items.begin(), items.end(), [](const Item& a, const Item& b) {
        return std::tie(a.n, a.m, a.code) < std::tie(b.n, b.m, b.code);
    });
    std::vector<Graph> out;
    for (auto& it : items) out.push_back(std::move(it.g));
    return out;
}

ResultsCache::ResultsCache(std::string path) : path_(std::move(path)) {
    std::ifstream in(path_);
    if (!in) return;
    nlohmann::json j = nlohmann::json::parse(in, nullptr, false);
    if (!j.is_object()) return;
    for (const auto& [code, w] : j.items()) {
        if (!w.is_object() || !w.contains("tw") || !w.contains("pw") || !w.contains("bw")) continue;
        entries_[code] = {w["tw"].get<int>(), w["pw"].get<int>(), w["bw"].get<int>()};
    }
}

std::optional<Widths> ResultsCache::get(const Graph& g) const {
    auto it = entries_.find(canonical_form(g));
    if (it == entries_.end()) return std::nullopt;
    return it->second;
}

void ResultsCache::put(const Graph& g, const Widths& w) { entries_[canonical_form(g)] = w; }

Widths ResultsCache::widths(const Graph& g, OracleLimits limits) {
    if (auto w = get(g)) return *w;
    Widths w = exact_widths(g, limits);
    put(g, w);
    return w;
}

void ResultsCache::save() const {
    nlohmann::json j = nlohmann::json::object();
    for (const auto& [code, w] : entries_) j[code] = {{"tw", w.tw}, {"pw", w.pw}, {"bw", w.bw}};
    std::ofstream out(path_);
    if (!out) throw std::runtime_error("cannot write cache file " + path_);
    out << j.dump(1) << "\n";
}

}  // namespace mw
