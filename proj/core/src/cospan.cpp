#include "monowidth/cospan.hpp"

#include <algorithm>
#include <numeric>

#include <nlohmann/json.hpp>

namespace mw {

void check_cospan(const Cospan& c) {
    for (int v : c.left)
        if (!c.apex.has_vertex(v)) throw std::domain_error("left leg hits missing vertex " + std::to_string(v));
    for (int v : c.right)
        if (!c.apex.has_vertex(v)) throw std::domain_error("right leg hits missing vertex " + std::to_string(v));
}

Cospan compose(const Cospan& a, const Cospan& b) {
    if (a.cod() != b.dom())
        throw type_error("cannot compose " + std::to_string(a.dom()) + "->" + std::to_string(a.cod()) +
                         " with " + std::to_string(b.dom()) + "->" + std::to_string(b.cod()));
    Colimit po = graph_pushout(a.apex, b.apex, a.right, b.left);
    Cospan out;
    out.apex = std::move(po.apex);
    for (int v : a.left) out.left.push_back(po.in1.vmap.at(v));
    for (int v : b.right) out.right.push_back(po.in2.vmap.at(v));
    return out;
}

Cospan tensor(const Cospan& a, const Cospan& b) {
    Colimit co = graph_coproduct(a.apex, b.apex);
    Cospan out;
    out.apex = std::move(co.apex);
    for (int v : a.left) out.left.push_back(co.in1.vmap.at(v));
    for (int v : b.left) out.left.push_back(co.in2.vmap.at(v));
    for (int v : a.right) out.right.push_back(co.in1.vmap.at(v));
    for (int v : b.right) out.right.push_back(co.in2.vmap.at(v));
    return out;
}

namespace {

Graph discrete(int n) {
    Graph g;
    for (int i = 0; i < n; ++i) g.add_vertex(i);
    return g;
}

std::vector<int> iota_vec(int n) {
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 0);
    return v;
}

}  // namespace

Cospan identity(int n) { return Cospan{discrete(n), iota_vec(n), iota_vec(n)}; }

Cospan swap_cospan(int n, int m) {
    Cospan c{discrete(n + m), iota_vec(n + m), {}};
    for (int j = 0; j < m; ++j) c.right.push_back(n + j);
    for (int j = 0; j < n; ++j) c.right.push_back(j);
    return c;
}

Cospan permutation(const std::vector<int>& perm) {
    int n = static_cast<int>(perm.size());
    std::vector<int> check = perm;
    std::sort(check.begin(), check.end());
    if (check != iota_vec(n)) throw precondition_error("not a permutation");
    return Cospan{discrete(n), iota_vec(n), perm};
}

Cospan copy_cospan(int n) {
    Cospan c{discrete(n), iota_vec(n), iota_vec(n)};
    c.right.insert(c.right.end(), c.left.begin(), c.left.end());
    return c;
}

Cospan merge_cospan(int n) {
    Cospan c = copy_cospan(n);
    std::swap(c.left, c.right);
    return c;
}

Cospan delete_cospan(int n) { return Cospan{discrete(n), iota_vec(n), {}}; }

Cospan create_cospan(int n) { return Cospan{discrete(n), {}, iota_vec(n)}; }

Cospan edge_cospan() {
    Cospan c{discrete(2), {0}, {1}};
    c.apex.add_edge(0, 1);
    return c;
}

Cospan sourced_cospan(const Graph& g, const std::vector<int>& order) { return make_cospan(g, order, {}); }

Cospan make_cospan(const Graph& g, const std::vector<int>& left, const std::vector<int>& right) {
    Cospan c{g, left, right};
    check_cospan(c);
    return c;
}

bool cospan_iso_eq(const Cospan& a, const Cospan& b) {
    if (a.dom() != b.dom() || a.cod() != b.cod()) return false;
    std::map<int, int> fixed;
    auto pin = [&](int x, int y) {
        auto [it, inserted] = fixed.emplace(x, y);
        return inserted || it->second == y;
    };
    for (int i = 0; i < a.dom(); ++i)
        if (!pin(a.left[i], b.left[i])) return false;
    for (int i = 0; i < a.cod(); ++i)
        if (!pin(a.right[i], b.right[i])) return false;
    return graph_isomorphic(a.apex, b.apex, fixed).has_value();
}

nlohmann::json cospan_to_json(const Cospan& c) {
    nlohmann::json j;
    j["left"] = iota_vec(c.dom());
    j["right"] = iota_vec(c.cod());
    nlohmann::json apex;
    apex["v"] = std::vector<int>(c.apex.vertices().begin(), c.apex.vertices().end());
    nlohmann::json es = nlohmann::json::array();
    for (const auto& [id, en] : c.apex.edges()) es.push_back({id, en.u, en.v});
    apex["e"] = es;
    j["apex"] = apex;
    nlohmann::json legl = nlohmann::json::object(), legr = nlohmann::json::object();
    for (int i = 0; i < c.dom(); ++i) legl[std::to_string(i)] = c.left[i];
    for (int i = 0; i < c.cod(); ++i) legr[std::to_string(i)] = c.right[i];
    j["legL"] = legl;
    j["legR"] = legr;
    return j;
}

Cospan cospan_from_json(const nlohmann::json& j) {
    try {
        Cospan c;
        for (int v : j.at("apex").at("v").get<std::vector<int>>()) c.apex.add_vertex(v);
        for (const auto& e : j.at("apex").at("e")) {
            if (e.size() == 3)
                c.apex.add_edge(e.at(0).get<int>(), e.at(1).get<int>(), e.at(2).get<int>());
            else
                c.apex.add_edge(e.at(0).get<int>(), e.at(1).get<int>());
        }
        auto legs = [&](const char* pos, const char* leg) {
            std::vector<int> out;
            for (int p : j.at(pos).get<std::vector<int>>()) out.push_back(j.at(leg).at(std::to_string(p)).get<int>());
            return out;
        };
        c.left = legs("left", "legL");
        c.right = legs("right", "legR");
        check_cospan(c);
        return c;
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(std::string("bad cospan json: ") + e.what());
    } catch (const std::domain_error& e) {
        throw parse_error(std::string("bad cospan json: ") + e.what());
    }
}

}  // namespace mw
