#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "monowidth/graph.hpp"

namespace mw {

namespace {

int parse_id(const std::string& tok, int line) {
    std::size_t used = 0;
    int value = 0;
    try {
        value = std::stoi(tok, &used);
    } catch (const std::exception&) {
        throw parse_error("expected a vertex id, got '" + tok + "'", line);
    }
    if (used != tok.size() || value < 0) throw parse_error("expected a vertex id, got '" + tok + "'", line);
    return value;
}

}  // namespace

// Endpoints of `e` lines and `s` lines are added as vertices if they were not
// declared before.
SourcedGraph read_graph_text(std::istream& in) {
    SourcedGraph sg;
    std::string raw;
    int line = 0;
    while (std::getline(in, raw)) {
        ++line;
        if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        std::istringstream ls(raw);
        std::string cmd;
        if (!(ls >> cmd)) continue;
        std::vector<std::string> args;
        for (std::string t; ls >> t;) args.push_back(t);

        auto want = [&](std::size_t n) {
            if (args.size() != n)
                throw parse_error("'" + cmd + "' takes " + std::to_string(n) + " argument(s)", line);
        };
        if (cmd == "v") {
            want(1);
            sg.graph.add_vertex(parse_id(args[0], line));
        } else if (cmd == "e") {
            want(2);
            int a = parse_id(args[0], line), b = parse_id(args[1], line);
            sg.graph.add_vertex(a);
            sg.graph.add_vertex(b);
            sg.graph.add_edge(a, b);
        } else if (cmd == "s") {
            want(1);
            int a = parse_id(args[0], line);
            sg.graph.add_vertex(a);
            sg.sources.insert(a);
        } else {
            throw parse_error("unknown directive '" + cmd + "'", line);
        }
    }
    return sg;
}

SourcedGraph parse_graph_text(const std::string& text) {
    std::istringstream in(text);
    return read_graph_text(in);
}

SourcedGraph load_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open " + path);
    return read_graph_text(in);
}

void write_graph_text(std::ostream& out, const SourcedGraph& g) {
    for (int v : g.graph.vertices()) out << "v " << v << '\n';
    for (const auto& [_, en] : g.graph.edges()) out << "e " << en.u << ' ' << en.v << '\n';
    for (int s : g.sources) out << "s " << s << '\n';
}

std::string graph_to_text(const SourcedGraph& g) {
    std::ostringstream os;
    write_graph_text(os, g);
    return os.str();
}

}  // namespace mw
