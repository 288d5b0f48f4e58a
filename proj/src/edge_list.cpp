#include "scx/edge_list.hpp"

#include <istream>
#include <sstream>
#include <string>

namespace scx {
namespace {

// Reads the next non-comment line; returns false at EOF.
bool next_data_line(std::istream& in, std::string& line, std::size_t& lineno) {
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (!line.empty() && line[0] == '#') continue;
        return true;
    }
    return false;
}

struct Header {
    std::size_t n, m;
};

Header parse_header(std::istream& in, std::size_t& lineno) {
    std::string line;
    if (!next_data_line(in, line, lineno))
        throw ParseError(lineno + 1, "missing header line \"n m\"");
    std::istringstream ss(line);
    long long n = -1, m = -1;
    std::string extra;
    if (!(ss >> n >> m) || (ss >> extra) || n < 0 || m < 0)
        throw ParseError(lineno, "malformed header, expected \"n m\"");
    return {static_cast<std::size_t>(n), static_cast<std::size_t>(m)};
}

std::pair<VertexId, VertexId> parse_edge_line(const std::string& line, std::size_t lineno,
                                              std::size_t n) {
    std::istringstream ss(line);
    long long u = -1, v = -1;
    std::string extra;
    if (!(ss >> u >> v) || (ss >> extra) || u < 0 || v < 0)
        throw ParseError(lineno, "malformed edge line, expected \"u v\"");
    if (static_cast<std::size_t>(u) >= n || static_cast<std::size_t>(v) >= n)
        throw ParseError(lineno, "vertex id out of range [0, " + std::to_string(n) + ")");
    return {static_cast<VertexId>(u), static_cast<VertexId>(v)};
}

}  // namespace

DirectedGraph parse_directed_edge_list(std::istream& in) {
    std::size_t lineno = 0;
    Header h = parse_header(in, lineno);
    DirectedGraph g(h.n);
    std::string line;
    for (std::size_t i = 0; i < h.m; ++i) {
        if (!next_data_line(in, line, lineno))
            throw ParseError(lineno, "expected " + std::to_string(h.m) + " edges, got " +
                                         std::to_string(i));
        auto [u, v] = parse_edge_line(line, lineno, h.n);
        g.add_edge(u, v);
    }
    return g;
}

UndirectedGraph parse_undirected_edge_list(std::istream& in) {
    std::size_t lineno = 0;
    Header h = parse_header(in, lineno);
    UndirectedGraph g(h.n);
    std::string line;
    for (std::size_t i = 0; i < h.m; ++i) {
        if (!next_data_line(in, line, lineno))
            throw ParseError(lineno, "expected " + std::to_string(h.m) + " edges, got " +
                                         std::to_string(i));
        auto [u, v] = parse_edge_line(line, lineno, h.n);
        if (u == v) throw ParseError(lineno, "self-loop not allowed in undirected graph");
        if (g.has_edge(u, v)) throw ParseError(lineno, "duplicate undirected edge");
        g.add_edge(u, v);
    }
    return g;
}

std::string serialize_edge_list(const DirectedGraph& g) {
    std::ostringstream out;
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        if (!g.vertex_alive(v)) continue;
        g.for_each_out_edge(v, [&](EdgeId e) {
            out << g.edge_tail(e) << ' ' << g.edge_head(e) << '\n';
        });
    }
    return out.str();
}

std::string serialize_edge_list(const UndirectedGraph& g) {
    std::ostringstream out;
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

}  // namespace scx
