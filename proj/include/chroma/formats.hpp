#pragma once

#include <cctype>
#include <cstddef>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "chroma/graph.hpp"

namespace chroma {

enum class GraphFormat { graph6, dimacs_col, edge_list };

inline const char* format_name(GraphFormat f) {
    switch (f) {
        case GraphFormat::graph6: return "graph6";
        case GraphFormat::dimacs_col: return "dimacs_col";
        case GraphFormat::edge_list: return "edge_list";
    }
    return "?";
}

namespace detail {

inline std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

}  // namespace detail

// --- graph6 (bit-exact per the public format description) ---------------
//
// Header: n<=62 encoded as one byte n+63; 63<=n<=258047 as '~' followed by
// three bytes holding 18 bits big-endian.  Body: the upper triangle of the
// adjacency matrix in column order (0,1),(0,2),(1,2),(0,3),..., packed six
// bits per byte (MSB first), zero-padded, each byte offset by 63.

inline Graph parse_graph6(std::string_view text) {
    std::string_view s = detail::trim(text);
    if (s.empty()) throw parse_error("graph6: empty input", 0);
    if (s.substr(0, 10) == ">>graph6<<") s.remove_prefix(10);
    std::size_t pos = 0;
    auto byte = [&](std::size_t i) -> int {
        if (i >= s.size()) throw parse_error("graph6: truncated", i);
        int c = static_cast<unsigned char>(s[i]);
        if (c < 63 || c > 126) throw parse_error("graph6: byte out of range", i);
        return c - 63;
    };
    long n;
    if (s[0] == '~') {
        if (s.size() >= 2 && s[1] == '~')
            throw parse_error("graph6: vertex counts above 258047 not supported", 1);
        n = (static_cast<long>(byte(1)) << 12) | (byte(2) << 6) | byte(3);
        pos = 4;
    } else {
        n = byte(0);
        pos = 1;
    }
    if (n > kMaxVertices)
        throw scale_refusal("graph6: " + std::to_string(n) + " vertices exceeds the supported " +
                            std::to_string(kMaxVertices));
    Graph g(static_cast<int>(n));
    long nbits = n * (n - 1) / 2;
    long need = (nbits + 5) / 6;
    if (static_cast<long>(s.size()) - static_cast<long>(pos) < need)
        throw parse_error("graph6: body too short", s.size());
    if (static_cast<long>(s.size()) - static_cast<long>(pos) > need)
        throw parse_error("graph6: trailing bytes after body", pos + static_cast<std::size_t>(need));
    long bit = 0;
    for (int col = 1; col < g.n; ++col)
        for (int row = 0; row < col; ++row, ++bit) {
            int b = byte(pos + static_cast<std::size_t>(bit / 6));
            if ((b >> (5 - bit % 6)) & 1) g.add_edge(row, col);
        }
    // padding bits must be zero for a canonical encoding
    for (long p = bit; p < need * 6; ++p) {
        int b = byte(pos + static_cast<std::size_t>(p / 6));
        if ((b >> (5 - p % 6)) & 1)
            throw parse_error("graph6: nonzero padding bit", pos + static_cast<std::size_t>(p / 6));
    }
    return g;
}

inline std::string serialize_graph6(const Graph& g) {
    std::string out;
    if (g.n <= 62) {
        out.push_back(static_cast<char>(g.n + 63));
    } else {
        out.push_back('~');
        out.push_back(static_cast<char>(((g.n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((g.n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((g.n & 63) + 63));
    }
    int acc = 0, nb = 0;
    for (int col = 1; col < g.n; ++col)
        for (int row = 0; row < col; ++row) {
            acc = (acc << 1) | (g.has_edge(row, col) ? 1 : 0);
            if (++nb == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                nb = 0;
            }
        }
    if (nb > 0) out.push_back(static_cast<char>((acc << (6 - nb)) + 63));
    return out;
}

// --- DIMACS .col ("p edge n m" header, "e u v" lines, 1-indexed) ---------

inline Graph parse_dimacs(std::string_view text) {
    std::optional<Graph> g;
    long declared_edges = -1, seen_edges = 0;
    std::size_t offset = 0;
    std::size_t line_start = 0;
    std::string line;
    auto fail = [&](const std::string& msg) { throw parse_error("dimacs: " + msg, line_start); };
    std::istringstream in{std::string(text)};
    while (std::getline(in, line)) {
        line_start = offset;
        offset += line.size() + 1;
        std::string_view l = detail::trim(line);
        if (l.empty() || l[0] == 'c') continue;
        std::istringstream ls{std::string(l)};
        std::string kw;
        ls >> kw;
        if (kw == "p") {
            std::string fmt;
            long n, m;
            if (!(ls >> fmt >> n >> m) || (fmt != "edge" && fmt != "edges" && fmt != "col"))
                fail("bad problem line");
            if (g) fail("duplicate problem line");
            if (n > kMaxVertices)
                throw scale_refusal("dimacs: " + std::to_string(n) + " vertices exceeds the supported " +
                                    std::to_string(kMaxVertices));
            g.emplace(static_cast<int>(n));
            declared_edges = m;
        } else if (kw == "e") {
            long u, v;
            if (!(ls >> u >> v)) fail("bad edge line");
            if (!g) fail("edge before problem line");
            if (u < 1 || u > g->n || v < 1 || v > g->n) fail("edge endpoint out of range");
            if (u == v) fail("self-loop");
            if (g->has_edge(static_cast<int>(u - 1), static_cast<int>(v - 1))) fail("duplicate edge");
            g->add_edge(static_cast<int>(u - 1), static_cast<int>(v - 1));
            ++seen_edges;
        } else if (kw == "n") {
            // vertex line (precoloring extensions); ignored
        } else {
            fail("unknown line type '" + kw + "'");
        }
    }
    if (!g) throw parse_error("dimacs: missing problem line", 0);
    if (declared_edges >= 0 && declared_edges != seen_edges)
        throw parse_error("dimacs: header declares " + std::to_string(declared_edges) +
                              " edges, found " + std::to_string(seen_edges),
                          0);
    return *g;
}

inline std::string serialize_dimacs(const Graph& g) {
    std::ostringstream out;
    out << "p edge " << g.n << " " << g.edge_count() << "\n";
    for (auto [u, v] : g.edges()) out << "e " << u + 1 << " " << v + 1 << "\n";
    return out.str();
}

// --- whitespace edge list, 0-indexed; vertex count inferred --------------

inline Graph parse_edge_list(std::string_view text) {
    std::vector<std::pair<long, long>> edges;
    long max_v = -1;
    std::size_t offset = 0, line_start = 0;
    std::string line;
    std::istringstream in{std::string(text)};
    while (std::getline(in, line)) {
        line_start = offset;
        offset += line.size() + 1;
        std::string_view l = detail::trim(line);
        if (l.empty() || l[0] == '#') continue;
        std::istringstream ls{std::string(l)};
        long u, v;
        if (!(ls >> u >> v)) throw parse_error("edge_list: expected two vertex indices", line_start);
        std::string extra;
        if (ls >> extra) throw parse_error("edge_list: trailing tokens", line_start);
        if (u < 0 || v < 0) throw parse_error("edge_list: negative vertex index", line_start);
        if (u == v) throw parse_error("edge_list: self-loop", line_start);
        edges.emplace_back(u, v);
        max_v = std::max({max_v, u, v});
    }
    if (max_v >= kMaxVertices)
        throw scale_refusal("edge_list: vertex index " + std::to_string(max_v) +
                            " exceeds the supported " + std::to_string(kMaxVertices - 1));
    Graph g(static_cast<int>(max_v + 1));
    for (auto [u, v] : edges) {
        if (g.has_edge(static_cast<int>(u), static_cast<int>(v)))
            throw parse_error("edge_list: duplicate edge " + std::to_string(u) + " " +
                              std::to_string(v),
                              0);
        g.add_edge(static_cast<int>(u), static_cast<int>(v));
    }
    return g;
}

inline std::string serialize_edge_list(const Graph& g) {
    std::ostringstream out;
    for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
    return out.str();
}

inline Graph parse(std::string_view text, GraphFormat f) {
    switch (f) {
        case GraphFormat::graph6: return parse_graph6(text);
        case GraphFormat::dimacs_col: return parse_dimacs(text);
        case GraphFormat::edge_list: return parse_edge_list(text);
    }
    throw precondition_error("unknown format");
}

// Format sniffing: DIMACS lines start with c/p/e keywords, an edge list is
// all integer pairs, anything else is treated as graph6.
inline GraphFormat sniff_format(std::string_view text) {
    std::string line;
    std::istringstream in{std::string(text)};
    while (std::getline(in, line)) {
        std::string_view l = detail::trim(line);
        if (l.empty()) continue;
        if (l[0] == 'c' || l[0] == 'p') return GraphFormat::dimacs_col;
        std::istringstream ls{std::string(l)};
        long u, v;
        std::string extra;
        if (ls >> u >> v && !(ls >> extra)) return GraphFormat::edge_list;
        return GraphFormat::graph6;
    }
    return GraphFormat::graph6;
}

}  // namespace chroma
