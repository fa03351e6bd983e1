#pragma once

#include <string>
#include <utility>
#include <vector>

#include "chroma/cliques.hpp"
#include "chroma/graph.hpp"

namespace chroma {

// Directed graph whose underlying support is a simple graph.  A bidirected
// edge (both arcs present) models the paper's "pair of opposite arcs".
struct Digraph {
    int n = 0;
    std::vector<VertexSet> out;
    std::vector<VertexSet> in;

    Digraph() = default;
    explicit Digraph(int n_) : n(n_), out(static_cast<std::size_t>(n_)), in(static_cast<std::size_t>(n_)) {
        if (n_ < 0 || n_ > kMaxVertices)
            throw precondition_error("digraph vertex count out of range: " + std::to_string(n_));
    }

    void add_arc(int u, int v) {
        if (u == v) throw precondition_error("digraph: self-loop at " + std::to_string(u));
        out[static_cast<std::size_t>(u)].add(v);
        in[static_cast<std::size_t>(v)].add(u);
    }
    void add_bidirected(int u, int v) {
        add_arc(u, v);
        add_arc(v, u);
    }
    bool has_arc(int u, int v) const { return out[static_cast<std::size_t>(u)].contains(v); }
    bool bidirected(int u, int v) const { return has_arc(u, v) && has_arc(v, u); }
    int out_degree(int v) const { return out[static_cast<std::size_t>(v)].count(); }
    int in_degree(int v) const { return in[static_cast<std::size_t>(v)].count(); }
    long arc_count() const {
        long m = 0;
        for (int v = 0; v < n; ++v) m += out_degree(v);
        return m;
    }
    std::vector<std::pair<int, int>> arcs() const {
        std::vector<std::pair<int, int>> a;
        for (int u = 0; u < n; ++u)
            for (int v : iterate(out[static_cast<std::size_t>(u)])) a.emplace_back(u, v);
        return a;
    }

    Graph underlying() const {
        Graph g(n);
        for (int u = 0; u < n; ++u)
            for (int v : iterate(out[static_cast<std::size_t>(u)]))
                if (!g.has_edge(u, v)) g.add_edge(u, v);
        return g;
    }
};

// Kernel: independent set I in D[s] such that every vertex of s - I has an
// arc into I.
inline bool is_kernel(const Digraph& d, VertexSet candidate, VertexSet s) {
    if (!candidate.subset_of(s)) return false;
    for (int v : iterate(candidate))
        if ((d.out[static_cast<std::size_t>(v)] & candidate).count() ||
            (d.in[static_cast<std::size_t>(v)] & candidate).count())
            return false;  // not independent in the underlying graph
    for (int v : iterate(s - candidate))
        if (!(d.out[static_cast<std::size_t>(v)] & candidate).count()) return false;
    return true;
}

}  // namespace chroma
