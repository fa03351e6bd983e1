#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "chroma/error.hpp"
#include "chroma/vertex_set.hpp"

namespace chroma {

// Simple undirected graph on vertices 0..n-1.  Immutable in spirit: all
// algorithms take graphs by const reference and build new ones for derived
// instances (induced subgraphs, contractions, ...).
struct Graph {
    int n = 0;
    std::vector<VertexSet> adj;

    Graph() = default;
    explicit Graph(int n_) : n(n_), adj(static_cast<std::size_t>(n_)) {
        if (n_ < 0 || n_ > kMaxVertices)
            throw precondition_error("vertex count out of range (0.." +
                                     std::to_string(kMaxVertices) + "): " + std::to_string(n_));
    }

    void add_edge(int u, int v) {
        if (u == v) throw precondition_error("self-loop at vertex " + std::to_string(u));
        check_vertex(u);
        check_vertex(v);
        adj[u].add(v);
        adj[v].add(u);
    }
    bool has_edge(int u, int v) const { return adj[u].contains(v); }
    void check_vertex(int v) const {
        if (v < 0 || v >= n) throw precondition_error("vertex out of range: " + std::to_string(v));
    }

    int degree(int v) const { return adj[v].count(); }
    int max_degree() const {
        int d = 0;
        for (int v = 0; v < n; ++v) d = std::max(d, degree(v));
        return d;
    }
    int min_degree() const {
        int d = n == 0 ? 0 : n;
        for (int v = 0; v < n; ++v) d = std::min(d, degree(v));
        return d;
    }
    long edge_count() const {
        long m = 0;
        for (int v = 0; v < n; ++v) m += degree(v);
        return m / 2;
    }
    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> e;
        for (int u = 0; u < n; ++u)
            for (int v : iterate(adj[u]))
                if (u < v) e.emplace_back(u, v);
        return e;
    }

    VertexSet vertices() const { return VertexSet::all(n); }

    bool is_regular() const {
        for (int v = 1; v < n; ++v)
            if (degree(v) != degree(0)) return false;
        return true;
    }
    bool is_complete() const { return edge_count() == static_cast<long>(n) * (n - 1) / 2; }

    bool operator==(const Graph& o) const { return n == o.n && adj == o.adj; }
};

// Induced subgraph plus the map from new indices back to old ones.
struct InducedGraph {
    Graph g;
    std::vector<int> to_parent;             // new index -> old index
    std::vector<int> from_parent;           // old index -> new index or -1
};

inline InducedGraph induced_subgraph(const Graph& g, VertexSet s) {
    InducedGraph out;
    out.from_parent.assign(static_cast<std::size_t>(g.n), -1);
    for (int v : iterate(s)) {
        out.from_parent[v] = static_cast<int>(out.to_parent.size());
        out.to_parent.push_back(v);
    }
    out.g = Graph(static_cast<int>(out.to_parent.size()));
    for (int v : iterate(s))
        for (int u : iterate(g.adj[v] & s))
            if (u < v) out.g.add_edge(out.from_parent[u], out.from_parent[v]);
    return out;
}

inline Graph complement(const Graph& g) {
    Graph c(g.n);
    for (int u = 0; u < g.n; ++u)
        for (int v = u + 1; v < g.n; ++v)
            if (!g.has_edge(u, v)) c.add_edge(u, v);
    return c;
}

// BFS distances from a seed set; -1 where unreachable.  Vertices outside
// `within` are treated as absent.
inline std::vector<int> bfs_distances(const Graph& g, VertexSet seeds, VertexSet within) {
    std::vector<int> dist(static_cast<std::size_t>(g.n), -1);
    std::vector<int> queue;
    for (int v : iterate(seeds & within)) {
        dist[v] = 0;
        queue.push_back(v);
    }
    for (std::size_t i = 0; i < queue.size(); ++i) {
        int v = queue[i];
        for (int u : iterate(g.adj[v] & within))
            if (dist[u] < 0) {
                dist[u] = dist[v] + 1;
                queue.push_back(u);
            }
    }
    return dist;
}
inline std::vector<int> bfs_distances(const Graph& g, VertexSet seeds) {
    return bfs_distances(g, seeds, g.vertices());
}

inline VertexSet component_of(const Graph& g, int v, VertexSet within) {
    VertexSet comp;
    if (!within.contains(v)) return comp;
    comp.add(v);
    std::vector<int> queue{v};
    for (std::size_t i = 0; i < queue.size(); ++i)
        for (int u : iterate(g.adj[queue[i]] & within))
            if (!comp.contains(u)) {
                comp.add(u);
                queue.push_back(u);
            }
    return comp;
}

inline std::vector<VertexSet> components(const Graph& g, VertexSet within) {
    std::vector<VertexSet> comps;
    VertexSet left = within;
    while (!left.empty()) {
        VertexSet c = component_of(g, left.first(), within);
        comps.push_back(c);
        left -= c;
    }
    return comps;
}
inline std::vector<VertexSet> components(const Graph& g) { return components(g, g.vertices()); }

inline bool is_connected(const Graph& g, VertexSet within) {
    if (within.empty()) return true;
    return component_of(g, within.first(), within) == within;
}
inline bool is_connected(const Graph& g) { return is_connected(g, g.vertices()); }

inline bool is_connected_after_removing(const Graph& g, VertexSet removed) {
    return is_connected(g, g.vertices() - removed);
}

// 2-connected: connected, no cutvertex, and more than 2 vertices (K2 counts
// as 2-connected here, matching the block decomposition convention).
inline bool is_two_connected(const Graph& g) {
    if (g.n < 2) return false;
    if (g.n == 2) return g.has_edge(0, 1);
    if (!is_connected(g)) return false;
    for (int v = 0; v < g.n; ++v)
        if (!is_connected(g, g.vertices() - VertexSet::single(v))) return false;
    return true;
}

}  // namespace chroma
