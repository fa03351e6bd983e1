#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <vector>

#include "chroma/graph.hpp"

namespace chroma {

// Labeled graphs on n vertices encoded as bitmasks over the C(n,2) vertex
// pairs (i,j), i<j, in lexicographic order.
namespace detail {

inline int pair_bit(int n, int i, int j) {
    // index of pair (i,j), i<j, in lex order by (i,j)
    return i * n - i * (i + 1) / 2 + (j - i - 1);
}

}  // namespace detail

inline std::uint64_t graph_to_mask(const Graph& g) {
    std::uint64_t mask = 0;
    for (auto [u, v] : g.edges()) mask |= std::uint64_t{1} << detail::pair_bit(g.n, u, v);
    return mask;
}

inline Graph mask_to_graph(int n, std::uint64_t mask) {
    Graph g(n);
    int bit = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++bit)
            if ((mask >> bit) & 1) g.add_edge(i, j);
    return g;
}

// Visit every labeled graph on exactly n vertices (n <= 10).
template <typename Fn>
inline void for_each_labeled_graph(int n, Fn&& fn) {
    if (n > 10) throw scale_refusal("for_each_labeled_graph: n too large");
    int bits = n * (n - 1) / 2;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << bits); ++mask) fn(mask_to_graph(n, mask));
}

template <typename Fn>
inline void for_each_connected_graph(int n, Fn&& fn) {
    for_each_labeled_graph(n, [&](const Graph& g) {
        if (is_connected(g)) fn(g);
    });
}

// Relabel by a permutation: vertex v of g becomes perm[v].
inline Graph relabel(const Graph& g, const std::vector<int>& perm) {
    Graph h(g.n);
    for (auto [u, v] : g.edges())
        h.add_edge(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
    return h;
}

// Canonical key by full permutation scan; fine for n <= 7.
inline std::uint64_t canonical_key(const Graph& g) {
    if (g.n > 7) throw scale_refusal("canonical_key: full permutation scan only supports n <= 7");
    std::vector<int> perm(static_cast<std::size_t>(g.n));
    std::iota(perm.begin(), perm.end(), 0);
    std::uint64_t best = ~std::uint64_t{0};
    do {
        best = std::min(best, graph_to_mask(relabel(g, perm)));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

// Backtracking isomorphism test with degree pruning; desk scale.
namespace detail {

inline bool iso_extend(const Graph& a, const Graph& b, std::vector<int>& map, VertexSet used_b) {
    int v = -1;
    for (int i = 0; i < a.n; ++i)
        if (map[static_cast<std::size_t>(i)] < 0) {
            v = i;
            break;
        }
    if (v < 0) return true;
    for (int w = 0; w < b.n; ++w) {
        if (used_b.contains(w) || a.degree(v) != b.degree(w)) continue;
        bool ok = true;
        for (int u = 0; u < a.n && ok; ++u) {
            int mu = map[static_cast<std::size_t>(u)];
            if (mu >= 0 && a.has_edge(u, v) != b.has_edge(mu, w)) ok = false;
        }
        if (!ok) continue;
        map[static_cast<std::size_t>(v)] = w;
        used_b.add(w);
        if (iso_extend(a, b, map, used_b)) return true;
        used_b.remove(w);
        map[static_cast<std::size_t>(v)] = -1;
    }
    return false;
}

inline std::vector<long> iso_invariant(const Graph& g) {
    // degree multiset and per-vertex triangle counts, sorted
    std::vector<long> key;
    std::vector<int> degs, tris;
    for (int v = 0; v < g.n; ++v) {
        degs.push_back(g.degree(v));
        int t = 0;
        for (int u : iterate(g.adj[v]))
            t += (g.adj[v] & g.adj[u]).count();
        tris.push_back(t);
    }
    std::sort(degs.begin(), degs.end());
    std::sort(tris.begin(), tris.end());
    key.push_back(g.n);
    key.push_back(g.edge_count());
    for (int d : degs) key.push_back(d);
    for (int t : tris) key.push_back(t);
    return key;
}

}  // namespace detail

inline bool are_isomorphic(const Graph& a, const Graph& b) {
    if (a.n != b.n || a.edge_count() != b.edge_count()) return false;
    if (detail::iso_invariant(a) != detail::iso_invariant(b)) return false;
    std::vector<int> map(static_cast<std::size_t>(a.n), -1);
    return detail::iso_extend(a, b, map, VertexSet{});
}

// Collect one representative per isomorphism class from a stream of graphs.
struct IsoRepCollector {
    std::map<std::vector<long>, std::vector<Graph>> buckets;
    std::vector<Graph> reps;

    bool add(const Graph& g) {
        auto key = detail::iso_invariant(g);
        auto& bucket = buckets[key];
        for (const auto& r : bucket)
            if (are_isomorphic(r, g)) return false;
        bucket.push_back(g);
        reps.push_back(g);
        return true;
    }
};

// One representative per isomorphism class of connected graphs on n vertices.
inline std::vector<Graph> connected_iso_reps(int n) {
    IsoRepCollector coll;
    for_each_connected_graph(n, [&](const Graph& g) { coll.add(g); });
    return coll.reps;
}

namespace detail {

template <typename Fn>
inline void regular_gen(Graph& g, int d, int u, int v, std::vector<int>& deg, Fn&& fn) {
    // fill edges in lex pair order; u is the first vertex with open degree
    while (u < g.n && deg[static_cast<std::size_t>(u)] == d) {
        ++u;
        v = u;
    }
    if (u >= g.n) {
        fn(g);
        return;
    }
    // u must reach degree d using neighbors > v
    int missing = d - deg[static_cast<std::size_t>(u)];
    for (int w = v + 1; w < g.n; ++w) {
        if (g.n - w < missing) return;  // not enough candidates left
        if (deg[static_cast<std::size_t>(w)] >= d) continue;
        g.add_edge(u, w);
        ++deg[static_cast<std::size_t>(u)];
        ++deg[static_cast<std::size_t>(w)];
        if (deg[static_cast<std::size_t>(u)] == d)
            regular_gen(g, d, u + 1, u + 1, deg, fn);
        else
            regular_gen(g, d, u, w, deg, fn);
        g.adj[u].remove(w);
        g.adj[w].remove(u);
        --deg[static_cast<std::size_t>(u)];
        --deg[static_cast<std::size_t>(w)];
    }
}

}  // namespace detail

// One representative per isomorphism class of connected d-regular graphs on
// n vertices.
inline std::vector<Graph> regular_connected_reps(int n, int d) {
    std::vector<Graph> out;
    if (static_cast<long>(n) * d % 2 != 0 || d >= n) return out;
    IsoRepCollector coll;
    Graph g(n);
    std::vector<int> deg(static_cast<std::size_t>(n), 0);
    detail::regular_gen(g, d, 0, 0, deg, [&](const Graph& cand) {
        if (is_connected(cand)) coll.add(cand);
    });
    return coll.reps;
}

}  // namespace chroma
