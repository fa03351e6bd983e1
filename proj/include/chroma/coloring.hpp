#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "chroma/graph.hpp"

namespace chroma {

// Total-or-partial vertex coloring; color 0 means unassigned, proper colors
// are positive integers.
struct Coloring {
    std::vector<int> assignment;

    Coloring() = default;
    explicit Coloring(int n) : assignment(static_cast<std::size_t>(n), 0) {}

    int color(int v) const { return assignment[static_cast<std::size_t>(v)]; }
    void set(int v, int c) { assignment[static_cast<std::size_t>(v)] = c; }
    bool assigned(int v) const { return color(v) != 0; }
    bool total() const {
        return std::all_of(assignment.begin(), assignment.end(), [](int c) { return c != 0; });
    }
    int palette_size() const {
        return assignment.empty() ? 0 : *std::max_element(assignment.begin(), assignment.end());
    }
    int colors_used() const {
        std::vector<int> cs(assignment);
        std::sort(cs.begin(), cs.end());
        cs.erase(std::unique(cs.begin(), cs.end()), cs.end());
        return static_cast<int>(cs.size()) - (std::count(cs.begin(), cs.end(), 0) ? 1 : 0);
    }
};

inline bool is_proper(const Graph& g, const Coloring& c) {
    for (auto [u, v] : g.edges())
        if (c.assigned(u) && c.color(u) == c.color(v)) return false;
    return true;
}

inline bool is_proper_total(const Graph& g, const Coloring& c) {
    return c.total() && is_proper(g, c);
}

// Per-vertex color lists L(v); colors are positive integers.
struct ListAssignment {
    std::vector<std::vector<int>> lists;

    ListAssignment() = default;
    explicit ListAssignment(int n) : lists(static_cast<std::size_t>(n)) {}
    static ListAssignment uniform(int n, std::vector<int> colors) {
        ListAssignment L(n);
        for (auto& l : L.lists) l = colors;
        return L;
    }
    static ListAssignment first_k(int n, int k) {
        std::vector<int> cs(static_cast<std::size_t>(k));
        for (int i = 0; i < k; ++i) cs[static_cast<std::size_t>(i)] = i + 1;
        return uniform(n, cs);
    }

    const std::vector<int>& at(int v) const { return lists[static_cast<std::size_t>(v)]; }
    std::vector<int>& at(int v) { return lists[static_cast<std::size_t>(v)]; }
    bool allows(int v, int c) const {
        const auto& l = at(v);
        return std::find(l.begin(), l.end(), c) != l.end();
    }
    void normalize() {
        for (auto& l : lists) {
            std::sort(l.begin(), l.end());
            l.erase(std::unique(l.begin(), l.end()), l.end());
        }
    }
    std::vector<int> universe() const {
        std::vector<int> u;
        for (const auto& l : lists) u.insert(u.end(), l.begin(), l.end());
        std::sort(u.begin(), u.end());
        u.erase(std::unique(u.begin(), u.end()), u.end());
        return u;
    }
};

inline bool respects_lists(const Coloring& c, const ListAssignment& L) {
    for (std::size_t v = 0; v < c.assignment.size(); ++v)
        if (c.assignment[v] != 0 && !L.allows(static_cast<int>(v), c.assignment[v])) return false;
    return true;
}

// A vertex order sigma.
struct VertexOrder {
    std::vector<int> order;

    bool is_permutation(int n) const {
        if (static_cast<int>(order.size()) != n) return false;
        std::vector<bool> seen(static_cast<std::size_t>(n), false);
        for (int v : order) {
            if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)]) return false;
            seen[static_cast<std::size_t>(v)] = true;
        }
        return true;
    }
    static VertexOrder natural(int n) {
        VertexOrder o;
        o.order.resize(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) o.order[static_cast<std::size_t>(i)] = i;
        return o;
    }
};

// Order by decreasing BFS distance to the target set; targets come last.
// Ties break toward the lower vertex index (appearing earlier).  Every
// non-target vertex then has a strictly closer neighbor after it.
inline VertexOrder order_by_decreasing_distance(const Graph& g, VertexSet targets) {
    if (targets.empty()) throw precondition_error("order_by_decreasing_distance: empty target set");
    auto dist = bfs_distances(g, targets);
    std::vector<int> unreachable;
    for (int v = 0; v < g.n; ++v)
        if (dist[v] < 0) unreachable.push_back(v);
    if (!unreachable.empty()) {
        std::string msg = "order_by_decreasing_distance: unreachable vertices:";
        for (int v : unreachable) msg += " " + std::to_string(v);
        throw precondition_error(msg);
    }
    VertexOrder o = VertexOrder::natural(g.n);
    std::stable_sort(o.order.begin(), o.order.end(),
                     [&](int a, int b) { return dist[a] > dist[b]; });
    return o;
}

struct GreedyFailure {
    int stuck_vertex;
    std::vector<int> saturated_colors;  // colors on its already-colored neighborhood
};

struct GreedyResult {
    std::optional<Coloring> coloring;
    std::optional<GreedyFailure> failure;
    bool ok() const { return coloring.has_value(); }
};

// Color vertices in the given order with the smallest free color, respecting
// an optional partial coloring and optional lists.  Without lists the color
// universe is 1,2,3,...; with lists, each vertex picks the smallest-index
// free color of its own list.
inline GreedyResult greedy_color(const Graph& g, const VertexOrder& order, Coloring partial,
                                 const ListAssignment* lists = nullptr) {
    if (!order.is_permutation(g.n)) throw precondition_error("greedy_color: order is not a permutation");
    if (static_cast<int>(partial.assignment.size()) != g.n) partial = Coloring(g.n);
    if (!is_proper(g, partial)) throw precondition_error("greedy_color: partial coloring not proper");
    if (lists && !respects_lists(partial, *lists))
        throw precondition_error("greedy_color: partial coloring violates lists");
    for (int v : order.order) {
        if (partial.assigned(v)) continue;
        VertexSet nb = g.adj[v];
        std::vector<int> used;
        for (int u : iterate(nb))
            if (partial.assigned(u)) used.push_back(partial.color(u));
        auto blocked = [&](int c) { return std::find(used.begin(), used.end(), c) != used.end(); };
        int chosen = 0;
        if (lists) {
            for (int c : lists->at(v))
                if (!blocked(c)) {
                    chosen = c;
                    break;
                }
        } else {
            for (int c = 1;; ++c)
                if (!blocked(c)) {
                    chosen = c;
                    break;
                }
        }
        if (chosen == 0) {
            std::sort(used.begin(), used.end());
            used.erase(std::unique(used.begin(), used.end()), used.end());
            return {std::nullopt, GreedyFailure{v, used}};
        }
        partial.set(v, chosen);
    }
    return {partial, std::nullopt};
}

}  // namespace chroma
