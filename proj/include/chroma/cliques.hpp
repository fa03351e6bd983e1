#pragma once

#include <vector>

#include "chroma/error.hpp"
#include "chroma/graph.hpp"

namespace chroma {

// Exactness bounds.  These are configuration, not constants: exceeding one
// raises scale_refusal, never a silent approximation.
struct ScaleLimits {
    int clique_n = 64;          // max_clique / max_independent_set
    int chi_n = 24;             // chi_exact
    int list_color_n = 24;      // is_list_colorable
    int f_choosable_n = 9;      // is_f_choosable vertex bound
    int f_choosable_total = 48; // is_f_choosable sum-of-f bound
    int kernel_perfect_n = 16;  // is_kernel_perfect_exact
    int ham_path_n = 10;        // ham_path_in_cycle_property
    int paint_n = 9;            // paint game solver
    int eulerian_arcs = 24;     // eulerian_counts
};

inline ScaleLimits& default_limits() {
    static ScaleLimits limits;
    return limits;
}

namespace detail {

// Greedy-coloring bound for max-clique branch and bound: vertices of the
// candidate set grouped into independent classes; a clique meets each class
// at most once.  Returns candidates ordered so later vertices carry higher
// bounds (Tomita-style numbering).
inline void color_sort(const Graph& g, VertexSet cand, std::vector<int>& order,
                       std::vector<int>& bound) {
    order.clear();
    bound.clear();
    int klass = 0;
    while (!cand.empty()) {
        ++klass;
        VertexSet q = cand;
        while (!q.empty()) {
            int v = q.first();
            q.remove(v);
            q -= g.adj[v];
            cand.remove(v);
            order.push_back(v);
            bound.push_back(klass);
        }
    }
}

inline void clique_expand(const Graph& g, VertexSet r, VertexSet cand, VertexSet& best) {
    if (cand.empty()) {
        if (r.count() > best.count()) best = r;
        return;
    }
    std::vector<int> order, bound;
    color_sort(g, cand, order, bound);
    for (int i = static_cast<int>(order.size()) - 1; i >= 0; --i) {
        if (r.count() + bound[static_cast<std::size_t>(i)] <= best.count()) return;
        int v = order[static_cast<std::size_t>(i)];
        VertexSet r2 = r;
        r2.add(v);
        clique_expand(g, r2, cand & g.adj[v], best);
        cand.remove(v);
    }
}

}  // namespace detail

// Exact maximum clique (branch and bound with greedy-coloring bounds).
inline VertexSet max_clique(const Graph& g, const ScaleLimits& limits = default_limits()) {
    if (g.n > limits.clique_n)
        throw scale_refusal("max_clique: " + std::to_string(g.n) + " vertices exceeds bound " +
                            std::to_string(limits.clique_n));
    VertexSet best;
    detail::clique_expand(g, VertexSet{}, g.vertices(), best);
    return best;
}

inline VertexSet max_independent_set(const Graph& g, const ScaleLimits& limits = default_limits()) {
    if (g.n > limits.clique_n)
        throw scale_refusal("max_independent_set: " + std::to_string(g.n) +
                            " vertices exceeds bound " + std::to_string(limits.clique_n));
    VertexSet best;
    detail::clique_expand(complement(g), VertexSet{}, g.vertices(), best);
    return best;
}

inline int clique_number(const Graph& g, const ScaleLimits& limits = default_limits()) {
    return max_clique(g, limits).count();
}
inline int independence_number(const Graph& g, const ScaleLimits& limits = default_limits()) {
    return max_independent_set(g, limits).count();
}

namespace detail {

inline void enumerate_cliques_of_size(const Graph& g, VertexSet r, VertexSet cand, int target,
                                      std::vector<VertexSet>& out) {
    if (r.count() == target) {
        out.push_back(r);
        return;
    }
    std::vector<int> order, bound;
    color_sort(g, cand, order, bound);
    for (int i = static_cast<int>(order.size()) - 1; i >= 0; --i) {
        if (r.count() + bound[static_cast<std::size_t>(i)] < target) return;
        int v = order[static_cast<std::size_t>(i)];
        VertexSet r2 = r;
        r2.add(v);
        enumerate_cliques_of_size(g, r2, cand & g.adj[v], target, out);
        cand.remove(v);
    }
}

}  // namespace detail

// All cliques of maximum size.
inline std::vector<VertexSet> all_maximum_cliques(const Graph& g,
                                                  const ScaleLimits& limits = default_limits()) {
    int omega = clique_number(g, limits);
    std::vector<VertexSet> out;
    if (omega == 0) return out;
    detail::enumerate_cliques_of_size(g, VertexSet{}, g.vertices(), omega, out);
    return out;
}

inline bool is_independent_set(const Graph& g, VertexSet s) {
    for (int v : iterate(s))
        if ((g.adj[v] & s).count() > 0) return false;
    return true;
}

inline bool is_clique(const Graph& g, VertexSet s) {
    for (int v : iterate(s)) {
        VertexSet rest = s;
        rest.remove(v);
        if (!rest.subset_of(g.adj[v])) return false;
    }
    return true;
}

// Greedy maximal extension of an independent set, lowest index first.
inline VertexSet extend_to_maximal_independent(const Graph& g, VertexSet base) {
    CHROMA_ASSERT(is_independent_set(g, base), "extend_to_maximal_independent: base not independent");
    VertexSet blocked = base;
    for (int v : iterate(base)) blocked |= g.adj[v];
    VertexSet out = base;
    for (int v = 0; v < g.n; ++v)
        if (!blocked.contains(v)) {
            out.add(v);
            blocked.add(v);
            blocked |= g.adj[v];
        }
    return out;
}

}  // namespace chroma
