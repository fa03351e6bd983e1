#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "chroma/cliques.hpp"
#include "chroma/coloring.hpp"
#include "chroma/digraph.hpp"
#include "chroma/graph.hpp"

namespace chroma {

// ---------------------------------------------------------------- chi ----

struct ChiResult {
    int chi = 0;
    Coloring coloring;
};

namespace detail {

// Backtracking k-colorability on one connected component.  A maximum clique
// is pinned to colors 1..omega; new colors are introduced in order (value
// symmetry breaking); branching vertex = most saturated, ties by degree then
// index.
struct KColorSearch {
    const Graph& g;
    int k;
    Coloring assign;
    int max_used = 0;

    explicit KColorSearch(const Graph& g_, int k_) : g(g_), k(k_), assign(g_.n) {}

    bool run(VertexSet pinned_clique) {
        int c = 0;
        for (int v : iterate(pinned_clique)) assign.set(v, ++c);
        max_used = c;
        return dfs();
    }

    bool dfs() {
        int best_v = -1, best_sat = -1, best_deg = -1;
        for (int v = 0; v < g.n; ++v) {
            if (assign.assigned(v)) continue;
            VertexSet seen_colors_on;
            int sat = 0;
            std::uint64_t cseen[2] = {0, 0};
            for (int u : iterate(g.adj[v]))
                if (assign.assigned(u)) {
                    int cu = assign.color(u);
                    if (!((cseen[cu >> 6] >> (cu & 63)) & 1)) {
                        cseen[cu >> 6] |= std::uint64_t{1} << (cu & 63);
                        ++sat;
                    }
                }
            int deg = g.degree(v);
            if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
                best_v = v;
                best_sat = sat;
                best_deg = deg;
            }
        }
        if (best_v < 0) return true;
        if (best_sat >= k) return false;
        int v = best_v;
        int limit = std::min(k, max_used + 1);
        for (int c = 1; c <= limit; ++c) {
            bool blocked = false;
            for (int u : iterate(g.adj[v]))
                if (assign.color(u) == c) {
                    blocked = true;
                    break;
                }
            if (blocked) continue;
            int saved_max = max_used;
            assign.set(v, c);
            max_used = std::max(max_used, c);
            if (dfs()) return true;
            assign.set(v, 0);
            max_used = saved_max;
        }
        return false;
    }
};

inline ChiResult chi_exact_connected(const Graph& g, const ScaleLimits& limits) {
    if (g.n == 0) return {0, Coloring(0)};
    VertexSet q = max_clique(g, limits);
    int omega = q.count();
    int alpha = independence_number(g, limits);
    int lb = std::max(omega, (g.n + alpha - 1) / alpha);
    auto greedy = greedy_color(g, VertexOrder::natural(g.n), Coloring(g.n));
    CHROMA_ASSERT(greedy.ok(), "greedy coloring without lists cannot fail");
    int ub = greedy.coloring->palette_size();
    for (int k = lb; k < ub; ++k) {
        KColorSearch search(g, k);
        if (search.run(q)) return {k, search.assign};
    }
    return {ub, *greedy.coloring};
}

}  // namespace detail

// Exact chromatic number with an optimal coloring witness; the same search
// shows no (chi-1)-coloring exists.
inline ChiResult chi_exact(const Graph& g, const ScaleLimits& limits = default_limits()) {
    if (g.n > limits.chi_n)
        throw scale_refusal("chi_exact: " + std::to_string(g.n) + " vertices exceeds bound " +
                            std::to_string(limits.chi_n));
    ChiResult out{0, Coloring(g.n)};
    for (const auto& comp : components(g)) {
        auto [h, to_parent, from_parent] = induced_subgraph(g, comp);
        ChiResult sub = detail::chi_exact_connected(h, limits);
        out.chi = std::max(out.chi, sub.chi);
        for (int v = 0; v < h.n; ++v)
            out.coloring.set(to_parent[static_cast<std::size_t>(v)], sub.coloring.color(v));
    }
    return out;
}

// ------------------------------------------------------- list coloring ----

struct ListColorResult {
    bool colorable = false;
    std::optional<Coloring> coloring;
};

namespace detail {

inline bool list_color_dfs(const Graph& g, const ListAssignment& L, Coloring& assign) {
    int best_v = -1, best_avail = -1;
    for (int v = 0; v < g.n; ++v) {
        if (assign.assigned(v)) continue;
        int avail = 0;
        for (int c : L.at(v)) {
            bool blocked = false;
            for (int u : iterate(g.adj[v]))
                if (assign.color(u) == c) {
                    blocked = true;
                    break;
                }
            if (!blocked) ++avail;
        }
        if (best_v < 0 || avail < best_avail) {
            best_v = v;
            best_avail = avail;
        }
        if (avail == 0) break;
    }
    if (best_v < 0) return true;
    if (best_avail == 0) return false;
    int v = best_v;
    for (int c : L.at(v)) {
        bool blocked = false;
        for (int u : iterate(g.adj[v]))
            if (assign.color(u) == c) {
                blocked = true;
                break;
            }
        if (blocked) continue;
        assign.set(v, c);
        if (list_color_dfs(g, L, assign)) return true;
        assign.set(v, 0);
    }
    return false;
}

}  // namespace detail

// Does g admit a proper coloring with each vertex colored from its own list?
inline ListColorResult is_list_colorable(const Graph& g, const ListAssignment& L,
                                         const ScaleLimits& limits = default_limits()) {
    if (g.n > limits.list_color_n)
        throw scale_refusal("is_list_colorable: " + std::to_string(g.n) +
                            " vertices exceeds bound " + std::to_string(limits.list_color_n));
    if (static_cast<int>(L.lists.size()) != g.n)
        throw precondition_error("is_list_colorable: list assignment size mismatch");
    Coloring assign(g.n);
    if (detail::list_color_dfs(g, L, assign)) return {true, assign};
    return {false, std::nullopt};
}

// ------------------------------------------------------- f-choosability ----

struct FChoosableResult {
    bool choosable = false;
    std::optional<ListAssignment> bad_assignment;
};

namespace detail {

// Bad-assignment search.  A minimal non-colorable list assignment can be
// normalized so that every color's support is connected and has at least two
// vertices (disconnected supports split into fresh colors; a private color
// lets its vertex be deleted).  So the adversary enumerates multisets of
// connected supports, each vertex covered at most f(v) times, and wins when
// the fully-covered vertex set admits no rainbow transversal.  Vertices left
// with spare capacity take fresh private colors, which never constrain.
struct FChoosableSearch {
    const Graph& g;
    const std::vector<int>& f;
    std::vector<VertexSet> supports;          // connected, size >= 2, descending
    std::vector<int> cover;
    std::vector<std::vector<int>> inst_colors;  // per vertex: instance ids covering it
    std::vector<VertexSet> instances;
    VertexSet complete;                       // cover(v) == f(v)

    FChoosableSearch(const Graph& g_, const std::vector<int>& f_) : g(g_), f(f_) {
        for (std::uint64_t mask = (std::uint64_t{1} << g.n) - 1; mask != 0; --mask) {
            VertexSet s{{mask, 0}};
            if (s.count() < 2) continue;
            if (!is_connected(g, s)) continue;
            supports.push_back(s);
        }
        std::stable_sort(supports.begin(), supports.end(), [](const VertexSet& a, const VertexSet& b) {
            return a.count() != b.count() ? a.count() > b.count() : b < a;
        });
        cover.assign(static_cast<std::size_t>(g.n), 0);
        inst_colors.resize(static_cast<std::size_t>(g.n));
    }

    bool transversal_exists(Coloring& assign) {
        // list-color G[complete] from instance ids
        int best_v = -1, best_avail = -1;
        for (int v : iterate(complete)) {
            if (assign.assigned(v)) continue;
            int avail = 0;
            for (int c : inst_colors[static_cast<std::size_t>(v)]) {
                bool blocked = false;
                for (int u : iterate(g.adj[v] & complete))
                    if (assign.color(u) == c + 1) {
                        blocked = true;
                        break;
                    }
                if (!blocked) ++avail;
            }
            if (best_v < 0 || avail < best_avail) {
                best_v = v;
                best_avail = avail;
            }
            if (avail == 0) break;
        }
        if (best_v < 0) return true;
        if (best_avail == 0) return false;
        for (int c : inst_colors[static_cast<std::size_t>(best_v)]) {
            bool blocked = false;
            for (int u : iterate(g.adj[best_v] & complete))
                if (assign.color(u) == c + 1) {
                    blocked = true;
                    break;
                }
            if (blocked) continue;
            assign.set(best_v, c + 1);
            if (transversal_exists(assign)) return true;
            assign.set(best_v, 0);
        }
        return false;
    }

    // returns true when a bad multiset was found (instances holds it)
    bool search(std::size_t from) {
        VertexSet spare;
        for (int v = 0; v < g.n; ++v)
            if (cover[static_cast<std::size_t>(v)] < f[static_cast<std::size_t>(v)]) spare.add(v);
        for (std::size_t i = from; i < supports.size(); ++i) {
            const VertexSet s = supports[i];
            if (!s.subset_of(spare)) continue;
            int id = static_cast<int>(instances.size());
            instances.push_back(s);
            VertexSet newly_complete;
            for (int v : iterate(s)) {
                inst_colors[static_cast<std::size_t>(v)].push_back(id);
                if (++cover[static_cast<std::size_t>(v)] == f[static_cast<std::size_t>(v)]) {
                    complete.add(v);
                    newly_complete.add(v);
                }
            }
            bool bad = false;
            if (!newly_complete.empty()) {
                Coloring assign(g.n);
                bad = !transversal_exists(assign);
            }
            if (bad || search(i)) return true;
            for (int v : iterate(s)) {
                inst_colors[static_cast<std::size_t>(v)].pop_back();
                if (cover[static_cast<std::size_t>(v)]-- == f[static_cast<std::size_t>(v)])
                    complete.remove(v);
            }
            instances.pop_back();
        }
        return false;
    }
};

}  // namespace detail

// Is g properly colorable from every assignment of f(v)-color lists?  On
// failure returns a witness bad assignment.
inline FChoosableResult is_f_choosable(const Graph& g, const std::vector<int>& f,
                                       const ScaleLimits& limits = default_limits()) {
    if (static_cast<int>(f.size()) != g.n)
        throw precondition_error("is_f_choosable: f size mismatch");
    if (g.n > limits.f_choosable_n)
        throw scale_refusal("is_f_choosable: " + std::to_string(g.n) + " vertices exceeds bound " +
                            std::to_string(limits.f_choosable_n));
    long total = 0;
    for (int v = 0; v < g.n; ++v) total += std::max(0, f[static_cast<std::size_t>(v)]);
    if (total > limits.f_choosable_total)
        throw scale_refusal("is_f_choosable: sum of f exceeds bound " +
                            std::to_string(limits.f_choosable_total));

    int fresh = 1000;  // pad colors, disjoint from instance ids
    auto pad_lists = [&](ListAssignment& L, int v, int count) {
        for (int i = 0; i < count; ++i) L.at(v).push_back(fresh++);
    };

    // empty list wins outright for the adversary
    for (int v = 0; v < g.n; ++v)
        if (f[static_cast<std::size_t>(v)] <= 0) {
            ListAssignment L(g.n);
            for (int u = 0; u < g.n; ++u)
                if (u != v) pad_lists(L, u, f[static_cast<std::size_t>(u)]);
            return {false, L};
        }

    // f-core: a vertex with more list colors than remaining neighbors can
    // always be colored last, so it never appears in a minimal bad instance
    VertexSet core = g.vertices();
    bool shrunk = true;
    while (shrunk) {
        shrunk = false;
        for (int v : iterate(core))
            if ((g.adj[v] & core).count() < f[static_cast<std::size_t>(v)]) {
                core.remove(v);
                shrunk = true;
            }
    }

    for (const auto& comp : components(g, core)) {
        auto [h, to_parent, from_parent] = induced_subgraph(g, comp);
        std::vector<int> fh(static_cast<std::size_t>(h.n));
        for (int v = 0; v < h.n; ++v)
            fh[static_cast<std::size_t>(v)] = f[static_cast<std::size_t>(to_parent[static_cast<std::size_t>(v)])];
        detail::FChoosableSearch search(h, fh);
        if (search.search(0)) {
            ListAssignment L(g.n);
            for (int v = 0; v < h.n; ++v) {
                int gv = to_parent[static_cast<std::size_t>(v)];
                for (int id : search.inst_colors[static_cast<std::size_t>(v)]) L.at(gv).push_back(id + 1);
                pad_lists(L, gv, fh[static_cast<std::size_t>(v)] -
                                     static_cast<int>(search.inst_colors[static_cast<std::size_t>(v)].size()));
            }
            for (int v = 0; v < g.n; ++v)
                if (!comp.contains(v)) pad_lists(L, v, f[static_cast<std::size_t>(v)]);
            return {false, L};
        }
    }
    return {true, std::nullopt};
}

// Choice number: least k with is_f_choosable(g, k) true.
inline int chi_list_exact(const Graph& g, const ScaleLimits& limits = default_limits()) {
    int start = std::max(1, chi_exact(g, limits).chi);
    for (int k = start;; ++k) {
        std::vector<int> f(static_cast<std::size_t>(g.n), k);
        if (is_f_choosable(g, f, limits).choosable) return k;
    }
}

// --------------------------------------------------- kernel perfection ----

struct KernelPerfectResult {
    bool kernel_perfect = false;
    std::optional<VertexSet> kernel_free_subdigraph;
};

inline bool has_kernel(const Digraph& d, VertexSet s) {
    std::uint64_t smask = s.w[0];
    for (std::uint64_t sub = smask;; sub = (sub - 1) & smask) {
        if (is_kernel(d, VertexSet{{sub, 0}}, s)) return true;
        if (sub == 0) break;
    }
    return false;
}

// Every induced subdigraph must have a kernel; the first (lowest mask)
// kernel-free vertex set is the witness.
inline KernelPerfectResult is_kernel_perfect_exact(const Digraph& d,
                                                   const ScaleLimits& limits = default_limits()) {
    if (d.n > limits.kernel_perfect_n)
        throw scale_refusal("is_kernel_perfect_exact: " + std::to_string(d.n) +
                            " vertices exceeds bound " + std::to_string(limits.kernel_perfect_n));
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << d.n); ++mask) {
        VertexSet s{{mask, 0}};
        if (!has_kernel(d, s)) return {false, s};
    }
    return {true, std::nullopt};
}

// -------------------------------------------------------- hitting sets ----

namespace detail {

inline std::optional<VertexSet> hitting_set_dfs(const Graph& g,
                                                const std::vector<VertexSet>& cliques,
                                                VertexSet chosen, VertexSet forbidden) {
    const VertexSet* open = nullptr;
    for (const auto& q : cliques)
        if (!q.intersects(chosen)) {
            open = &q;
            break;
        }
    if (!open) return chosen;
    for (int v : iterate(*open - forbidden)) {
        VertexSet c2 = chosen;
        c2.add(v);
        auto r = hitting_set_dfs(g, cliques, c2, forbidden | g.adj[v] | VertexSet::single(v));
        if (r) return r;
    }
    return std::nullopt;
}

}  // namespace detail

// Independent set meeting every maximum clique, if one exists.
inline std::optional<VertexSet> hitting_set_exact(const Graph& g,
                                                  const ScaleLimits& limits = default_limits()) {
    auto cliques = all_maximum_cliques(g, limits);
    if (cliques.empty()) return VertexSet{};
    return detail::hitting_set_dfs(g, cliques, VertexSet{}, VertexSet{});
}

// ------------------------------------------- Hamiltonian path property ----

namespace detail {

// enumerate Hamiltonian paths; false from the visitor aborts the scan
template <typename Fn>
inline bool ham_path_scan(const Graph& g, std::vector<int>& path, VertexSet used, Fn&& visit) {
    int v = path.back();
    if (static_cast<int>(path.size()) == g.n) return visit(path);
    for (int u : iterate(g.adj[v] - used)) {
        path.push_back(u);
        used.add(u);
        if (!ham_path_scan(g, path, used, visit)) return false;
        used.remove(u);
        path.pop_back();
    }
    return true;
}

}  // namespace detail

// True iff g has a Hamiltonian path and every Hamiltonian path's endpoints
// are adjacent (i.e. every Hamiltonian path extends to a Hamiltonian cycle).
inline bool ham_path_in_cycle_property(const Graph& g, const ScaleLimits& limits = default_limits()) {
    if (g.n > limits.ham_path_n)
        throw scale_refusal("ham_path_in_cycle_property: " + std::to_string(g.n) +
                            " vertices exceeds bound " + std::to_string(limits.ham_path_n));
    if (!is_connected(g)) throw precondition_error("ham_path_in_cycle_property: graph is disconnected");
    if (g.n == 1) return true;  // trivial path, trivially closed
    bool found_any = false;
    bool all_closed = true;
    for (int start = 0; start < g.n && all_closed; ++start) {
        std::vector<int> path{start};
        detail::ham_path_scan(g, path, VertexSet::single(start), [&](const std::vector<int>& p) {
            found_any = true;
            if (!g.has_edge(p.front(), p.back())) {
                all_closed = false;
                return false;
            }
            return true;
        });
    }
    return found_any && all_closed;
}

// ------------------------------------------------------- oracle report ----

struct OracleReport {
    int chi = 0;
    int omega = 0;
    int alpha = 0;
    std::optional<int> chi_list;
    std::optional<int> chi_paint;
    Coloring coloring;
    VertexSet clique;
    VertexSet independent_set;
};

inline OracleReport oracle_report(const Graph& g, bool with_chi_list = false,
                                  const ScaleLimits& limits = default_limits()) {
    OracleReport r;
    auto chi = chi_exact(g, limits);
    r.chi = chi.chi;
    r.coloring = chi.coloring;
    r.clique = max_clique(g, limits);
    r.omega = r.clique.count();
    r.independent_set = max_independent_set(g, limits);
    r.alpha = r.independent_set.count();
    if (with_chi_list) r.chi_list = chi_list_exact(g, limits);
    return r;
}

}  // namespace chroma
