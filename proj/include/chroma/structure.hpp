#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "chroma/blocks.hpp"
#include "chroma/graph.hpp"

namespace chroma {

enum class StructureTag {
    complete,
    odd_cycle,
    even_cycle,
    balanced_complete_bipartite,
    gallai_tree,
    paper_ktree,
    other,
};

inline const char* tag_name(StructureTag t) {
    switch (t) {
        case StructureTag::complete: return "complete";
        case StructureTag::odd_cycle: return "odd_cycle";
        case StructureTag::even_cycle: return "even_cycle";
        case StructureTag::balanced_complete_bipartite: return "balanced_complete_bipartite";
        case StructureTag::gallai_tree: return "gallai_tree";
        case StructureTag::paper_ktree: return "paper_ktree";
        case StructureTag::other: return "other";
    }
    return "?";
}

enum class BlockKind { complete, odd_cycle, other };

// Re-checkable witness parameters for a StructureTag.
struct StructureClass {
    StructureTag tag = StructureTag::other;
    int n = 0;
    std::vector<int> part_sizes;                            // bipartite case
    std::vector<std::pair<VertexSet, BlockKind>> blocks;    // gallai case
    std::vector<VertexSet> units;                           // ktree case: T_k units
    std::vector<std::pair<int, int>> bridges;               // ktree case: bridge edges
};

inline bool is_cycle_graph(const Graph& g) {
    if (g.n < 3 || !is_connected(g)) return false;
    for (int v = 0; v < g.n; ++v)
        if (g.degree(v) != 2) return false;
    return true;
}

// Attempts a proper 2-coloring; the parts when bipartite.
inline std::optional<std::pair<VertexSet, VertexSet>> bipartition(const Graph& g, VertexSet within) {
    VertexSet a, b, seen;
    for (int s : iterate(within)) {
        if (seen.contains(s)) continue;
        std::vector<int> queue{s};
        seen.add(s);
        a.add(s);
        for (std::size_t i = 0; i < queue.size(); ++i) {
            int v = queue[i];
            bool v_in_a = a.contains(v);
            for (int u : iterate(g.adj[v] & within)) {
                if (!seen.contains(u)) {
                    seen.add(u);
                    (v_in_a ? b : a).add(u);
                    queue.push_back(u);
                } else if (a.contains(u) == v_in_a) {
                    return std::nullopt;
                }
            }
        }
    }
    return std::make_pair(a, b);
}
inline std::optional<std::pair<VertexSet, VertexSet>> bipartition(const Graph& g) {
    return bipartition(g, g.vertices());
}

inline bool is_balanced_complete_bipartite(const Graph& g) {
    if (g.n < 2 || g.n % 2 != 0 || !is_connected(g)) return false;
    auto parts = bipartition(g);
    if (!parts) return false;
    auto [a, b] = *parts;
    if (a.count() != b.count()) return false;
    return g.edge_count() == static_cast<long>(a.count()) * b.count();
}

// First classification a graph matches among the base shapes; used for the
// certificates of the independency-tree machinery.
inline StructureClass classify_base_shape(const Graph& g) {
    StructureClass sc;
    sc.n = g.n;
    if (g.is_complete() && g.n >= 1) {
        sc.tag = StructureTag::complete;
    } else if (is_cycle_graph(g)) {
        sc.tag = g.n % 2 ? StructureTag::odd_cycle : StructureTag::even_cycle;
    } else if (is_balanced_complete_bipartite(g)) {
        sc.tag = StructureTag::balanced_complete_bipartite;
        sc.part_sizes = {g.n / 2, g.n / 2};
    }
    return sc;
}

inline BlockKind classify_block(const Graph& g, VertexSet blk) {
    auto [h, to_parent, from_parent] = induced_subgraph(g, blk);
    if (h.is_complete()) return BlockKind::complete;  // includes K1, K2, K3
    if (is_cycle_graph(h) && h.n % 2 == 1) return BlockKind::odd_cycle;
    return BlockKind::other;
}

// Gallai tree: connected, every block a complete graph or an odd cycle.
inline StructureClass is_gallai_tree(const Graph& g) {
    if (!is_connected(g)) throw precondition_error("is_gallai_tree: graph is disconnected");
    StructureClass sc;
    sc.n = g.n;
    sc.tag = StructureTag::gallai_tree;
    for (const auto& blk : blocks_and_cutvertices(g).blocks) {
        BlockKind k = classify_block(g, blk);
        sc.blocks.emplace_back(blk, k);
        if (k == BlockKind::other) sc.tag = StructureTag::other;
    }
    return sc;
}

// The paper's nonstandard k-trees: T_k units (odd cycles when k=3, K_k when
// k>=4) chained by bridge edges whose endpoints had degree k-1 when joined.
// Equivalently: every block is a unit or a K2 bridge, every vertex lies in
// exactly one unit and at most one bridge.
inline StructureClass is_paper_ktree(const Graph& g, int k) {
    if (k < 3) throw precondition_error("is_paper_ktree: k must be >= 3");
    if (!is_connected(g)) throw precondition_error("is_paper_ktree: graph is disconnected");
    StructureClass sc;
    sc.n = g.n;
    sc.tag = StructureTag::other;
    if (g.n == 0) return sc;

    std::vector<VertexSet> units;
    std::vector<std::pair<int, int>> bridges;
    for (const auto& blk : blocks_and_cutvertices(g).blocks) {
        auto [h, to_parent, from_parent] = induced_subgraph(g, blk);
        bool unit = (k == 3) ? (is_cycle_graph(h) && h.n % 2 == 1)
                             : (h.n == k && h.is_complete());
        if (unit) {
            units.push_back(blk);
        } else if (h.n == 2) {
            bridges.emplace_back(blk.first(), blk.next(blk.first()));
        } else {
            return sc;
        }
    }
    std::vector<int> unit_count(static_cast<std::size_t>(g.n), 0);
    std::vector<int> bridge_count(static_cast<std::size_t>(g.n), 0);
    for (const auto& u : units)
        for (int v : iterate(u)) ++unit_count[static_cast<std::size_t>(v)];
    for (auto [a, b] : bridges) {
        ++bridge_count[static_cast<std::size_t>(a)];
        ++bridge_count[static_cast<std::size_t>(b)];
    }
    for (int v = 0; v < g.n; ++v)
        if (unit_count[static_cast<std::size_t>(v)] != 1 || bridge_count[static_cast<std::size_t>(v)] > 1)
            return sc;
    sc.tag = StructureTag::paper_ktree;
    sc.units = std::move(units);
    sc.bridges = std::move(bridges);
    return sc;
}

// Re-derive a claimed classification from scratch.
inline bool verify_structure_class(const Graph& g, const StructureClass& sc) {
    switch (sc.tag) {
        case StructureTag::complete: return g.is_complete() && g.n == sc.n;
        case StructureTag::odd_cycle: return is_cycle_graph(g) && g.n % 2 == 1;
        case StructureTag::even_cycle: return is_cycle_graph(g) && g.n % 2 == 0;
        case StructureTag::balanced_complete_bipartite: return is_balanced_complete_bipartite(g);
        case StructureTag::gallai_tree: return is_gallai_tree(g).tag == StructureTag::gallai_tree;
        case StructureTag::paper_ktree: {
            for (int k = 3; k <= g.n + 1; ++k)
                if (is_paper_ktree(g, k).tag == StructureTag::paper_ktree) return true;
            return false;
        }
        case StructureTag::other: return true;
    }
    return false;
}

}  // namespace chroma
