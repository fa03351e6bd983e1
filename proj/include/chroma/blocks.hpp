#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "chroma/graph.hpp"

namespace chroma {

// Block-cut decomposition: maximal 2-connected subgraphs (an isolated vertex
// forms its own single-vertex block), cutvertices, and their incidence.
struct BlockCutTree {
    std::vector<VertexSet> blocks;
    VertexSet cutvertices;
    std::vector<std::pair<int, int>> incidence;  // (block index, cutvertex)

    bool is_cutvertex(int v) const { return cutvertices.contains(v); }
    std::vector<int> blocks_containing(int v) const {
        std::vector<int> out;
        for (int b = 0; b < static_cast<int>(blocks.size()); ++b)
            if (blocks[static_cast<std::size_t>(b)].contains(v)) out.push_back(b);
        return out;
    }
};

// Hopcroft–Tarjan articulation points / biconnected components, iterative
// so deep paths cannot overflow the stack.
inline BlockCutTree blocks_and_cutvertices(const Graph& g) {
    BlockCutTree out;
    std::vector<int> disc(static_cast<std::size_t>(g.n), -1);
    std::vector<int> low(static_cast<std::size_t>(g.n), 0);
    std::vector<int> parent(static_cast<std::size_t>(g.n), -1);
    std::vector<std::pair<int, int>> edge_stack;
    int timer = 0;

    struct Frame {
        int v;
        int next;  // next neighbor candidate index (vertex id to resume from)
    };

    for (int root = 0; root < g.n; ++root) {
        if (disc[root] >= 0) continue;
        if (g.degree(root) == 0) {
            disc[root] = timer++;
            out.blocks.push_back(VertexSet::single(root));
            continue;
        }
        int root_children = 0;
        std::vector<Frame> stack{{root, -1}};
        disc[root] = low[root] = timer++;
        while (!stack.empty()) {
            auto& [v, next] = stack.back();
            int u = g.adj[v].next(next);
            if (u >= 0) {
                next = u;
                if (u == parent[v]) continue;
                if (disc[u] < 0) {
                    parent[u] = v;
                    edge_stack.emplace_back(v, u);
                    disc[u] = low[u] = timer++;
                    stack.push_back({u, -1});
                } else if (disc[u] < disc[v]) {
                    edge_stack.emplace_back(v, u);
                    low[v] = std::min(low[v], disc[u]);
                }
            } else {
                stack.pop_back();
                if (stack.empty()) break;
                int p = stack.back().v;
                low[p] = std::min(low[p], low[v]);
                if (p == root) ++root_children;
                if (low[v] >= disc[p]) {
                    // everything stacked since (p,v) is one block
                    VertexSet blk;
                    std::pair<int, int> e;
                    do {
                        e = edge_stack.back();
                        edge_stack.pop_back();
                        blk.add(e.first);
                        blk.add(e.second);
                    } while (e != std::make_pair(p, v));
                    out.blocks.push_back(blk);
                    if (p != root || root_children >= 2) out.cutvertices.add(p);
                }
            }
        }
    }
    for (int b = 0; b < static_cast<int>(out.blocks.size()); ++b)
        for (int v : iterate(out.blocks[static_cast<std::size_t>(b)] & out.cutvertices))
            out.incidence.emplace_back(b, v);
    return out;
}

// Endblocks: blocks containing at most one cutvertex.
inline std::vector<int> endblock_indices(const BlockCutTree& t) {
    std::vector<int> out;
    for (int b = 0; b < static_cast<int>(t.blocks.size()); ++b)
        if ((t.blocks[static_cast<std::size_t>(b)] & t.cutvertices).count() <= 1) out.push_back(b);
    return out;
}

}  // namespace chroma
