#pragma once

#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <vector>

#include "chroma/graph.hpp"

namespace testutil {

inline chroma::Graph cycle(int n) {
    chroma::Graph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

inline chroma::Graph path(int n) {
    chroma::Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

inline chroma::Graph complete(int n) {
    chroma::Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

inline chroma::Graph complete_bipartite(int a, int b) {
    chroma::Graph g(a + b);
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) g.add_edge(i, a + j);
    return g;
}

inline chroma::Graph petersen() {
    chroma::Graph g(10);
    for (int i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);        // outer C5
        g.add_edge(5 + i, 5 + (i + 2) % 5);  // inner pentagram
        g.add_edge(i, 5 + i);              // spokes
    }
    return g;
}

// triangular prism C3 x K2
inline chroma::Graph prism() {
    chroma::Graph g(6);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(2, 0);
    g.add_edge(3, 4);
    g.add_edge(4, 5);
    g.add_edge(5, 3);
    g.add_edge(0, 3);
    g.add_edge(1, 4);
    g.add_edge(2, 5);
    return g;
}

// two triangles sharing one vertex
inline chroma::Graph bowtie() {
    chroma::Graph g(5);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(2, 0);
    g.add_edge(2, 3);
    g.add_edge(2, 4);
    g.add_edge(3, 4);
    return g;
}

inline chroma::Graph diamond() {  // K4 minus an edge
    chroma::Graph g(4);
    g.add_edge(0, 2);
    g.add_edge(0, 3);
    g.add_edge(1, 2);
    g.add_edge(1, 3);
    g.add_edge(2, 3);
    return g;
}

inline chroma::Graph random_graph(int n, double p, std::mt19937& rng) {
    chroma::Graph g(n);
    std::bernoulli_distribution coin(p);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (coin(rng)) g.add_edge(i, j);
    return g;
}

inline chroma::Graph random_connected_graph(int n, double p, std::mt19937& rng) {
    for (;;) {
        chroma::Graph g = random_graph(n, p, rng);
        if (chroma::is_connected(g)) return g;
    }
}

}  // namespace testutil
