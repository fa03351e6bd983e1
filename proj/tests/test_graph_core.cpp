#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "chroma/blocks.hpp"
#include "chroma/cliques.hpp"
#include "chroma/coloring.hpp"
#include "chroma/enumerate.hpp"
#include "chroma/formats.hpp"
#include "chroma/graph.hpp"
#include "chroma/structure.hpp"
#include "test_helpers.hpp"

using namespace chroma;
using namespace testutil;

TEST_CASE("graph6 decodes a 5-cycle and round-trips") {
    // derived from the public bit layout: C5 edges 01,12,23,34,04
    Graph c5 = cycle(5);
    std::string enc = serialize_graph6(c5);
    REQUIRE(enc.size() == 3);
    REQUIRE(enc[0] == 'D');
    Graph back = parse_graph6(enc);
    REQUIRE(back == c5);
    // cross-check against an edge_list round trip
    Graph via_edges = parse_edge_list(serialize_edge_list(back));
    REQUIRE(via_edges == c5);
}

TEST_CASE("graph6 known encodings") {
    // the format document's worked example: n=5, edges 02 04 13 34 -> 'DQc'
    Graph g(5);
    g.add_edge(0, 2);
    g.add_edge(0, 4);
    g.add_edge(1, 3);
    g.add_edge(3, 4);
    REQUIRE(serialize_graph6(g) == "DQc");
    REQUIRE(parse_graph6("DQc") == g);
    // optional header prefix is accepted
    REQUIRE(parse_graph6(">>graph6<<DQc") == g);
}

TEST_CASE("graph6 round-trip is bit-exact on random graphs") {
    std::mt19937 rng(42);
    for (int trial = 0; trial < 200; ++trial) {
        int n = static_cast<int>(rng() % 13);
        Graph g = random_graph(n, 0.4, rng);
        std::string enc = serialize_graph6(g);
        REQUIRE(parse_graph6(enc) == g);
        REQUIRE(serialize_graph6(parse_graph6(enc)) == enc);
    }
}

TEST_CASE("graph6 malformed inputs") {
    REQUIRE_THROWS_AS(parse_graph6(""), parse_error);
    REQUIRE_THROWS_AS(parse_graph6("D"), parse_error);      // truncated body
    REQUIRE_THROWS_AS(parse_graph6("Dhcc"), parse_error);   // trailing bytes
    REQUIRE_THROWS_AS(parse_graph6("D\x1f??"), parse_error);  // byte out of range
}

TEST_CASE("edge list parses a triangle") {
    Graph g = parse_edge_list("0 1\n1 2\n2 0");
    REQUIRE(g == complete(3));
    REQUIRE_THROWS_AS(parse_edge_list("0 0"), parse_error);
    REQUIRE_THROWS_AS(parse_edge_list("0 1\n1 0"), parse_error);  // duplicate
}

TEST_CASE("dimacs parses K2 and validates") {
    Graph g = parse_dimacs("p edge 2 1\ne 1 2\n");
    REQUIRE(g == complete(2));
    REQUIRE_THROWS_AS(parse_dimacs("p edge 2 2\ne 1 2\n"), parse_error);  // edge count mismatch
    REQUIRE_THROWS_AS(parse_dimacs("e 1 2\n"), parse_error);              // edge before header
    REQUIRE_THROWS_AS(parse_dimacs("p edge 2 1\ne 1 1\n"), parse_error);  // self-loop
}

TEST_CASE("format sniffing") {
    REQUIRE(sniff_format("p edge 3 2\ne 1 2\ne 2 3\n") == GraphFormat::dimacs_col);
    REQUIRE(sniff_format("c comment\np edge 1 0\n") == GraphFormat::dimacs_col);
    REQUIRE(sniff_format("0 1\n1 2\n") == GraphFormat::edge_list);
    REQUIRE(sniff_format("Dhc") == GraphFormat::graph6);
}

TEST_CASE("blocks of K4, bowtie, P4") {
    auto t = blocks_and_cutvertices(complete(4));
    REQUIRE(t.blocks.size() == 1);
    REQUIRE(t.blocks[0] == VertexSet::all(4));
    REQUIRE(t.cutvertices.empty());

    auto bt = blocks_and_cutvertices(bowtie());
    REQUIRE(bt.blocks.size() == 2);
    REQUIRE(bt.cutvertices.count() == 1);
    REQUIRE(bt.cutvertices.contains(2));

    auto p = blocks_and_cutvertices(path(4));
    REQUIRE(p.blocks.size() == 3);
    REQUIRE(p.cutvertices.count() == 2);
}

TEST_CASE("block decomposition properties on random graphs") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 120; ++trial) {
        int n = 1 + static_cast<int>(rng() % 9);
        Graph g = random_graph(n, 0.35, rng);
        auto t = blocks_and_cutvertices(g);
        // every edge lies in exactly one block
        for (auto [u, v] : g.edges()) {
            int count = 0;
            for (const auto& b : t.blocks)
                if (b.contains(u) && b.contains(v)) ++count;
            REQUIRE(count == 1);
        }
        // each block with an edge is 2-connected when restricted
        for (const auto& b : t.blocks) {
            auto [h, to_parent, from_parent] = induced_subgraph(g, b);
            if (h.n >= 2) REQUIRE(is_two_connected(h));
        }
        // cutvertex removal disconnects its component; non-cutvertex removal does not
        for (int v = 0; v < n; ++v) {
            VertexSet comp = component_of(g, v, g.vertices());
            if (comp.count() == 1) continue;
            VertexSet rest = comp;
            rest.remove(v);
            bool disconnects = !is_connected(g, rest);
            REQUIRE(disconnects == t.is_cutvertex(v));
        }
        // vertices in >= 2 blocks are exactly the cutvertices
        for (int v = 0; v < n; ++v)
            REQUIRE((t.blocks_containing(v).size() >= 2) == t.is_cutvertex(v));
    }
}

TEST_CASE("order_by_decreasing_distance") {
    // P3 a-b-c toward c
    Graph p3 = path(3);
    auto o = order_by_decreasing_distance(p3, VertexSet::single(2));
    REQUIRE(o.order == std::vector<int>{0, 1, 2});

    // C4 toward vertex 0: vertex 2 first, then 1,3, then 0
    Graph c4 = cycle(4);
    auto oc = order_by_decreasing_distance(c4, VertexSet::single(0));
    REQUIRE(oc.order == std::vector<int>{2, 1, 3, 0});

    // star toward center: leaves first
    Graph star = complete_bipartite(1, 3);
    auto os = order_by_decreasing_distance(star, VertexSet::single(0));
    REQUIRE(os.order.back() == 0);

    // disconnected from target -> error naming the unreachable vertex
    Graph disc(3);
    disc.add_edge(0, 1);
    REQUIRE_THROWS_AS(order_by_decreasing_distance(disc, VertexSet::single(2)), precondition_error);
}

TEST_CASE("greedy_color on K4 and C5") {
    auto r = greedy_color(complete(4), VertexOrder::natural(4), Coloring(4));
    REQUIRE(r.ok());
    REQUIRE(r.coloring->assignment == std::vector<int>{1, 2, 3, 4});

    auto rc = greedy_color(cycle(5), VertexOrder::natural(5), Coloring(5));
    REQUIRE(rc.ok());
    REQUIRE(rc.coloring->assignment == std::vector<int>{1, 2, 1, 2, 3});
}

TEST_CASE("greedy stays within Delta colors when a low-degree vertex goes last") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 2 + static_cast<int>(rng() % 7);
        Graph g = random_connected_graph(n, 0.45, rng);
        int delta = g.max_degree();
        int v = -1;
        for (int u = 0; u < n; ++u)
            if (g.degree(u) < delta) v = u;
        if (v < 0) continue;
        auto order = order_by_decreasing_distance(g, VertexSet::single(v));
        auto r = greedy_color(g, order, Coloring(n));
        REQUIRE(r.ok());
        REQUIRE(is_proper_total(g, *r.coloring));
        REQUIRE(r.coloring->palette_size() <= delta);
    }
}

TEST_CASE("greedy over any order uses at most Delta+1 colors (exhaustive small + sampled)") {
    for (int n = 1; n <= 5; ++n)
        for_each_labeled_graph(n, [&](const Graph& g) {
            auto r = greedy_color(g, VertexOrder::natural(n), Coloring(n));
            REQUIRE(r.ok());
            REQUIRE(is_proper_total(g, *r.coloring));
            REQUIRE(r.coloring->palette_size() <= g.max_degree() + 1);
        });
    std::mt19937 rng(13);
    for (int trial = 0; trial < 300; ++trial) {
        int n = 6 + static_cast<int>(rng() % 3);
        Graph g = random_graph(n, 0.5, rng);
        std::vector<int> perm(static_cast<std::size_t>(n));
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        auto r = greedy_color(g, VertexOrder{perm}, Coloring(n));
        REQUIRE(r.ok());
        REQUIRE(is_proper_total(g, *r.coloring));
        REQUIRE(r.coloring->palette_size() <= g.max_degree() + 1);
    }
}

TEST_CASE("greedy failure names the stuck vertex") {
    // lists force a dead end on the middle of a path
    Graph p3 = path(3);
    ListAssignment L(3);
    L.at(0) = {1};
    L.at(1) = {1, 2};
    L.at(2) = {2};
    auto r = greedy_color(p3, VertexOrder::natural(3), Coloring(3), &L);
    REQUIRE_FALSE(r.ok());
    REQUIRE(r.failure->stuck_vertex == 2);
    REQUIRE(r.failure->saturated_colors == std::vector<int>{2});
}

TEST_CASE("max_clique / max_independent_set") {
    REQUIRE(clique_number(complete(5)) == 5);
    REQUIRE(independence_number(complete(5)) == 1);
    REQUIRE(clique_number(cycle(5)) == 2);
    REQUIRE(independence_number(cycle(5)) == 2);
    REQUIRE(clique_number(petersen()) == 2);
    REQUIRE(independence_number(petersen()) == 4);

    ScaleLimits tight;
    tight.clique_n = 4;
    REQUIRE_THROWS_AS(max_clique(complete(5), tight), scale_refusal);
}

TEST_CASE("clique oracle agrees with brute force on small graphs") {
    std::mt19937 rng(17);
    for (int trial = 0; trial < 150; ++trial) {
        int n = 1 + static_cast<int>(rng() % 8);
        Graph g = random_graph(n, 0.5, rng);
        // brute force over all subsets
        int best = 0;
        for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
            VertexSet s{{m, 0}};
            if (is_clique(g, s)) best = std::max(best, s.count());
        }
        VertexSet q = max_clique(g);
        REQUIRE(is_clique(g, q));
        REQUIRE(q.count() == best);
    }
}

TEST_CASE("is_gallai_tree") {
    REQUIRE(is_gallai_tree(path(5)).tag == StructureTag::gallai_tree);  // all blocks K2
    REQUIRE(is_gallai_tree(cycle(4)).tag == StructureTag::other);
    REQUIRE(is_gallai_tree(cycle(7)).tag == StructureTag::gallai_tree);
    REQUIRE(is_gallai_tree(bowtie()).tag == StructureTag::gallai_tree);
    REQUIRE_THROWS_AS(is_gallai_tree(Graph(2)), precondition_error);

    // a small instance in the style of the paper's many-block figure:
    // odd cycles and cliques glued at cutvertices
    Graph g(10);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(2, 3);
    g.add_edge(3, 4);
    g.add_edge(4, 0);  // C5 block
    g.add_edge(4, 5);
    g.add_edge(5, 6);
    g.add_edge(6, 4);  // K3 block at vertex 4
    g.add_edge(6, 7);  // K2 bridge
    g.add_edge(7, 8);
    g.add_edge(8, 9);
    g.add_edge(9, 7);  // K3 block
    auto sc = is_gallai_tree(g);
    REQUIRE(sc.tag == StructureTag::gallai_tree);
    REQUIRE(sc.blocks.size() == 4);
    for (const auto& [blk, kind] : sc.blocks) REQUIRE(kind != BlockKind::other);
}

TEST_CASE("is_paper_ktree") {
    REQUIRE(is_paper_ktree(complete(4), 4).tag == StructureTag::paper_ktree);
    REQUIRE(is_paper_ktree(cycle(4), 3).tag == StructureTag::other);
    REQUIRE(is_paper_ktree(cycle(5), 3).tag == StructureTag::paper_ktree);
    REQUIRE(is_paper_ktree(complete(4), 5).tag == StructureTag::other);

    // two K4's joined by an edge between degree-3 vertices
    Graph g(8);
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) {
            g.add_edge(i, j);
            g.add_edge(4 + i, 4 + j);
        }
    g.add_edge(0, 4);
    auto sc = is_paper_ktree(g, 4);
    REQUIRE(sc.tag == StructureTag::paper_ktree);
    REQUIRE(sc.units.size() == 2);
    REQUIRE(sc.bridges.size() == 1);

    // a vertex with two bridges is not allowed
    Graph h(12);
    for (int b = 0; b < 3; ++b)
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j) h.add_edge(4 * b + i, 4 * b + j);
    h.add_edge(0, 4);
    h.add_edge(0, 8);  // vertex 0 in two bridges -> degree 5 > k
    REQUIRE(is_paper_ktree(h, 4).tag == StructureTag::other);

    // 3-trees: two C5's joined by a bridge
    Graph two_c5(10);
    for (int i = 0; i < 5; ++i) {
        two_c5.add_edge(i, (i + 1) % 5);
        two_c5.add_edge(5 + i, 5 + (i + 1) % 5);
    }
    two_c5.add_edge(0, 5);
    REQUIRE(is_paper_ktree(two_c5, 3).tag == StructureTag::paper_ktree);
}

TEST_CASE("recognized multi-unit k-trees have >= k+1 vertices of degree k-1") {
    // exhaustive over small graphs: whenever recognition succeeds with more
    // than one unit, count degree-(k-1) vertices
    for (int n = 2; n <= 7; ++n)
        for_each_connected_graph(n, [&](const Graph& g) {
            for (int k = 3; k <= 4; ++k) {
                auto sc = is_paper_ktree(g, k);
                if (sc.tag != StructureTag::paper_ktree || sc.units.size() <= 1) continue;
                int low = 0;
                for (int v = 0; v < g.n; ++v)
                    if (g.degree(v) == k - 1) ++low;
                REQUIRE(low >= k + 1);
            }
        });
}

TEST_CASE("degenerate inputs accepted") {
    Graph empty(0);
    REQUIRE(components(empty).empty());
    REQUIRE(serialize_graph6(empty) == "?");
    Graph k1(1);
    auto r = greedy_color(k1, VertexOrder::natural(1), Coloring(1));
    REQUIRE(r.coloring->assignment == std::vector<int>{1});
    REQUIRE(blocks_and_cutvertices(k1).blocks.size() == 1);
}
