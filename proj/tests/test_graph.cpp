#include "doctest.h"

#include <algorithm>

#include "cgk/fixtures.hpp"
#include "cgk/graph.hpp"

using namespace cgk;
using namespace cgk::fixtures;

TEST_CASE("build_graph basics") {
    const Graph g = build_graph(4, {{0, 1}, {1, 2}, {1, 2}, {2, 3}});
    CHECK(g.vertex_count() == 4);
    CHECK(g.edge_count() == 3);  // duplicate collapsed
    CHECK(g.has_edge(0, 1));
    CHECK(g.has_edge(1, 0));
    CHECK_FALSE(g.has_edge(0, 2));
    CHECK(g.neighbors(1) == std::vector<int>{0, 2});
    CHECK(g.degree(1) == 2);
    CHECK(g.edge_list() == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {2, 3}});
}

TEST_CASE("build_graph rejects loops and out-of-range endpoints") {
    CHECK_THROWS_AS(build_graph(3, {{0, 0}}), GraphError);
    CHECK_THROWS_AS(build_graph(3, {{0, 3}}), GraphError);
    CHECK_THROWS_AS(build_graph(3, {{-1, 1}}), GraphError);
}

TEST_CASE("adjacency masks agree with has_edge") {
    const Graph g = net();
    REQUIRE(g.has_masks());
    for (int u = 0; u < g.vertex_count(); ++u) {
        for (int v = 0; v < g.vertex_count(); ++v) {
            const bool bit = (g.adjacency_mask(u) >> v) & 1;
            CHECK(bit == g.has_edge(u, v));
        }
        CHECK(g.closed_mask(u) == (g.adjacency_mask(u) | (1ull << u)));
    }
}

TEST_CASE("fixture shapes") {
    CHECK(path(4).edge_count() == 3);
    CHECK(cycle(5).edge_count() == 5);
    CHECK(complete(5).edge_count() == 10);
    CHECK(claw().edge_count() == 3);
    CHECK(net().edge_count() == 6);
    CHECK(tent().edge_count() == 9);
    // consecutive cliques of sizes 2,1,3 joined completely
    const Graph cp = clique_path({2, 1, 3});
    CHECK(cp.vertex_count() == 6);
    CHECK(cp.edge_count() == 1 + 2 + 3 + 3);
    CHECK(cp.has_edge(0, 1));
    CHECK(cp.has_edge(1, 2));
    CHECK(cp.has_edge(2, 3));
    CHECK_FALSE(cp.has_edge(0, 3));
}

TEST_CASE("induced subgraph relabels ascending") {
    const InducedSubgraph sub = induced_subgraph(net(), {5, 1, 2, 1});
    CHECK(sub.vertex_map == std::vector<int>{1, 2, 5});
    CHECK(sub.graph.vertex_count() == 3);
    // b-c is an edge, c-z is an edge, b-z is not
    CHECK(sub.graph.has_edge(0, 1));
    CHECK(sub.graph.has_edge(1, 2));
    CHECK_FALSE(sub.graph.has_edge(0, 2));
}

TEST_CASE("bfs distances and diameter") {
    const Graph p4 = path(4);
    CHECK(bfs_distances(p4, 0).dist == std::vector<int>{0, 1, 2, 3});
    CHECK(diameter(p4) == 3);

    // net: the pendant x sits at distance 3 from the pendant y
    const Graph n = net();
    CHECK(bfs_distances(n, 3).dist[4] == 3);
    CHECK(diameter(n) == 3);
    CHECK(diameter(tent()) == 2);
    CHECK(diameter(complete(4)) == 1);

    const Graph split = build_graph(4, {{0, 1}, {2, 3}});
    CHECK(bfs_distances(split, 0).dist[2] == kUnreachable);
    CHECK_THROWS_AS(diameter(split), GraphError);
    CHECK_THROWS_AS(diameter(Graph(0)), GraphError);
}

TEST_CASE("connected components sorted by smallest member") {
    const Graph g = build_graph(6, {{3, 5}, {1, 4}, {4, 2}});
    const auto comps = connected_components(g);
    REQUIRE(comps.size() == 3);
    CHECK(comps[0] == std::vector<int>{0});
    CHECK(comps[1] == std::vector<int>{1, 2, 4});
    CHECK(comps[2] == std::vector<int>{3, 5});
    CHECK_FALSE(is_connected(g));
    CHECK(is_connected(path(4)));
    CHECK(is_connected(build_graph(1, {})));
}

TEST_CASE("graph enumeration addresses every labeled graph") {
    const GraphEnumeration en(3);
    CHECK(en.size() == 8);
    // bit k of the mask is the k-th pair (0,1), (0,2), (1,2)
    const Graph g5 = en.at(0b101);
    CHECK(g5.has_edge(0, 1));
    CHECK_FALSE(g5.has_edge(0, 2));
    CHECK(g5.has_edge(1, 2));

    int with_two_edges = 0;
    en.for_each([&](const Graph& g) {
        if (g.edge_count() == 2) ++with_two_edges;
    });
    CHECK(with_two_edges == 3);

    CHECK_THROWS_AS(GraphEnumeration(0), GraphError);
    CHECK_THROWS_AS(GraphEnumeration(8), GraphError);
}
