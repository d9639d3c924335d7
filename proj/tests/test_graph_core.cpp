#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <bit>
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "stardecomp/graph.hpp"
#include "testgraphs.hpp"

using namespace stardecomp;
using namespace testsupport;

TEST_CASE("graph6 known vectors") {
    Graph k4 = parse_graph6("C~");
    CHECK(k4.n == 4);
    CHECK(k4.m == 6);
    for (int u = 0; u < 4; ++u)
        for (int v = u + 1; v < 4; ++v) CHECK(k4.has_edge(u, v));

    Graph e4 = parse_graph6("C?");
    CHECK(e4.n == 4);
    CHECK(e4.m == 0);

    CHECK(encode_graph6(complete(4)) == "C~");
    CHECK(encode_graph6(Graph::empty(4)) == "C?");
}

TEST_CASE("graph6 header prefix is tolerated") {
    Graph g = parse_graph6(">>graph6<<C~");
    CHECK(g.m == 6);
}

TEST_CASE("graph6 round trip on random graphs is byte exact") {
    for (int i = 0; i < 500; ++i) {
        int n = 1 + i % 30;
        Graph g = random_graph(n, 0.1 + 0.08 * (i % 10), 1000 + i);
        std::string text = encode_graph6(g);
        Graph back = parse_graph6(text);
        CHECK(back.n == g.n);
        CHECK(back.adj == g.adj);
        CHECK(encode_graph6(back) == text);
    }
}

TEST_CASE("graph6 round trip through the hypercube constructor") {
    Graph g = q3();
    Graph back = parse_graph6(encode_graph6(g));
    CHECK(back.adj == g.adj);
}

TEST_CASE("graph6 long form") {
    for (int n : {63, 64, 100}) {
        Graph g = random_graph(n, 0.05, 7 * n);
        std::string text = encode_graph6(g);
        CHECK(text[0] == '~');
        Graph back = parse_graph6(text);
        CHECK(back.adj == g.adj);
    }
}

TEST_CASE("graph6 malformed inputs") {
    CHECK_THROWS_AS(parse_graph6(""), MalformedGraph6);
    CHECK_THROWS_AS(parse_graph6("C"), MalformedGraph6);        // missing data
    CHECK_THROWS_AS(parse_graph6("C~~"), MalformedGraph6);      // extra data
    CHECK_THROWS_AS(parse_graph6("C!"), MalformedGraph6);       // char below 63
    CHECK_THROWS_AS(parse_graph6("~~??????"), UnsupportedSize); // >= 2^18 vertices
}

TEST_CASE("from_edges validates simplicity") {
    CHECK_THROWS_AS(Graph::from_edges(3, {{0, 0}}), InvalidOrder);
    CHECK_THROWS_AS(Graph::from_edges(3, {{0, 1}, {1, 0}}), InvalidOrder);
    CHECK_THROWS_AS(Graph::from_edges(3, {{0, 3}}), VertexOutOfRange);
    Graph g = Graph::from_edges(4, {{2, 0}, {0, 1}, {3, 0}});
    CHECK(g.adj[0] == std::vector<int>{1, 2, 3});
    CHECK(g.m == 3);
}

TEST_CASE("regularity checks") {
    CHECK(is_r_regular(complete(4), 3));
    CHECK_FALSE(is_r_regular(complete(4), 2));
    CHECK(is_r_regular(petersen(), 3));
    CHECK(regularity(cycle_n(5)) == 2);
    CHECK(regularity(path_n(3)) == std::nullopt);
    CHECK(regularity(Graph::empty(3)) == 0);
}

TEST_CASE("connected components") {
    auto one = connected_components(complete(4));
    REQUIRE(one.size() == 1);
    CHECK(one[0] == std::vector<int>{0, 1, 2, 3});

    auto two = connected_components(disjoint_union(complete(4), complete(4)));
    REQUIRE(two.size() == 2);
    CHECK(two[0].size() == 4);
    CHECK(two[1].size() == 4);
    CHECK(two[1][0] == 4);

    auto iso = connected_components(Graph::empty(3));
    REQUIRE(iso.size() == 3);
    CHECK(iso[2] == std::vector<int>{2});
}

TEST_CASE("delete_vertices") {
    DeletionResult r1 = delete_vertices(complete(4), {0});
    CHECK(r1.graph.n == 3);
    CHECK(r1.graph.m == 3);
    CHECK(r1.old_to_new[0] == -1);
    CHECK(r1.old_to_new[3] == 2);

    DeletionResult r2 = delete_vertices(cycle_n(5), {0});
    auto kinds = classify_components(r2.graph);
    REQUIRE(kinds.size() == 1);
    CHECK(kinds[0].kind == ComponentKind::Path);

    // Deleting a maximum independent set of Q3 leaves 4 isolated vertices.
    Graph cube = q3();
    std::vector<int> best;
    for (int mask = 0; mask < 256; ++mask) {
        std::vector<int> set;
        for (int v = 0; v < 8; ++v)
            if (mask >> v & 1) set.push_back(v);
        bool ok = true;
        for (int a : set)
            for (int b : set)
                if (a < b && cube.has_edge(a, b)) ok = false;
        if (ok && set.size() > best.size()) best = set;
    }
    REQUIRE(best.size() == 4);
    DeletionResult r3 = delete_vertices(cube, best);
    for (const auto& info : classify_components(r3.graph))
        CHECK(info.kind == ComponentKind::IsolatedVertex);

    CHECK_THROWS_AS(delete_vertices(complete(4), {7}), VertexOutOfRange);
}

TEST_CASE("classify_components kinds") {
    CHECK(classify_components(cycle_n(6))[0].kind == ComponentKind::Cycle);
    CHECK(classify_components(cycle_n(6))[0].count3 == 0);

    Graph claw = Graph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}});
    CHECK(classify_components(claw)[0].kind == ComponentKind::Tree);
    CHECK(classify_components(claw)[0].count3 == 1);

    CHECK(classify_components(Graph::empty(1))[0].kind == ComponentKind::IsolatedVertex);
    CHECK(classify_components(path_n(2))[0].kind == ComponentKind::Path);
    CHECK(classify_components(path_n(4))[0].kind == ComponentKind::Path);
    CHECK(classify_components(complete(4))[0].kind == ComponentKind::Other);
    CHECK(classify_components(complete(4))[0].count3 == 4);
    CHECK(classify_components(cycle_n(3))[0].kind == ComponentKind::Cycle);
}

TEST_CASE("classify_components partitions the vertex set") {
    for (int i = 0; i < 50; ++i) {
        Graph g = random_graph(3 + i % 12, 0.25, 400 + i);
        int total = 0;
        for (const auto& info : classify_components(g))
            total += static_cast<int>(info.vertices.size());
        CHECK(total == g.n);
    }
}

TEST_CASE("short odd cycles through a vertex") {
    Graph k4 = complete(4);
    for (int v = 0; v < 4; ++v) CHECK(in_short_odd_cycle(k4, v, 3));

    Graph cube = q3();
    for (int v = 0; v < 8; ++v)
        for (int k : {3, 5, 7}) CHECK_FALSE(in_short_odd_cycle(cube, v, k));

    Graph pet = petersen();
    for (int v = 0; v < 10; ++v) {
        CHECK(in_short_odd_cycle(pet, v, 5));
        CHECK_FALSE(in_short_odd_cycle(pet, v, 3));
    }

    Graph c7 = cycle_n(7);
    for (int v = 0; v < 7; ++v) CHECK(in_short_odd_cycle(c7, v, 7));

    CHECK_THROWS_AS(in_short_odd_cycle(k4, 0, 4), std::invalid_argument);
    CHECK_THROWS_AS(in_short_odd_cycle(k4, 9, 3), VertexOutOfRange);
}

TEST_CASE("short odd cycles agree with exhaustive search") {
    for (int i = 0; i < 30; ++i) {
        Graph g = random_graph(5 + i % 6, 0.35, 900 + i);
        for (int v = 0; v < g.n; ++v)
            for (int k : {3, 5, 7})
                CHECK(in_short_odd_cycle(g, v, k) == ts_in_cycle(g, v, k));
    }
}

TEST_CASE("bipartition") {
    auto c4 = bipartition(cycle_n(4));
    REQUIRE(c4.has_value());
    CHECK(c4->a == std::vector<int>{0, 2});
    CHECK(c4->b == std::vector<int>{1, 3});

    CHECK_FALSE(bipartition(complete(4)).has_value());

    auto cube = bipartition(q3());
    REQUIRE(cube.has_value());
    CHECK(cube->a.size() == 4);
    for (int v : cube->a) CHECK(std::popcount(static_cast<unsigned>(v)) % 2 == 0);

    Graph g = disjoint_union(cycle_n(4), cycle_n(6));
    auto parts = bipartition(g);
    REQUIRE(parts.has_value());
    for (auto [u, v] : g.edges()) {
        bool ua = std::binary_search(parts->a.begin(), parts->a.end(), u);
        bool va = std::binary_search(parts->a.begin(), parts->a.end(), v);
        CHECK(ua != va);
    }
}

TEST_CASE("vertex connectivity") {
    CHECK(vertex_connectivity(complete(4)) == 3);
    CHECK(vertex_connectivity(path_n(3)) == 1);
    CHECK(vertex_connectivity(q3()) == 3);
    CHECK(vertex_connectivity(petersen()) == 3);
    CHECK(vertex_connectivity(cycle_n(6)) == 2);
    CHECK(vertex_connectivity(disjoint_union(complete(4), complete(4))) == 0);
    CHECK(vertex_connectivity(bridge_cubic_10()) == 1);
}

TEST_CASE("vertex connectivity agrees with exhaustive separator search") {
    for (int i = 0; i < 40; ++i) {
        Graph g = random_graph(4 + i % 5, 0.2 + 0.15 * (i % 5), 300 + i);
        CHECK(vertex_connectivity(g) == ts_connectivity(g));
    }
}

TEST_CASE("random cubic generation") {
    Graph k4 = random_cubic(4, 11);
    CHECK(k4.m == 6);  // the only cubic graph on 4 vertices

    for (int seed = 0; seed < 100; ++seed) {
        Graph g = random_cubic(6, seed);
        CHECK(is_r_regular(g, 3));
    }

    Graph a = random_cubic(16, 7);
    Graph b = random_cubic(16, 7);
    CHECK(a.adj == b.adj);

    CHECK_THROWS_AS(random_cubic(5, 0), InvalidOrder);
    CHECK_THROWS_AS(random_cubic(2, 0), InvalidOrder);
}

TEST_CASE("random regular generation") {
    for (int seed = 0; seed < 25; ++seed) {
        Graph g = random_regular(10, 4, seed);
        CHECK(is_r_regular(g, 4));
    }
    Graph a = random_regular(15, 4, 3);
    Graph b = random_regular(15, 4, 3);
    CHECK(a.adj == b.adj);
    CHECK_THROWS_AS(random_regular(4, 4, 0), InvalidOrder);
    CHECK_THROWS_AS(random_regular(5, 3, 0), InvalidOrder);
}
