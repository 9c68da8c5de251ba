#include <catch2/catch_amalgamated.hpp>

#include <fstream>
#include <random>
#include <sstream>

#include "turan/graph.hpp"

using namespace turan;

TEST_CASE("from_edge_list basics") {
    Graph p3 = Graph::from_edge_list(3, {{0, 1}, {1, 2}});
    CHECK(p3.degree(0) == 1);
    CHECK(p3.degree(1) == 2);
    CHECK(p3.degree(2) == 1);

    Graph e2 = Graph::from_edge_list(2, {});
    CHECK(e2.edge_count() == 0);

    // duplicates collapse
    Graph dup = Graph::from_edge_list(4, {{0, 1}, {0, 1}, {1, 0}});
    CHECK(dup.edge_count() == 1);

    CHECK_THROWS_AS(Graph::from_edge_list(3, {{0, 3}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph::from_edge_list(3, {{1, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(65), std::invalid_argument);
}

TEST_CASE("edge_count") {
    CHECK(Graph::complete(5).edge_count() == 10);
    CHECK(Graph::empty(7).edge_count() == 0);
    CHECK(Graph::path(4).edge_count() == 3);
}

TEST_CASE("degree and subset counts") {
    Graph k4 = Graph::complete(4);
    VertexSet s;
    s.add(0);
    s.add(1);
    VertexSet t;
    t.add(2);
    t.add(3);
    CHECK(k4.edges_within(s) == 1);
    CHECK(k4.edges_between(s, t) == 4);
    CHECK(k4.edges_within(VertexSet{}) == 0);
    CHECK(Graph::cycle(5).degree(0) == 2);
    CHECK_THROWS_AS(k4.edges_between(s, s), std::invalid_argument);

    // e(S) + e(S,S~) + e(S~) = e(G)
    Graph g = Graph::from_edge_list(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}, {1, 4}});
    VertexSet a;
    a.add(0);
    a.add(2);
    a.add(4);
    VertexSet b = VertexSet::range(6) - a;
    CHECK(g.edges_within(a) + g.edges_between(a, b) + g.edges_within(b) == g.edge_count());
}

TEST_CASE("join and disjoint_union") {
    Graph j = join(Graph::complete(2), Graph::empty(3));
    CHECK(j.vertex_count() == 5);
    CHECK(j.edge_count() == 7);
    CHECK(join(Graph::empty(1), Graph::empty(1)) == Graph::complete(2));
    CHECK(join(Graph::complete(2), Graph::complete(2)) == Graph::complete(4));

    Graph u = disjoint_union(Graph::complete(3), Graph::empty(2));
    CHECK(u.vertex_count() == 5);
    CHECK(u.edge_count() == 3);
    CHECK(disjoint_union(Graph::empty(0), Graph::cycle(4)) == Graph::cycle(4));
    CHECK(disjoint_union(Graph::complete(2), Graph::complete(2)).edge_count() == 2);

    CHECK(Graph::complete(1).edge_count() == 0);
    CHECK(Graph::complete(4).edge_count() == 6);
    CHECK(Graph::empty(0).vertex_count() == 0);
}

TEST_CASE("join edge-count identity on random pairs") {
    std::mt19937 rng(7);
    for (int iter = 0; iter < 50; ++iter) {
        int n1 = static_cast<int>(rng() % 8), n2 = static_cast<int>(rng() % 8);
        std::vector<Edge> e1, e2;
        for (int u = 0; u < n1; ++u)
            for (int v = u + 1; v < n1; ++v)
                if (rng() % 2) e1.emplace_back(u, v);
        for (int u = 0; u < n2; ++u)
            for (int v = u + 1; v < n2; ++v)
                if (rng() % 2) e2.emplace_back(u, v);
        Graph h1 = Graph::from_edge_list(n1, e1), h2 = Graph::from_edge_list(n2, e2);
        CHECK(join(h1, h2).edge_count() == h1.edge_count() + h2.edge_count() + n1 * n2);
        CHECK(disjoint_union(h1, h2).edge_count() == h1.edge_count() + h2.edge_count());
    }
}

TEST_CASE("degree sum is twice edge count") {
    std::mt19937 rng(11);
    for (int iter = 0; iter < 30; ++iter) {
        int n = 1 + static_cast<int>(rng() % 20);
        std::vector<Edge> edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng() % 3 == 0) edges.emplace_back(u, v);
        Graph g = Graph::from_edge_list(n, edges);
        int sum = 0;
        for (int v = 0; v < n; ++v) sum += g.degree(v);
        CHECK(sum == 2 * g.edge_count());
    }
}

TEST_CASE("graph6 matches independent encoder on all graphs with n <= 5") {
    std::ifstream in(TURAN_TEST_DATA_DIR "/graph6_small.txt");
    REQUIRE(in.good());
    int n;
    std::uint64_t mask;
    std::string expected;
    int rows = 0;
    while (in >> n >> mask >> expected) {
        std::vector<Edge> edges;
        int idx = 0;
        for (int v = 0; v < n; ++v)
            for (int u = 0; u < v; ++u, ++idx)
                if ((mask >> idx) & 1) edges.emplace_back(u, v);
        Graph g = Graph::from_edge_list(n, edges);
        CHECK(emit_graph6(g) == expected);
        CHECK(parse_graph6(expected) == g);
        ++rows;
    }
    CHECK(rows == 1100);
}

TEST_CASE("graph6 explicit values") {
    CHECK(emit_graph6(Graph::empty(1)) == "@");
    Graph k4 = Graph::complete(4);
    CHECK(parse_graph6(emit_graph6(k4)) == k4);
}

TEST_CASE("graph6 round trip on random graphs up to n = 30") {
    std::mt19937 rng(99);
    for (int iter = 0; iter < 1000; ++iter) {
        int n = static_cast<int>(rng() % 31);
        std::vector<Edge> edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng() % 2) edges.emplace_back(u, v);
        Graph g = Graph::from_edge_list(n, edges);
        CHECK(parse_graph6(emit_graph6(g)) == g);
    }
}

TEST_CASE("graph6 malformed inputs") {
    CHECK_THROWS_AS(parse_graph6(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_graph6("D"), std::invalid_argument);       // truncated body
    CHECK_THROWS_AS(parse_graph6("D??!"), std::invalid_argument);    // overlong
    CHECK_THROWS_AS(parse_graph6("\x01"), std::invalid_argument);    // bad header
}

TEST_CASE("edge list text format round trip") {
    Graph g = Graph::from_edge_list(5, {{0, 1}, {2, 4}, {1, 3}});
    std::stringstream ss;
    emit_edge_list(ss, g);
    CHECK(ss.str() == "5 3\n0 1\n1 3\n2 4\n");
    CHECK(parse_edge_list(ss) == g);

    std::stringstream bad("3 2\n0 1\n");
    CHECK_THROWS_AS(parse_edge_list(bad), std::invalid_argument);
}
