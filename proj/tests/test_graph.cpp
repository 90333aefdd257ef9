#include "degmom/graph.hpp"
#include "degmom/edge_list.hpp"

#include "support.hpp"

#include <doctest.h>

#include <sstream>

using namespace degmom;
using namespace testsupport;

TEST_CASE("build_graph: path P3") {
    const Graph g = build_graph(std::vector<Edge>{{0, 1}, {1, 2}}, 3);
    CHECK(g.vertex_count() == 3);
    CHECK(g.edge_count() == 2);
    CHECK(g.degree(0) == 1);
    CHECK(g.degree(1) == 2);
    CHECK(g.degree(2) == 1);
    CHECK(g.has_edge(0, 1));
    CHECK(g.has_edge(1, 0));
    CHECK_FALSE(g.has_edge(0, 2));
}

TEST_CASE("build_graph: duplicate edges collapse") {
    const Graph g = build_graph(std::vector<Edge>{{0, 1}, {0, 1}, {1, 0}}, 2);
    CHECK(g.edge_count() == 1);
    CHECK(g.degree(0) == 1);
}

TEST_CASE("build_graph: rejects self-loops and out-of-range ids") {
    CHECK_THROWS_AS(build_graph(std::vector<Edge>{{0, 0}}, 1), std::invalid_argument);
    CHECK_THROWS_AS(build_graph(std::vector<Edge>{{0, 3}}, 3), std::invalid_argument);
}

TEST_CASE("build_graph: isolated vertices flagged") {
    const Graph g = build_graph(std::vector<Edge>{{0, 1}}, 5);
    CHECK(g.isolated_count() == 3);
}

TEST_CASE("precedes: degree then id") {
    const Graph p3 = make_path(3);
    CHECK(precedes(p3, 0, 1));       // degree 1 before degree 2
    CHECK_FALSE(precedes(p3, 1, 0));

    const Graph k3 = make_clique(3);
    CHECK(precedes(k3, 0, 2));  // equal degrees, id tiebreak
    CHECK_FALSE(precedes(k3, 2, 0));
    CHECK_FALSE(precedes(k3, 1, 1));  // irreflexive
}

TEST_CASE("precedes: total order on a random graph") {
    const Graph g = make_er(40, 0.15, 11);
    for (VertexId u = 0; u < 40; ++u) {
        for (VertexId v = 0; v < 40; ++v) {
            if (u == v) {
                CHECK_FALSE(precedes(g, u, v));
            } else {
                CHECK(precedes(g, u, v) != precedes(g, v, u));
            }
        }
    }
}

TEST_CASE("core_number: cliques, trees, cycles") {
    CHECK(core_number(make_clique(4)) == 3);
    CHECK(core_number(make_clique(7)) == 6);
    CHECK(core_number(make_path(2)) == 1);
    CHECK(core_number(make_path(50)) == 1);
    CHECK(core_number(make_star(9)) == 1);
    CHECK(core_number(make_cycle(3)) == 2);
    CHECK(core_number(make_cycle(100)) == 2);
    CHECK(core_number(build_graph(std::vector<Edge>{}, 4)) == 0);
}

TEST_CASE("core_number: clique with pendant path") {
    // peeling order has to get back up after the path is gone
    std::vector<Edge> edges;
    for (VertexId i = 0; i < 5; ++i) {
        for (VertexId j = i + 1; j < 5; ++j) edges.emplace_back(i, j);
    }
    edges.emplace_back(4, 5);
    edges.emplace_back(5, 6);
    const Graph g = build_graph(edges, 7);
    CHECK(core_number(g) == 4);
}

TEST_CASE("edge list: basic parse") {
    std::istringstream in("0 1\n1 2\n");
    ParseReport rep;
    const Graph g = read_edge_list(in, "test", &rep);
    CHECK(g.vertex_count() == 3);
    CHECK(g.edge_count() == 2);
    CHECK(rep.edge_lines == 2);
    CHECK(rep.duplicates_dropped == 0);
}

TEST_CASE("edge list: comments and duplicates") {
    std::istringstream in("# a comment\n0 1\n# another\n1 0\n1 2\n");
    ParseReport rep;
    const Graph g = read_edge_list(in, "test", &rep);
    CHECK(g.edge_count() == 2);
    CHECK(rep.duplicates_dropped == 1);
}

TEST_CASE("edge list: n header allows trailing isolated vertices") {
    std::istringstream in("n 10\n0 1\n1 2\n");
    ParseReport rep;
    const Graph g = read_edge_list(in, "test", &rep);
    CHECK(g.vertex_count() == 10);
    CHECK(g.edge_count() == 2);
    CHECK(rep.isolated == 7);
}

TEST_CASE("edge list: malformed line reports the line number") {
    std::istringstream in("0 1\nbogus line here\n");
    CHECK_THROWS_WITH_AS(read_edge_list(in, "test"), doctest::Contains("test:2"),
                         std::runtime_error);
}

TEST_CASE("edge list: header too small rejected") {
    std::istringstream in("n 2\n0 5\n");
    CHECK_THROWS_AS(read_edge_list(in, "test"), std::runtime_error);
}

TEST_CASE("edge list: save/load round trip") {
    const Graph g = make_er(60, 0.1, 3);
    std::ostringstream out;
    write_edge_list(g, out);
    std::istringstream in(out.str());
    const Graph h = read_edge_list(in, "roundtrip");
    REQUIRE(h.vertex_count() == g.vertex_count());
    REQUIRE(h.edge_count() == g.edge_count());
    for (VertexId v = 0; v < 60; ++v) CHECK(h.degree(v) == g.degree(v));
}
