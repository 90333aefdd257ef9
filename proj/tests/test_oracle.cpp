#include "degmom/oracle.hpp"
#include "degmom/estimator.hpp"

#include "support.hpp"

#include <doctest.h>

#include <array>

using namespace degmom;
using namespace testsupport;

TEST_CASE("random_vertex: single vertex graph") {
    const Graph g = build_graph(std::vector<Edge>{}, 1);
    QueryOracle o(g, 1u);
    for (int i = 0; i < 10; ++i) CHECK(o.random_vertex() == 0);
    CHECK(o.stats().uniform_vertex == 10);
}

TEST_CASE("random_vertex: uniform within 4 sigma") {
    const Graph g = build_graph(std::vector<Edge>{{0, 1}}, 4);  // isolated ones included
    QueryOracle o(g, 99u);
    const int draws = 100000;
    std::array<int, 4> count{};
    for (int i = 0; i < draws; ++i) ++count[o.random_vertex()];
    const double sigma = std::sqrt(0.25 * 0.75 / draws);
    for (int v = 0; v < 4; ++v) {
        CHECK(std::abs(count[v] / double(draws) - 0.25) <= 4 * sigma);
    }
}

TEST_CASE("same seed, same draw sequence") {
    const Graph g = make_er(50, 0.1, 0);
    QueryOracle a(g, 1234u), b(g, 1234u);
    for (int i = 0; i < 200; ++i) {
        const VertexId va = a.random_vertex(), vb = b.random_vertex();
        CHECK(va == vb);
        CHECK(a.degree_of(va) == b.degree_of(vb));
    }
}

TEST_CASE("degree_of") {
    const Graph g = build_graph(std::vector<Edge>{{0, 1}, {1, 2}}, 4);
    QueryOracle o(g, 0u);
    CHECK(o.degree_of(1) == 2);
    CHECK(o.degree_of(3) == 0);
    CHECK(o.stats().degree == 2);
    CHECK_THROWS_AS(o.degree_of(4), std::out_of_range);
}

TEST_CASE("random_neighbor: uniform over the adjacency") {
    const Graph p3 = make_path(3);
    QueryOracle o(p3, 7u);
    const int draws = 100000;
    int zero = 0;
    for (int i = 0; i < draws; ++i) zero += o.random_neighbor(1) == 0;
    const double sigma = std::sqrt(0.25 / draws);
    CHECK(std::abs(zero / double(draws) - 0.5) <= 4 * sigma);

    CHECK(o.random_neighbor(0) == 1);  // unique neighbor

    const Graph star = make_star(4);
    QueryOracle so(star, 3u);
    std::array<int, 5> count{};
    for (int i = 0; i < draws; ++i) ++count[so.random_neighbor(0)];
    const double sigma4 = std::sqrt(0.25 * 0.75 / draws);
    for (int leaf = 1; leaf <= 4; ++leaf) {
        CHECK(std::abs(count[leaf] / double(draws) - 0.25) <= 4 * sigma4);
    }
}

TEST_CASE("random_neighbor: degree zero is an error") {
    const Graph g = build_graph(std::vector<Edge>{{0, 1}}, 3);
    QueryOracle o(g, 0u);
    CHECK_THROWS_AS(o.random_neighbor(2), std::logic_error);
}

TEST_CASE("indexed neighbor interface") {
    const Graph p3 = make_path(3);
    QueryOracle o(p3, 0u);
    CHECK(o.neighbor(1, 0) == 0);
    CHECK(o.neighbor(1, 1) == 2);
    CHECK(o.stats().neighbor == 2);
    CHECK_THROWS_AS(o.neighbor(1, 2), std::out_of_range);
}

TEST_CASE("pair_query") {
    const Graph p3 = make_path(3);
    QueryOracle o(p3, 0u);
    CHECK(o.pair_query(0, 1));
    CHECK_FALSE(o.pair_query(0, 2));
    CHECK_FALSE(o.pair_query(1, 1));
    CHECK(o.stats().pair == 3);
    CHECK(o.stats().total() == 3);
}

TEST_CASE("estimator query accounting: uniform=r, degree=r+q, neighbor=q, pair=0") {
    const Graph g = make_er(200, 0.05, 4);
    for (const auto [r, q] : {std::pair<std::uint64_t, std::uint64_t>{1, 1}, {7, 19}, {50, 3}}) {
        QueryOracle o(g, 21u);
        estimate_once(o, r, q, 2);
        CHECK(o.stats().uniform_vertex == r);
        CHECK(o.stats().degree == r + q);
        CHECK(o.stats().neighbor == q);
        CHECK(o.stats().pair == 0);
    }
}

TEST_CASE("query budget: truncation throws past the limit") {
    const Graph g = make_er(100, 0.1, 2);
    QueryOracle o(g, 5u);
    o.set_budget(10);
    for (int i = 0; i < 10; ++i) o.random_vertex();
    CHECK_THROWS_AS(o.random_vertex(), QueryBudgetExhausted);
    CHECK(o.stats().total() == 10);
}
