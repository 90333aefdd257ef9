#include "degmom/analysis.hpp"

#include "degmom/estimator.hpp"

#include "support.hpp"

#include <doctest.h>

using namespace degmom;
using namespace testsupport;

TEST_CASE("check_conditions: star K_{1,4} vertex threshold sits exactly at 450") {
    const Graph star = make_star(4);
    // 30 * 5 * 100 / (0.25 * (1/3) * 400) = 450
    const auto pass = check_conditions(star, 2, 0.5, 1.0 / 3.0, 450, 1);
    CHECK(pass.vertex_ok);
    CHECK(static_cast<double>(pass.vertex_condition_rhs) == doctest::Approx(450.0));
    const auto fail = check_conditions(star, 2, 0.5, 1.0 / 3.0, 449, 1);
    CHECK_FALSE(fail.vertex_ok);
}

TEST_CASE("check_conditions: K3 edge threshold at s=1") {
    const Graph k3 = make_clique(3);
    // 2000 * 3 * 6 / (eps^2 delta^3 * 36) = 1000 / (eps^2 delta^3)
    const auto rep = check_conditions(k3, 1, 0.5, 1.0 / 3.0, 1, 108000);
    CHECK(static_cast<double>(rep.edge_condition_rhs) == doctest::Approx(108000.0));
    CHECK(rep.edge_ok);
    CHECK_FALSE(check_conditions(k3, 1, 0.5, 1.0 / 3.0, 1, 107990).edge_ok);
}

TEST_CASE("check_conditions: monotone in r") {
    const Graph g = make_er(100, 0.08, 3);
    const auto base = check_conditions(g, 2, 0.25, 1.0 / 3.0, 1, 1);
    const auto big = static_cast<std::uint64_t>(base.vertex_condition_rhs) + 1;
    CHECK(check_conditions(g, 2, 0.25, 1.0 / 3.0, big, 1).vertex_ok);
}

TEST_CASE("sum-square bound: hand values") {
    const auto star = verify_sum_square_bound(make_star(4), 2);
    CHECK(static_cast<double>(star.lhs) == 100.0);
    CHECK(static_cast<double>(star.rhs) == doctest::Approx(589.4).epsilon(0.001));
    CHECK(star.ok);

    const Graph k2 = make_clique(2);
    const auto edge = verify_sum_square_bound(k2, 1);
    CHECK(static_cast<double>(edge.lhs) == 4.0);
    CHECK(static_cast<double>(edge.rhs) == doctest::Approx(4.0 * std::pow(2.0, 1.5)));
    CHECK(edge.ok);
}

TEST_CASE("degeneracy sum-square bound: star hand value") {
    const auto rep = verify_degeneracy_sum_square_bound(make_star(4), 2, 1);
    // 4 * 1 * 20^1.5 * log2(5)^2
    const double expected = 4.0 * std::pow(20.0, 1.5) * std::pow(std::log2(5.0), 2.0);
    CHECK(static_cast<double>(rep.rhs_over_c) == doctest::Approx(expected));
    CHECK(static_cast<double>(rep.ratio) == doctest::Approx(100.0 / expected));
    CHECK(static_cast<double>(rep.ratio) <= 4.0);
}

TEST_CASE("degeneracy sum-square bound: cliques stay under the constant") {
    for (std::uint64_t k : {2, 5, 20, 80}) {
        const Graph g = make_clique(k);
        for (int s = 1; s <= 3; ++s) {
            const auto rep = verify_degeneracy_sum_square_bound(g, s, core_number(g));
            CHECK(static_cast<double>(rep.ratio) <= 4.0);
        }
    }
}

TEST_CASE("norm inequalities: hand-checked graphs") {
    const auto k3 = verify_norm_inequalities(make_clique(3), 2);
    CHECK(k3.all_ok);  // mu3 = 24 <= 12^1.5 ~ 41.6
    const auto star = verify_norm_inequalities(make_star(4), 2);
    CHECK(star.all_ok);  // mu3 = 68 <= 20^1.5 ~ 89.4
    for (int s = 1; s <= 4; ++s) {
        CHECK(verify_norm_inequalities(make_pa(300, 3, 1), s).all_ok);
        CHECK(verify_norm_inequalities(make_er(200, 0.05, 2), s).all_ok);
    }
}

TEST_CASE("bucket decomposition: regular graphs occupy one degree bucket") {
    const auto b = bucket_decomposition(make_cycle(32), 2, 2);
    std::size_t nonempty = 0;
    for (const auto& bucket : b.u_buckets) nonempty += !bucket.empty();
    CHECK(nonempty == 1);
    CHECK(b.u_buckets[1].size() == 32);  // degree 2 lands in (1, 2]
}

TEST_CASE("bucket decomposition: star boundaries") {
    const auto b = bucket_decomposition(make_star(4), 2, 1);
    CHECK(b.u_buckets[0].size() == 4);  // leaves, degree 1
    CHECK(b.u_buckets[2] == std::vector<VertexId>{0});  // center, degree 4 in (2,4]
    CHECK(b.u_buckets[1].empty());
}

TEST_CASE("bucket decomposition: cells partition the vertex set for every i") {
    const Graph g = make_pa(300, 3, 5);
    const auto b = bucket_decomposition(g, 2, core_number(g));
    for (std::size_t i = 0; i < b.i_count(); ++i) {
        std::uint64_t total = 0;
        for (const auto& cell : b.cells[i]) total += cell.v_size;
        CHECK(total == g.vertex_count());
    }
    CHECK(b.claim_applicable);
    CHECK(b.claim_violations == 0);
    CHECK(b.u_hat_violations == 0);
}

TEST_CASE("bucket decomposition: claim checked across mixed graphs") {
    const std::vector<Graph> graphs = {make_star(100), make_clique(12), make_er(400, 0.03, 7),
                                       make_pa(500, 2, 8), make_star_plus_path(400, 50)};
    for (const auto& g : graphs) {
        for (int s = 1; s <= 3; ++s) {
            const auto b = bucket_decomposition(g, s, std::max<std::uint32_t>(1, core_number(g)));
            CHECK(b.claim_applicable);
            CHECK(b.claim_violations == 0);
            CHECK(b.u_hat_violations == 0);
        }
    }
}

TEST_CASE("vertex-sample lemma: the three typicality bounds hold together often enough") {
    const Graph g = make_er(400, 0.03, 21);
    const int s = 2;
    const double eps = 0.6, delta = 0.5;
    const WeightProfile prof = weight_profile(g, s);
    const double m_tot = to_double(prof.total);
    const double mu_ts = to_double(prof.mu_2s_minus_1);
    const auto n = static_cast<double>(g.vertex_count());
    const auto m_edges = static_cast<double>(g.edge_count());

    // r at the vertex-condition threshold
    const auto cond = check_conditions(g, s, eps, delta, 1, 1);
    const auto r = static_cast<std::uint64_t>(std::ceil(static_cast<double>(cond.vertex_condition_rhs)));
    REQUIRE(r >= 1);

    // per-vertex weight and forward squared-weight sums, test-side
    std::vector<double> wt(g.vertex_count()), wsq(g.vertex_count());
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        wt[v] = to_double(prof.vertex_weight[v]);
        double acc = 0;
        for (VertexId u : g.neighbors(v)) {
            const double w = to_double(oracle_edge_weight(g, v, u, s));
            acc += w * w;
        }
        wsq[v] = acc;
    }

    Rng rng(99);
    const int resamples = 10000;
    int all_hold = 0;
    for (int t = 0; t < resamples; ++t) {
        double wt_r = 0, d_r = 0, wsq_r = 0;
        for (std::uint64_t i = 0; i < r; ++i) {
            const auto v = static_cast<VertexId>(rng.below(g.vertex_count()));
            wt_r += wt[v];
            d_r += g.degree(v);
            wsq_r += wsq[v];
        }
        const double scale = static_cast<double>(r) / n;
        const bool a = wt_r >= (1 - eps / 2) * scale * m_tot && wt_r <= (1 + eps / 2) * scale * m_tot;
        const bool b = d_r <= (12.0 / delta) * scale * m_edges;
        const bool c = wsq_r <= (18.0 / delta) * scale * mu_ts;
        all_hold += a && b && c;
    }
    const double frac = all_hold / static_cast<double>(resamples);
    const double slack = 3 * std::sqrt(0.25 / resamples);
    CHECK(frac >= 1 - delta / 2 - slack);
}
