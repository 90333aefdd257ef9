#pragma once

#include "degmom/bigint.hpp"
#include "degmom/generators.hpp"
#include "degmom/graph.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <vector>

namespace testsupport {

using degmom::BigInt;
using degmom::Edge;
using degmom::Graph;
using degmom::VertexId;
using Rational = boost::multiprecision::cpp_rational;

// Independent re-statement of the edge weight used all over the tests: the
// forward direction of the degree order carries d_v^(s-1) + d_u^(s-1).
inline BigInt oracle_edge_weight(const Graph& g, VertexId v, VertexId u, int s) {
    const std::uint32_t dv = g.degree(v), du = g.degree(u);
    if (dv < du || (dv == du && v < u)) {
        return degmom::big_pow(dv, static_cast<unsigned>(s - 1)) +
               degmom::big_pow(du, static_cast<unsigned>(s - 1));
    }
    return 0;
}

// Exact full outcome tree of a single-vertex, single-draw estimate: pick v
// uniformly, then a uniform neighbor u; the run returns d_v * wt(v, u)
// (or 0 for isolated v). Exact rational expectation.
inline Rational enumerate_r1_q1_expectation(const Graph& g, int s) {
    const std::uint64_t n = g.vertex_count();
    Rational total = 0;
    for (std::uint64_t vi = 0; vi < n; ++vi) {
        const auto v = static_cast<VertexId>(vi);
        const std::uint32_t dv = g.degree(v);
        if (dv == 0) continue;  // the run returns 0
        for (VertexId u : g.neighbors(v)) {
            const Rational p_outcome = Rational(1, n) * Rational(1, dv);
            const BigInt x = BigInt(dv) * oracle_edge_weight(g, v, u, s);
            total += p_outcome * Rational(x);
        }
    }
    return total;
}

// Exact distribution of the same run as a sorted multiset of
// (probability, value) pairs; isolated picks collapse into (k/n, 0).
inline std::vector<std::pair<Rational, Rational>> enumerate_r1_q1_distribution(const Graph& g,
                                                                               int s) {
    const std::uint64_t n = g.vertex_count();
    std::vector<std::pair<Rational, Rational>> outcomes;
    Rational zero_mass = 0;
    for (std::uint64_t vi = 0; vi < n; ++vi) {
        const auto v = static_cast<VertexId>(vi);
        const std::uint32_t dv = g.degree(v);
        if (dv == 0) {
            zero_mass += Rational(1, n);
            continue;
        }
        for (VertexId u : g.neighbors(v)) {
            const BigInt x = BigInt(dv) * oracle_edge_weight(g, v, u, s);
            if (x == 0) {
                zero_mass += Rational(1, n) * Rational(1, dv);
            } else {
                outcomes.emplace_back(Rational(1, n) * Rational(1, dv), Rational(x));
            }
        }
    }
    if (zero_mass != 0) outcomes.emplace_back(zero_mass, Rational(0));
    std::sort(outcomes.begin(), outcomes.end(),
              [](const auto& a, const auto& b) { return a.second != b.second ? a.second < b.second
                                                                             : a.first < b.first; });
    // merge equal values
    std::vector<std::pair<Rational, Rational>> merged;
    for (const auto& [p, x] : outcomes) {
        if (!merged.empty() && merged.back().second == x) {
            merged.back().first += p;
        } else {
            merged.emplace_back(p, x);
        }
    }
    return merged;
}

// Exact expectation of the uniform-directed-edge variant with one draw.
inline Rational enumerate_edge_sample_expectation(const Graph& g, int s) {
    const std::uint64_t n = g.vertex_count();
    const std::uint64_t two_m = 2 * g.edge_count();
    if (two_m == 0) return 0;
    Rational total = 0;
    for (std::uint64_t vi = 0; vi < n; ++vi) {
        const auto v = static_cast<VertexId>(vi);
        for (VertexId u : g.neighbors(v)) {
            // X = (1/n) * 2m * wt(v,u), drawn with probability 1/(2m)
            total += Rational(1, two_m) * Rational(BigInt(two_m) * oracle_edge_weight(g, v, u, s), n);
        }
    }
    return total;
}

struct MeanStats {
    double mean = 0;
    double stddev = 0;
    double stderr_mean = 0;
};

inline MeanStats mean_stats(const std::vector<double>& xs) {
    MeanStats st;
    if (xs.empty()) return st;
    double sum = 0;
    for (double x : xs) sum += x;
    st.mean = sum / static_cast<double>(xs.size());
    double ss = 0;
    for (double x : xs) ss += (x - st.mean) * (x - st.mean);
    st.stddev = xs.size() > 1 ? std::sqrt(ss / static_cast<double>(xs.size() - 1)) : 0.0;
    st.stderr_mean = st.stddev / std::sqrt(static_cast<double>(xs.size()));
    return st;
}

// small named graphs used across the suite
inline Graph make_path(std::uint64_t n) {
    return degmom::generate({degmom::Family::path, {{"n", double(n)}}, 0}).graph;
}
inline Graph make_cycle(std::uint64_t n) {
    return degmom::generate({degmom::Family::cycle, {{"n", double(n)}}, 0}).graph;
}
inline Graph make_star(std::uint64_t leaves) {
    return degmom::generate({degmom::Family::star, {{"k", double(leaves)}}, 0}).graph;
}
inline Graph make_clique(std::uint64_t k) {
    return degmom::generate({degmom::Family::clique, {{"k", double(k)}}, 0}).graph;
}
inline Graph make_er(std::uint64_t n, double p, std::uint64_t seed) {
    return degmom::generate({degmom::Family::erdos_renyi, {{"n", double(n)}, {"p", p}}, seed}).graph;
}
inline Graph make_pa(std::uint64_t n, std::uint64_t m0, std::uint64_t seed) {
    return degmom::generate(
               {degmom::Family::preferential_attachment, {{"n", double(n)}, {"m0", double(m0)}}, seed})
        .graph;
}

// star K_{1,hub} whose center also bridges into a path over the remaining
// vertices; a tree with one heavy hub
inline Graph make_star_plus_path(std::uint64_t n, std::uint64_t hub) {
    std::vector<Edge> edges;
    for (std::uint64_t i = 1; i <= hub; ++i) edges.emplace_back(0, static_cast<VertexId>(i));
    if (hub + 1 < n) edges.emplace_back(0, static_cast<VertexId>(hub + 1));
    for (std::uint64_t i = hub + 1; i + 1 < n; ++i) {
        edges.emplace_back(static_cast<VertexId>(i), static_cast<VertexId>(i + 1));
    }
    return degmom::build_graph(edges, n);
}

}  // namespace testsupport
