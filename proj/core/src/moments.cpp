#include "degmom/moments.hpp"

#include <stdexcept>
#include <string>

namespace degmom {

namespace {

// d^(s-1) for every vertex, computed once; degrees repeat heavily so this is
// the only place big-int powers are taken.
std::vector<BigInt> degree_powers(const Graph& g, unsigned exp) {
    const std::uint64_t n = g.vertex_count();
    std::vector<BigInt> p(n);
    for (std::uint64_t v = 0; v < n; ++v) p[v] = big_pow(g.degree(static_cast<VertexId>(v)), exp);
    return p;
}

}  // namespace

WeightProfile weight_profile(const Graph& g, int s) {
    if (s < 1) throw std::invalid_argument("weight_profile: s must be >= 1");
    const std::uint64_t n = g.vertex_count();
    const auto pow_s1 = degree_powers(g, static_cast<unsigned>(s - 1));

    WeightProfile p;
    p.s = s;
    p.vertex_weight.assign(n, BigInt(0));
    for (std::uint64_t vi = 0; vi < n; ++vi) {
        const auto v = static_cast<VertexId>(vi);
        std::uint32_t out_deg = 0;
        BigInt wt = 0;
        for (VertexId u : g.neighbors(v)) {
            if (precedes(g, v, u)) {
                wt += pow_s1[v] + pow_s1[u];
                ++out_deg;
            }
        }
        p.vertex_weight[vi] = wt;
        p.total += wt;
        p.sum_squares += wt * wt;
        p.max_out_degree = std::max(p.max_out_degree, out_deg);
        p.mu_2s_minus_1 += big_pow(g.degree(v), static_cast<unsigned>(2 * s - 1));
    }
    return p;
}

BigInt edge_weight(const Graph& g, VertexId v, VertexId u, int s) {
    if (s < 1) throw std::invalid_argument("edge_weight: s must be >= 1");
    if (!g.has_edge(v, u)) {
        throw std::invalid_argument("edge_weight: vertices " + std::to_string(v) + " and " +
                                    std::to_string(u) + " are not adjacent");
    }
    if (!precedes(g, v, u)) return 0;
    const auto e = static_cast<unsigned>(s - 1);
    return big_pow(g.degree(v), e) + big_pow(g.degree(u), e);
}

MomentResult exact_moment(const Graph& g, int s) {
    if (s < 1) throw std::invalid_argument("exact_moment: s must be >= 1");
    const std::uint64_t n = g.vertex_count();
    BigInt total = 0;
    for (std::uint64_t v = 0; v < n; ++v) {
        total += big_pow(g.degree(static_cast<VertexId>(v)), static_cast<unsigned>(s));
    }
    return {total, n == 0 ? 0.0 : to_double(total) / static_cast<double>(n)};
}

bool verify_alpha_moment_bound(const Graph& g, int s) {
    const auto core = core_number(g);
    const auto m = exact_moment(g, s);
    return big_pow(core, static_cast<unsigned>(s + 1)) <= m.total;
}

}  // namespace degmom
