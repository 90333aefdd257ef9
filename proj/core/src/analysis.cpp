#include "degmom/analysis.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace degmom {

namespace {

// tolerate one part in 10^9 of float roundoff when comparing an integer
// sample size against a real-valued threshold
constexpr long double kOkGuard = 1.0L - 1e-9L;

// U_i index for degree d >= 1: the i with d in (2^(i-1), 2^i], i.e. ceil(log2 d)
std::uint32_t degree_bucket(std::uint32_t d) {
    if (d <= 1) return 0;
    return static_cast<std::uint32_t>(std::bit_width(d - 1u));
}

// V_ij index given alpha: j = 0 for count <= alpha, else count in (2^(j-1)a, 2^j a]
std::uint32_t cell_bucket(std::uint64_t count, std::uint64_t alpha) {
    if (count <= alpha) return 0;
    std::uint32_t j = 1;
    std::uint64_t hi = 2 * alpha;
    while (count > hi) {
        ++j;
        hi *= 2;
    }
    return j;
}

}  // namespace

ConditionReport check_conditions(const Graph& g, int s, double eps, double delta,
                                 std::uint64_t r, std::uint64_t q,
                                 double c_vertex, double c_edge) {
    if (s < 1) throw std::invalid_argument("check_conditions: s must be >= 1");
    const WeightProfile p = weight_profile(g, s);
    const auto n = static_cast<long double>(g.vertex_count());
    const auto m = static_cast<long double>(g.edge_count());
    const long double m2 = to_long_double(p.total) * to_long_double(p.total);
    const auto e = static_cast<long double>(eps);
    const auto d = static_cast<long double>(delta);

    ConditionReport rep;
    rep.r_given = r;
    rep.q_given = q;
    if (m2 > 0) {
        rep.vertex_condition_rhs =
            static_cast<long double>(c_vertex) * n * to_long_double(p.sum_squares) / (e * e * d * m2);
        rep.edge_condition_rhs = static_cast<long double>(c_edge) * m *
                                 to_long_double(p.mu_2s_minus_1) / (e * e * d * d * d * m2);
    }
    rep.vertex_ok = static_cast<long double>(r) >= rep.vertex_condition_rhs * kOkGuard;
    rep.edge_ok = static_cast<long double>(q) >= rep.edge_condition_rhs * kOkGuard;
    return rep;
}

BoundCheck verify_sum_square_bound(const Graph& g, int s) {
    const WeightProfile p = weight_profile(g, s);
    const auto su = static_cast<unsigned>(s);
    BoundCheck out;
    out.lhs = to_long_double(p.sum_squares);
    out.rhs = 4.0L * std::pow(to_long_double(p.total), 2.0L - 1.0L / (su + 1));
    // lhs <= 4 * M^((2s+1)/(s+1))  <=>  lhs^(s+1) <= 4^(s+1) * M^(2s+1)
    out.ok = big_pow(p.sum_squares, su + 1) <= big_pow(BigInt(4), su + 1) * big_pow(p.total, 2 * su + 1);
    return out;
}

DegeneracyBoundCheck verify_degeneracy_sum_square_bound(const Graph& g, int s, std::uint64_t alpha) {
    if (alpha < 1) throw std::invalid_argument("verify_degeneracy_sum_square_bound: alpha >= 1");
    const WeightProfile p = weight_profile(g, s);
    const long double n = static_cast<long double>(g.vertex_count());
    const long double log2n = n >= 2 ? std::log2(n) : 0.0L;

    DegeneracyBoundCheck out;
    out.lhs = to_long_double(p.sum_squares);
    out.rhs_over_c = std::pow(2.0L, static_cast<long double>(s)) *
                     std::pow(static_cast<long double>(alpha), 1.0L / s) *
                     std::pow(to_long_double(p.total), 2.0L - 1.0L / s) * log2n * log2n;
    if (out.rhs_over_c > 0) {
        out.ratio = out.lhs / out.rhs_over_c;
    } else {
        out.ratio = out.lhs > 0 ? std::numeric_limits<long double>::infinity() : 0.0L;
    }
    return out;
}

NormInequalityReport verify_norm_inequalities(const Graph& g, int s) {
    if (s < 1) throw std::invalid_argument("verify_norm_inequalities: s must be >= 1");
    const WeightProfile p = weight_profile(g, s);
    const auto su = static_cast<unsigned>(s);
    const BigInt n = g.vertex_count();
    const BigInt two_m = 2 * BigInt(g.edge_count());
    const BigInt& m_tot = p.total;
    const BigInt& mu = p.mu_2s_minus_1;

    NormInequalityReport rep;
    // mu_{2s-1} <= M^((2s-1)/s)  <=>  mu^s <= M^(2s-1)
    rep.mu2s1_le_m_pow = big_pow(mu, su) <= big_pow(m_tot, 2 * su - 1);
    rep.mu2s1_le_n_pow_m = mu <= big_pow(n, su - 1) * m_tot;
    // 2m <= n^((s-1)/s) * M^(1/s)  <=>  (2m)^s <= n^(s-1) * M; equality at s=1
    rep.two_m_le_n_pow_m = s == 1 ? two_m == m_tot
                                  : big_pow(two_m, su) <= big_pow(n, su - 1) * m_tot;
    // both min-terms >= 2m * mu / M^2:
    //   n^(1-1/s)               <=>  n^(s-1) * M^(2s) >= (2m)^s * mu^s
    //   n^(s-1/s) / M^(1-1/s)   <=>  n^(s^2-1) * M^(s+1) >= (2m)^s * mu^s
    const BigInt rhs = big_pow(two_m, su) * big_pow(mu, su);
    const bool t1 = big_pow(n, su - 1) * big_pow(m_tot, 2 * su) >= rhs;
    const bool t2 = big_pow(n, su * su - 1) * big_pow(m_tot, su + 1) >= rhs;
    rep.edge_plan_combined = t1 && t2;
    rep.max_out_degree_ok = big_pow(p.max_out_degree, su + 1) <= m_tot;
    rep.all_ok = rep.mu2s1_le_m_pow && rep.mu2s1_le_n_pow_m && rep.two_m_le_n_pow_m &&
                 rep.edge_plan_combined && rep.max_out_degree_ok;
    return rep;
}

BucketDecomposition bucket_decomposition(const Graph& g, int s, std::uint64_t alpha) {
    if (s < 1) throw std::invalid_argument("bucket_decomposition: s must be >= 1");
    if (alpha < 1) throw std::invalid_argument("bucket_decomposition: alpha must be >= 1");

    const std::uint64_t n = g.vertex_count();
    const auto nn = static_cast<double>(n);
    const std::size_t i_count = n >= 2 ? static_cast<std::size_t>(std::ceil(std::log2(nn))) + 1 : 1;
    const double na = nn / static_cast<double>(alpha);
    const std::size_t j_count =
        (na > 1 ? static_cast<std::size_t>(std::ceil(std::log2(na))) : 0) + 1;

    BucketDecomposition out;
    out.s = s;
    out.alpha = alpha;
    out.total_moment = exact_moment(g, s).total;
    out.u_buckets.assign(i_count, {});
    out.cells.assign(i_count, std::vector<BucketDecomposition::Cell>(j_count));

    for (std::uint64_t vi = 0; vi < n; ++vi) {
        const auto v = static_cast<VertexId>(vi);
        if (g.degree(v) >= 1) out.u_buckets[degree_bucket(g.degree(v))].push_back(v);
    }

    // forward out-degrees into each U_i, then the cell assignment per (i, v)
    std::vector<std::uint64_t> out_counts(n * i_count, 0);
    for (std::uint64_t vi = 0; vi < n; ++vi) {
        const auto v = static_cast<VertexId>(vi);
        for (VertexId u : g.neighbors(v)) {
            if (precedes(g, v, u)) ++out_counts[vi * i_count + degree_bucket(g.degree(u))];
        }
    }
    out.cell_of.assign(i_count, std::vector<std::uint32_t>(n, 0));
    for (std::size_t i = 0; i < i_count; ++i) {
        for (std::uint64_t vi = 0; vi < n; ++vi) {
            const std::uint32_t j = cell_bucket(out_counts[vi * i_count + i], alpha);
            out.cell_of[i][vi] = j;
            auto& cell = out.cells[i][j];
            ++cell.v_size;
            cell.edge_count += out_counts[vi * i_count + i];
        }
    }

    // distinct U_i endpoints per cell, via one stamped sweep per (i, j)
    {
        std::vector<std::pair<std::uint64_t, VertexId>> hits;  // (i*j_count + j, target)
        for (std::uint64_t vi = 0; vi < n; ++vi) {
            const auto v = static_cast<VertexId>(vi);
            for (VertexId u : g.neighbors(v)) {
                if (!precedes(g, v, u)) continue;
                const std::uint32_t i = degree_bucket(g.degree(u));
                hits.emplace_back(static_cast<std::uint64_t>(i) * j_count + out.cell_of[i][vi], u);
            }
        }
        std::sort(hits.begin(), hits.end());
        hits.erase(std::unique(hits.begin(), hits.end()), hits.end());
        for (const auto& [key, u] : hits) {
            ++out.cells[key / j_count][key % j_count].u_hat_size;
        }
    }

    out.claim_applicable = alpha >= core_number(g);
    if (out.claim_applicable) {
        for (std::size_t i = 0; i < i_count; ++i) {
            for (std::size_t j = 2; j < j_count; ++j) {
                const auto& cell = out.cells[i][j];
                if (cell.v_size == 0) continue;
                // edge_count <= M * 2^-((i-1)(s-1)+j-1), exactly
                const std::int64_t e = (static_cast<std::int64_t>(i) - 1) * (s - 1) +
                                       static_cast<std::int64_t>(j) - 1;
                const bool ok = e >= 0
                    ? BigInt(cell.edge_count) << static_cast<unsigned>(e) <= out.total_moment
                    : BigInt(cell.edge_count) <= out.total_moment << static_cast<unsigned>(-e);
                if (!ok) ++out.claim_violations;
                if (cell.u_hat_size < cell.v_size) ++out.u_hat_violations;
            }
        }
    }
    return out;
}

}  // namespace degmom
