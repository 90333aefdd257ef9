#include "degmom/estimator.hpp"

#include "degmom/bigint.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace degmom {

namespace {

// Guarded ceiling: a plan value sitting one ulp above an integer (pow/1/3
// roundoff) must not bump the sample size by one.
std::uint64_t ceil_count(double x) {
    if (!(x > 0.0)) return 1;
    const double g = std::ceil(x * (1.0 - 1e-12));
    if (g <= 1.0) return 1;
    if (g >= 9.0e18) return ~std::uint64_t{0};
    return static_cast<std::uint64_t>(g);
}

double general_r_term(std::uint64_t n, double m, const EstimatorConfig& cfg) {
    return cfg.c_r * static_cast<double>(n) / std::pow(m, 1.0 / (cfg.s + 1));
}

// the two M-only terms of the edge plan; shared between both planners so the
// degeneracy plan is componentwise <= the general plan bit-for-bit
double general_q_min(std::uint64_t n, double m, const EstimatorConfig& cfg) {
    const double s = cfg.s;
    const double nn = static_cast<double>(n);
    const double t1 = std::pow(nn, 1.0 - 1.0 / s);
    const double t2 = std::pow(nn, s - 1.0 / s) / std::pow(m, 1.0 - 1.0 / s);
    return std::min(t1, t2);
}

double median_of(std::vector<double> xs) {
    std::sort(xs.begin(), xs.end());
    const std::size_t k = xs.size();
    return k % 2 == 1 ? xs[k / 2] : 0.5 * (xs[k / 2 - 1] + xs[k / 2]);
}

QueryStats stats_since(const QueryStats& before, const QueryStats& after) {
    return {after.uniform_vertex - before.uniform_vertex, after.degree - before.degree,
            after.neighbor - before.neighbor, after.pair - before.pair};
}

}  // namespace

void EstimatorConfig::validate() const {
    if (s < 1 || s > 32) throw std::invalid_argument("EstimatorConfig: s must be in [1, 32]");
    if (!(eps > 0.0 && eps < 1.0)) throw std::invalid_argument("EstimatorConfig: eps must be in (0,1)");
    if (!(delta > 0.0 && delta < 1.0)) throw std::invalid_argument("EstimatorConfig: delta must be in (0,1)");
    if (alpha && *alpha < 1) throw std::invalid_argument("EstimatorConfig: alpha must be >= 1");
    if (c_r < 1 || c_q < 1 || c_t < 1 || c_vertex < 1 || c_arb < 1) {
        throw std::invalid_argument("EstimatorConfig: constants must be >= 1");
    }
}

Plan plan_general(std::uint64_t n, double m_hat, const EstimatorConfig& cfg) {
    cfg.validate();
    Plan p;
    p.mhat_clamped = m_hat < 1.0;
    const double m = std::max(m_hat, 1.0);
    const double eps2d = cfg.eps * cfg.eps * cfg.delta;
    const double qc = cfg.c_q / (cfg.eps * cfg.eps * cfg.delta * cfg.delta * cfg.delta);
    p.r = ceil_count(general_r_term(n, m, cfg) / eps2d);
    p.q = ceil_count(qc * general_q_min(n, m, cfg));
    return p;
}

Plan plan_degeneracy(std::uint64_t n, double m_hat, std::uint64_t alpha, const EstimatorConfig& cfg) {
    cfg.validate();
    if (alpha < 1) throw std::invalid_argument("plan_degeneracy: alpha must be >= 1");
    Plan p;
    p.mhat_clamped = m_hat < 1.0;
    const double m = std::max(m_hat, 1.0);
    const double s = cfg.s;
    const double nn = static_cast<double>(n);
    const double log2n = n >= 2 ? std::log2(nn) : 0.0;

    const double r_deg_term = cfg.c_vertex * cfg.c_arb * std::pow(2.0, s) * nn * log2n * log2n *
                              std::pow(static_cast<double>(alpha) / m, 1.0 / s);
    const double eps2d = cfg.eps * cfg.eps * cfg.delta;
    p.r = ceil_count(std::min(general_r_term(n, m, cfg), r_deg_term) / eps2d);

    const double a1 = nn * static_cast<double>(alpha) / std::pow(m, 1.0 / s);
    const double a2 = std::pow(nn, s) * static_cast<double>(alpha) / m;
    const double qc = cfg.c_q / (cfg.eps * cfg.eps * cfg.delta * cfg.delta * cfg.delta);
    p.q = ceil_count(qc * std::min(std::min(a1, a2), general_q_min(n, m, cfg)));
    return p;
}

RSample RSample::collect(QueryOracle& oracle, std::uint64_t r) {
    RSample s;
    s.members_.reserve(r);
    s.degrees_.reserve(r);
    for (std::uint64_t i = 0; i < r; ++i) {
        const VertexId v = oracle.random_vertex();
        const std::uint32_t d = oracle.degree_of(v);
        s.members_.push_back(v);
        s.degrees_.push_back(d);
        s.d_r_ += d;
    }
    if (s.d_r_ > 0) s.build_sampler();
    return s;
}

void RSample::build_sampler() {
    const std::uint64_t r = members_.size();
    // exact alias table: r slots of capacity d_R units, member j owns
    // degrees[j] * r units in total, so the marginal is degrees[j]/d_R exactly
    if (d_r_ <= (~std::uint64_t{0}) / r) {
        const std::uint64_t capacity = d_r_;
        std::vector<std::uint64_t> rem(r);
        for (std::uint64_t j = 0; j < r; ++j) rem[j] = static_cast<std::uint64_t>(degrees_[j]) * r;

        alias_.assign(r, Slot{capacity, 0});
        std::vector<std::uint32_t> small, large;
        for (std::uint64_t j = 0; j < r; ++j) {
            (rem[j] < capacity ? small : large).push_back(static_cast<std::uint32_t>(j));
        }
        while (!small.empty() && !large.empty()) {
            const std::uint32_t j = small.back();
            small.pop_back();
            const std::uint32_t l = large.back();
            alias_[j] = Slot{rem[j], l};
            rem[l] -= capacity - rem[j];
            if (rem[l] < capacity) {
                large.pop_back();
                small.push_back(l);
            }
        }
        for (std::uint32_t l : large) alias_[l] = Slot{capacity, l};
        for (std::uint32_t j : small) alias_[j] = Slot{rem[j], j};  // only when rem == capacity
        return;
    }
    cum_.resize(r);
    std::uint64_t acc = 0;
    for (std::uint64_t j = 0; j < r; ++j) {
        acc += degrees_[j];
        cum_[j] = acc;
    }
}

std::size_t RSample::draw_index(Rng& rng) const {
    if (!alias_.empty()) {
        const std::size_t k = static_cast<std::size_t>(rng.below(alias_.size()));
        const std::uint64_t off = rng.below(d_r_);
        const Slot& s = alias_[k];
        return off < s.cut ? k : s.alias;
    }
    const std::uint64_t x = rng.below(d_r_);
    return static_cast<std::size_t>(
        std::upper_bound(cum_.begin(), cum_.end(), x) - cum_.begin());
}

std::uint64_t RSample::alias_units(std::size_t j) const {
    // units member j owns across all slots: its own slot below the cut plus
    // the above-cut remainders of slots aliased to it
    std::uint64_t units = alias_[j].cut;
    for (std::size_t k = 0; k < alias_.size(); ++k) {
        if (k != j && alias_[k].alias == j) units += d_r_ - alias_[k].cut;
    }
    return units;
}

const char* to_string(EstimateMode mode) {
    switch (mode) {
        case EstimateMode::general: return "general";
        case EstimateMode::degeneracy: return "degeneracy";
        case EstimateMode::search_general: return "search-general";
        case EstimateMode::search_degeneracy: return "search-degeneracy";
        case EstimateMode::s1_threshold: return "s1-threshold";
        case EstimateMode::edge_samples: return "edge-samples";
    }
    return "?";
}

double estimate_once(QueryOracle& oracle, std::uint64_t r, std::uint64_t q, int s) {
    if (r < 1 || q < 1) throw std::invalid_argument("estimate_once: r and q must be >= 1");
    const RSample sample = RSample::collect(oracle, r);
    if (sample.d_r() == 0) return 0.0;

    const auto exp = static_cast<unsigned>(s - 1);
    double sum = 0.0;
    for (std::uint64_t i = 0; i < q; ++i) {
        const std::size_t j = sample.draw_index(oracle.rng());
        const VertexId v = sample.member(j);
        const std::uint32_t dv = sample.member_degree(j);
        const VertexId u = oracle.random_neighbor(v);
        const std::uint32_t du = oracle.degree_of(u);
        if (dv < du || (dv == du && v < u)) {
            sum += ipow(dv, exp) + ipow(du, exp);
        }
    }
    return (1.0 / static_cast<double>(r)) * (static_cast<double>(sample.d_r()) / static_cast<double>(q)) * sum;
}

BudgetedEstimate estimate_once_budgeted(QueryOracle& oracle, std::uint64_t r, std::uint64_t q, int s) {
    if (r < 1 || q < 1) throw std::invalid_argument("estimate_once_budgeted: r and q must be >= 1");
    BudgetedEstimate out;
    const auto exp = static_cast<unsigned>(s - 1);
    double sum = 0.0;
    std::uint64_t d_r = 0;
    std::uint64_t done = 0;
    try {
        const RSample sample = RSample::collect(oracle, r);
        d_r = sample.d_r();
        if (d_r == 0) return out;
        for (std::uint64_t i = 0; i < q; ++i) {
            const std::size_t j = sample.draw_index(oracle.rng());
            const VertexId v = sample.member(j);
            const std::uint32_t dv = sample.member_degree(j);
            const VertexId u = oracle.random_neighbor(v);
            const std::uint32_t du = oracle.degree_of(u);
            if (dv < du || (dv == du && v < u)) sum += ipow(dv, exp) + ipow(du, exp);
            ++done;
        }
    } catch (const QueryBudgetExhausted&) {
        out.truncated = true;
    }
    // partial estimate: mean over the draws that completed (a truncation
    // inside the R phase leaves done == 0 and the value at 0)
    if (d_r > 0 && done > 0) {
        out.value = (1.0 / static_cast<double>(r)) *
                    (static_cast<double>(d_r) / static_cast<double>(done)) * sum;
    }
    return out;
}

double exact_moment_via_oracle(QueryOracle& oracle, int s) {
    const std::uint64_t n = oracle.n();
    if (n == 0) return 0.0;
    long double total = 0.0L;
    for (std::uint64_t v = 0; v < n; ++v) {
        total += static_cast<long double>(ipow(oracle.degree_of(static_cast<VertexId>(v)),
                                               static_cast<unsigned>(s)));
    }
    return static_cast<double>(total / static_cast<long double>(n));
}

EstimateReport estimate_planned(QueryOracle& oracle, double m_hat, const EstimatorConfig& cfg) {
    cfg.validate();
    const std::uint64_t n = oracle.n();
    const Plan plan = cfg.alpha ? plan_degeneracy(n, m_hat, *cfg.alpha, cfg)
                                : plan_general(n, m_hat, cfg);
    EstimateReport rep;
    rep.mode = cfg.alpha ? EstimateMode::degeneracy : EstimateMode::general;
    rep.r = plan.r;
    rep.q = plan.q;
    rep.mhat_clamped = plan.mhat_clamped;

    const QueryStats before = oracle.stats();
    const std::uint64_t cap = workload_cap(n);
    if (plan.r > cap || plan.q > cap) {
        rep.exceeded_sublinear_budget = true;
        rep.estimate = exact_moment_via_oracle(oracle, cfg.s);
    } else {
        rep.estimate = estimate_once(oracle, plan.r, plan.q, cfg.s);
    }
    rep.stats = stats_since(before, oracle.stats());
    return rep;
}

EstimateReport geometric_search(QueryOracle& oracle, const EstimatorConfig& cfg) {
    cfg.validate();
    const std::uint64_t n = oracle.n();
    if (n < 2) throw std::invalid_argument("geometric_search: needs n >= 2");

    EstimatorConfig inner = cfg;
    inner.delta = 1.0 / 3.0;

    const double nn = static_cast<double>(n);
    const std::uint64_t t = std::max<std::uint64_t>(
        1, static_cast<std::uint64_t>(std::ceil(cfg.c_t * std::log2(cfg.s * std::log2(nn)))));

    EstimateReport rep;
    rep.mode = cfg.alpha ? EstimateMode::search_degeneracy : EstimateMode::search_general;
    const QueryStats before = oracle.stats();
    const std::uint64_t cap = workload_cap(n);

    double guess = std::pow(nn, cfg.s + 1);
    double z = 0.0;
    for (;;) {
        const Plan plan = cfg.alpha ? plan_degeneracy(n, guess, *cfg.alpha, inner)
                                    : plan_general(n, guess, inner);
        if (plan.r > cap || plan.q > cap) {
            rep.exceeded_sublinear_budget = true;
            rep.r = plan.r;
            rep.q = plan.q;
            rep.estimate = exact_moment_via_oracle(oracle, cfg.s);
            break;
        }
        std::vector<double> xs(t);
        for (std::uint64_t i = 0; i < t; ++i) {
            xs[i] = estimate_once(oracle, 3 * plan.r, 3 * plan.q, cfg.s);
        }
        z = median_of(std::move(xs));
        const bool stop = nn * z >= guess || guess <= 1.0;
        rep.guess_trace.push_back({guess, z, stop});
        if (stop) {
            rep.r = 3 * plan.r;
            rep.q = 3 * plan.q;
            rep.estimate = z;
            break;
        }
        guess /= 2.0;
    }
    rep.stats = stats_since(before, oracle.stats());
    return rep;
}

double estimate_s1_threshold_run(QueryOracle& oracle, std::uint64_t alpha, double eps,
                                 std::uint64_t r, std::uint64_t q) {
    if (r < 1 || q < 1) throw std::invalid_argument("estimate_s1_threshold_run: r and q must be >= 1");
    const double theta = 2.0 * static_cast<double>(alpha) / eps;
    const RSample sample = RSample::collect(oracle, r);
    if (sample.d_r() == 0) return 0.0;

    double sum = 0.0;
    for (std::uint64_t i = 0; i < q; ++i) {
        const std::size_t j = sample.draw_index(oracle.rng());
        const VertexId v = sample.member(j);
        const std::uint32_t dv = sample.member_degree(j);
        const VertexId u = oracle.random_neighbor(v);
        const std::uint32_t du = oracle.degree_of(u);
        if ((dv < du || (dv == du && v < u)) && static_cast<double>(dv) <= theta) {
            sum += 2.0;
        }
    }
    return (1.0 / static_cast<double>(r)) * (static_cast<double>(sample.d_r()) / static_cast<double>(q)) * sum;
}

EstimateReport estimate_s1_threshold(QueryOracle& oracle, std::uint64_t alpha, double eps,
                                     double delta, double m1_hat) {
    EstimatorConfig cfg;
    cfg.s = 1;
    cfg.eps = eps;
    cfg.delta = delta;
    cfg.alpha = alpha;
    cfg.validate();

    const std::uint64_t n = oracle.n();
    const double m1 = std::max(m1_hat, 1.0);
    const std::uint64_t r =
        ceil_count(cfg.c_r * static_cast<double>(n) * static_cast<double>(alpha) /
                   (eps * eps * eps * delta * m1));
    const std::uint64_t q = plan_degeneracy(n, m1_hat, alpha, cfg).q;

    EstimateReport rep;
    rep.mode = EstimateMode::s1_threshold;
    rep.r = r;
    rep.q = q;
    rep.mhat_clamped = m1_hat < 1.0;

    const QueryStats before = oracle.stats();
    const std::uint64_t cap = workload_cap(n);
    if (r > cap || q > cap) {
        rep.exceeded_sublinear_budget = true;
        rep.estimate = exact_moment_via_oracle(oracle, 1);
    } else {
        rep.estimate = estimate_s1_threshold_run(oracle, alpha, eps, r, q);
    }
    rep.stats = stats_since(before, oracle.stats());
    return rep;
}

double estimate_with_edge_samples(const Graph& g, int s, std::uint64_t q, Rng rng) {
    if (q < 1) throw std::invalid_argument("estimate_with_edge_samples: q must be >= 1");
    const std::uint64_t n = g.vertex_count();
    const std::uint64_t two_m = 2 * g.edge_count();
    if (n == 0 || two_m == 0) return 0.0;

    const auto offsets = g.offsets();
    const auto exp = static_cast<unsigned>(s - 1);
    double sum = 0.0;
    for (std::uint64_t i = 0; i < q; ++i) {
        // slot x of the adjacency array is a uniform directed edge (v, u)
        const std::uint64_t x = rng.below(two_m);
        const auto v = static_cast<VertexId>(
            std::upper_bound(offsets.begin(), offsets.end(), x) - offsets.begin() - 1);
        const VertexId u = g.adjacency()[x];
        const std::uint32_t dv = g.degree(v);
        const std::uint32_t du = g.degree(u);
        if (dv < du || (dv == du && v < u)) sum += ipow(dv, exp) + ipow(du, exp);
    }
    return (1.0 / static_cast<double>(n)) * (static_cast<double>(two_m) / static_cast<double>(q)) * sum;
}

}  // namespace degmom
