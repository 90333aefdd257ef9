#pragma once

#include "degmom/graph.hpp"
#include "degmom/oracle.hpp"
#include "degmom/rng.hpp"

#include <optional>
#include <vector>

namespace degmom {

struct EstimatorConfig {
    int s = 1;
    double eps = 0.25;
    double delta = 1.0 / 3.0;
    std::optional<std::uint64_t> alpha;  // degeneracy upper bound, if known

    // Planning constants. c_r and c_q scale the vertex and edge sample sizes;
    // c_t scales the median-repetition count of the geometric search.
    // c_vertex is the vertex-condition constant; c_arb scales the log^2(n)
    // term of the degeneracy-aware vertex plan (coefficient c_vertex * c_arb,
    // which equals c_r at the defaults).
    double c_r = 120.0;
    double c_q = 1000.0;
    double c_t = 4.0;
    double c_vertex = 30.0;
    double c_arb = 4.0;

    void validate() const;  // throws std::invalid_argument
};

struct Plan {
    std::uint64_t r = 1;
    std::uint64_t q = 1;
    bool mhat_clamped = false;  // the moment guess was < 1 and got clamped
};

// Sample sizes for a target accuracy given a guess M_hat of the unnormalized
// moment. The degeneracy-aware plan is componentwise <= the general plan.
Plan plan_general(std::uint64_t n, double m_hat, const EstimatorConfig& cfg);
Plan plan_degeneracy(std::uint64_t n, double m_hat, std::uint64_t alpha, const EstimatorConfig& cfg);

// Planner-driven runs costing more than this many queries fall back to an
// exact degree sweep; at small n the theory constants routinely exceed n.
constexpr std::uint64_t kWorkloadCapFactor = 50;
inline std::uint64_t workload_cap(std::uint64_t n) {
    const std::uint64_t base = n < 1 ? 1 : n;
    return base > ~std::uint64_t{0} / kWorkloadCapFactor ? ~std::uint64_t{0}
                                                         : kWorkloadCapFactor * base;
}

// Multiset of sampled vertices with their degrees and a degree-proportional
// member sampler (exact integer alias table; cumulative binary search when
// the alias fixed-point would overflow). Members of degree 0 are never drawn.
class RSample {
public:
    static RSample collect(QueryOracle& oracle, std::uint64_t r);

    std::uint64_t d_r() const { return d_r_; }
    std::size_t size() const { return members_.size(); }
    VertexId member(std::size_t j) const { return members_[j]; }
    std::uint32_t member_degree(std::size_t j) const { return degrees_[j]; }

    // index j with probability degrees[j] / d_r; requires d_r > 0
    std::size_t draw_index(Rng& rng) const;

    // exposed for structural tests
    bool uses_alias() const { return !alias_.empty(); }
    std::uint64_t alias_units(std::size_t j) const;  // == degrees[j] * size() when alias in use

private:
    void build_sampler();

    std::vector<VertexId> members_;
    std::vector<std::uint32_t> degrees_;
    std::uint64_t d_r_ = 0;

    struct Slot {
        std::uint64_t cut;
        std::uint32_t alias;
    };
    std::vector<Slot> alias_;          // slot k: own member below cut, else alias
    std::vector<std::uint64_t> cum_;   // fallback: cumulative degrees
};

enum class EstimateMode {
    general,
    degeneracy,
    search_general,
    search_degeneracy,
    s1_threshold,
    edge_samples,
};
const char* to_string(EstimateMode mode);

struct GuessStep {
    double guess;
    double median_z;
    bool stopped;
};

struct EstimateReport {
    double estimate = 0.0;
    std::uint64_t r = 0;
    std::uint64_t q = 0;
    QueryStats stats;
    EstimateMode mode = EstimateMode::general;
    bool exceeded_sublinear_budget = false;
    bool truncated = false;
    bool mhat_clamped = false;
    std::vector<GuessStep> guess_trace;
};

// One pass of the core estimator: sample r uniform vertices, then q
// degree-proportional edge draws oriented by the degree order; returns
// X = (1/r) * (d_R/q) * sum of edge weights. E[X] equals the s-th degree
// moment mean for every r, q >= 1.
double estimate_once(QueryOracle& oracle, std::uint64_t r, std::uint64_t q, int s);

struct BudgetedEstimate {
    double value = 0.0;
    bool truncated = false;
};
// Same pass under the oracle's hard query budget; on exhaustion returns the
// partial estimate (mean over completed draws).
BudgetedEstimate estimate_once_budgeted(QueryOracle& oracle, std::uint64_t r, std::uint64_t q, int s);

// Plans from cfg (degeneracy-aware when cfg.alpha is set) and runs once.
EstimateReport estimate_planned(QueryOracle& oracle, double m_hat, const EstimatorConfig& cfg);

// Guess-halving search for the unknown moment: start the guess at n^(s+1),
// per guess run ceil(c_t*log2(s*log2 n)) estimates at the tripled plan and
// take the median Z; stop when n*Z >= guess (floor: guess <= 1). Requires
// n >= 2. Terminates within (s+1)*log2(n) + 1 guesses.
EstimateReport geometric_search(QueryOracle& oracle, const EstimatorConfig& cfg);

// Average-degree variant: weight 2 only when the sampled lower endpoint has
// degree at most 2*alpha/eps, giving a one-sided bias
// E[X] in [(1-eps)*mu1, mu1] on graphs of degeneracy <= alpha.
EstimateReport estimate_s1_threshold(QueryOracle& oracle, std::uint64_t alpha, double eps,
                                     double delta, double m1_hat);
double estimate_s1_threshold_run(QueryOracle& oracle, std::uint64_t alpha, double eps,
                                 std::uint64_t r, std::uint64_t q);

// Stronger-model variant with uniform random edges: the core formula with
// R = V, r = n, d_R = 2m. Needs full graph access.
double estimate_with_edge_samples(const Graph& g, int s, std::uint64_t q, Rng rng);

// Exact mean moment through the oracle (n degree queries); the workload-cap
// fallback and an honest baseline.
double exact_moment_via_oracle(QueryOracle& oracle, int s);

}  // namespace degmom
