#pragma once

#include "degmom/estimator.hpp"
#include "degmom/generators.hpp"
#include "degmom/graph.hpp"

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace degmom {

struct AlphaPolicy {
    enum class Kind { none, automatic, given } kind = Kind::none;
    std::uint64_t value = 0;  // for Kind::given

    static AlphaPolicy none() { return {}; }
    static AlphaPolicy automatic() { return {Kind::automatic, 0}; }
    static AlphaPolicy given(std::uint64_t a) { return {Kind::given, a}; }
};

// How a run picks its sample sizes:
//   planned     planner from (m_hat, cfg), workload cap may fall back to exact
//   search      geometric search, no m_hat needed
//   s1          thresholded average-degree variant (needs alpha)
//   edge        edge-sample variant, q = c_q/(eps^2 delta^3) * m / M^(1/s),
//               clamped to the workload cap
//   conditions  r, q = ceilings of the two condition right-hand sides
//               computed from exact graph quantities
//   fixed       explicit r, q
struct ExperimentSpec {
    std::variant<std::string, GeneratorSpec> source;  // edge-list path or generator
    std::string label;                                // defaults from the source
    int s = 1;
    double eps = 0.25;
    double delta = 1.0 / 3.0;
    AlphaPolicy alpha;
    std::string mode = "planned";
    std::uint64_t trials = 1;
    std::uint64_t seed = 0;
    std::string out_csv;  // empty: no file written
    std::optional<double> m_hat;
    std::optional<std::uint64_t> r_fixed, q_fixed;
    bool timings = false;
    unsigned threads = 0;  // 0 = hardware concurrency
};

ExperimentSpec experiment_spec_from_json_text(const std::string& text);

struct ResultRow {
    std::string label;
    std::uint64_t n = 0, m = 0;
    int s = 1;
    double eps = 0;
    std::string alpha_used;  // "none" or a number
    std::string mode;
    std::uint64_t trial = 0;
    double estimate = 0;
    double mu_true = 0;
    std::optional<double> rel_error;  // defined when mu_true > 0
    std::uint64_t r = 0, q = 0;
    QueryStats stats;
    std::uint64_t guess_trace_len = 0;  // search modes only
    std::uint64_t seed = 0;
    std::optional<double> wall_ms;  // only recorded with timings on
    bool exceeded_sublinear_budget = false;
};

struct TrialSummary {
    double success_fraction = 0;  // within (1 +- eps) of the exact moment
    double mean_rel_error = 0;
    double median_rel_error = 0;
    double mean_queries = 0;
};

struct RunResult {
    std::vector<ResultRow> rows;
    TrialSummary summary;
    double mu_true = 0;
    std::uint64_t n = 0, m = 0;
    std::uint64_t alpha_used = 0;  // 0 when policy is none
};

// Runs spec.trials independent estimates with per-trial derived seeds, writes
// the CSV when out_csv is set, and returns rows in trial order (deterministic
// under any scheduling). The graph must be small enough for exact truth.
RunResult run_trials(const ExperimentSpec& spec);

void write_csv(const std::string& path, const std::vector<ResultRow>& rows);
std::string csv_text(const std::vector<ResultRow>& rows);

struct DistinguishParams {
    enum class LbFamily { first_term, valid_lb } family = LbFamily::first_term;
    std::uint64_t n = 1000;
    int s = 1;                  // moment order for first_term
    std::uint64_t alpha_t = 8;  // first_term clique size
    double m_t = 0;             // first_term target moment
    double c = 1.0;             // valid_lb constant
    std::vector<std::uint64_t> budgets;
    std::uint64_t trials = 1000;
    std::uint64_t seed = 0;
    unsigned threads = 0;
};

struct DistinguishRow {
    std::string family;
    std::uint64_t n = 0;
    std::uint64_t budget = 0;
    std::uint64_t trials = 0;
    double threshold = 0;   // geometric mean of the two true mean moments
    double hit_prob = 0;    // |planted| / n for the wide family
    double success_rate = 0;
    // all-miss legs: fraction of trials where `budget` uniform draws all
    // missed the planted set, against (1-h)^B per family
    double all_miss_emp_low = 0, all_miss_pred_low = 0;
    double all_miss_emp_high = 0, all_miss_pred_high = 0;
};

std::vector<DistinguishRow> run_distinguish(const DistinguishParams& params);

std::string distinguish_csv_text(const std::vector<DistinguishRow>& rows);

// deterministic shortest round-trip formatting used by every CSV column
std::string format_double(double x);

}  // namespace degmom
