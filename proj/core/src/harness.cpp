#include "degmom/harness.hpp"

#include "degmom/edge_list.hpp"
#include "degmom/analysis.hpp"
#include "degmom/moments.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cmath>
#include <exception>
#include <fstream>
#include <functional>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace degmom {

namespace {

constexpr std::uint64_t kMaxExactVertices = 10'000'000;  // truth must stay computable

unsigned resolve_threads(unsigned requested) {
    if (requested > 0) return requested;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? hw : 1;
}

void parallel_for(std::uint64_t count, unsigned threads, const std::function<void(std::uint64_t)>& fn) {
    threads = std::min<std::uint64_t>(std::max(1u, threads), std::max<std::uint64_t>(count, 1));
    if (threads <= 1) {
        for (std::uint64_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::uint64_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) {
        pool.emplace_back([&] {
            for (;;) {
                const std::uint64_t i = next.fetch_add(1);
                if (i >= count) return;
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard lock(failure_mutex);
                    if (!failure) failure = std::current_exception();
                    return;
                }
            }
        });
    }
    for (auto& th : pool) th.join();
    if (failure) std::rethrow_exception(failure);
}

double median_of(std::vector<double> xs) {
    if (xs.empty()) return 0.0;
    std::sort(xs.begin(), xs.end());
    const std::size_t k = xs.size();
    return k % 2 == 1 ? xs[k / 2] : 0.5 * (xs[k / 2 - 1] + xs[k / 2]);
}

}  // namespace

std::string format_double(double x) {
    char buf[40];
    auto [p, ec] = std::to_chars(buf, buf + sizeof(buf), x);
    return ec == std::errc{} ? std::string(buf, p) : std::string("nan");
}

ExperimentSpec experiment_spec_from_json_text(const std::string& text) {
    const nlohmann::json j = nlohmann::json::parse(text);
    ExperimentSpec spec;

    const auto& graph = j.at("graph");
    if (graph.contains("file")) {
        spec.source = graph.at("file").get<std::string>();
    } else {
        GeneratorSpec gs;
        const auto fam = family_from_string(graph.at("family").get<std::string>());
        if (!fam) throw std::invalid_argument("experiment config: unknown family");
        gs.family = *fam;
        if (graph.contains("params")) {
            for (auto& [k, v] : graph.at("params").items()) gs.params[k] = v.get<double>();
        }
        gs.seed = graph.value("seed", std::uint64_t{0});
        spec.source = gs;
    }
    spec.label = j.value("label", std::string{});
    spec.s = j.value("s", 1);
    spec.eps = j.value("eps", 0.25);
    spec.delta = j.value("delta", 1.0 / 3.0);
    if (j.contains("alpha")) {
        const auto& a = j.at("alpha");
        if (a.is_string()) {
            const auto str = a.get<std::string>();
            if (str == "auto") {
                spec.alpha = AlphaPolicy::automatic();
            } else if (str == "none") {
                spec.alpha = AlphaPolicy::none();
            } else {
                throw std::invalid_argument("experiment config: alpha must be auto|none|<int>");
            }
        } else {
            spec.alpha = AlphaPolicy::given(a.get<std::uint64_t>());
        }
    }
    spec.mode = j.value("mode", std::string{"planned"});
    spec.trials = j.value("trials", std::uint64_t{1});
    spec.seed = j.value("seed", std::uint64_t{0});
    spec.out_csv = j.value("out", std::string{});
    if (j.contains("m_hat")) spec.m_hat = j.at("m_hat").get<double>();
    if (j.contains("r")) spec.r_fixed = j.at("r").get<std::uint64_t>();
    if (j.contains("q")) spec.q_fixed = j.at("q").get<std::uint64_t>();
    spec.timings = j.value("timings", false);
    spec.threads = j.value("threads", 0u);
    return spec;
}

RunResult run_trials(const ExperimentSpec& spec) {
    if (spec.trials < 1) throw std::invalid_argument("run_trials: trials must be >= 1");

    GenResult gen;
    if (std::holds_alternative<GeneratorSpec>(spec.source)) {
        gen = generate(std::get<GeneratorSpec>(spec.source));
    } else {
        gen.graph = load_edge_list(std::get<std::string>(spec.source));
        gen.label = std::get<std::string>(spec.source);
    }
    const Graph& g = gen.graph;
    const std::string label = spec.label.empty() ? gen.label : spec.label;
    if (g.vertex_count() == 0) throw std::invalid_argument("run_trials: empty graph");
    if (g.vertex_count() > kMaxExactVertices) {
        throw std::invalid_argument("run_trials: graph too large for exact ground truth");
    }

    const MomentResult truth = exact_moment(g, spec.s);
    const double mu_true = truth.mean;

    std::uint64_t alpha_value = 0;
    std::optional<std::uint64_t> alpha;
    switch (spec.alpha.kind) {
        case AlphaPolicy::Kind::none: break;
        case AlphaPolicy::Kind::automatic:
            alpha_value = std::max<std::uint64_t>(1, core_number(g));
            alpha = alpha_value;
            break;
        case AlphaPolicy::Kind::given:
            alpha_value = spec.alpha.value;
            alpha = alpha_value;
            break;
    }

    EstimatorConfig cfg;
    cfg.s = spec.s;
    cfg.eps = spec.eps;
    cfg.delta = spec.delta;
    cfg.alpha = alpha;
    cfg.validate();

    // per-mode fixed sizes, resolved once
    std::uint64_t r_run = 0, q_run = 0;
    const double m_hat = spec.m_hat.value_or(to_double(truth.total));
    if (spec.mode == "conditions") {
        const ConditionReport base = check_conditions(g, spec.s, spec.eps, spec.delta, 1, 1);
        r_run = static_cast<std::uint64_t>(std::ceil(static_cast<double>(base.vertex_condition_rhs)));
        q_run = static_cast<std::uint64_t>(std::ceil(static_cast<double>(base.edge_condition_rhs)));
        r_run = std::max<std::uint64_t>(r_run, 1);
        q_run = std::max<std::uint64_t>(q_run, 1);
    } else if (spec.mode == "fixed") {
        if (!spec.r_fixed || !spec.q_fixed) throw std::invalid_argument("mode fixed needs r and q");
        r_run = *spec.r_fixed;
        q_run = *spec.q_fixed;
    } else if (spec.mode == "edge") {
        const double m_edges = static_cast<double>(g.edge_count());
        const double q_plan = cfg.c_q / (spec.eps * spec.eps * std::pow(spec.delta, 3)) * m_edges /
                              std::pow(std::max(m_hat, 1.0), 1.0 / spec.s);
        q_run = spec.q_fixed.value_or(
            std::min<std::uint64_t>(static_cast<std::uint64_t>(std::ceil(q_plan)),
                                    workload_cap(g.vertex_count())));
        q_run = std::max<std::uint64_t>(q_run, 1);
        r_run = g.vertex_count();
    } else if (spec.mode == "s1") {
        if (!alpha) throw std::invalid_argument("mode s1 needs an alpha policy");
        if (spec.s != 1) throw std::invalid_argument("mode s1 requires s=1");
    } else if (spec.mode != "planned" && spec.mode != "search") {
        throw std::invalid_argument("run_trials: unknown mode '" + spec.mode + "'");
    }

    RunResult out;
    out.mu_true = mu_true;
    out.n = g.vertex_count();
    out.m = g.edge_count();
    out.alpha_used = alpha_value;
    out.rows.resize(spec.trials);

    parallel_for(spec.trials, resolve_threads(spec.threads), [&](std::uint64_t trial) {
        const auto start = std::chrono::steady_clock::now();
        Rng stream = Rng::for_stream(spec.seed, trial);
        QueryOracle oracle(g, stream);

        EstimateReport rep;
        if (spec.mode == "planned") {
            rep = estimate_planned(oracle, m_hat, cfg);
        } else if (spec.mode == "search") {
            rep = geometric_search(oracle, cfg);
        } else if (spec.mode == "s1") {
            rep = estimate_s1_threshold(oracle, alpha_value, spec.eps, spec.delta, m_hat);
        } else if (spec.mode == "edge") {
            rep.mode = EstimateMode::edge_samples;
            rep.r = r_run;
            rep.q = q_run;
            rep.estimate = estimate_with_edge_samples(g, spec.s, q_run, stream);
        } else {  // conditions, fixed
            rep.mode = EstimateMode::general;
            rep.r = r_run;
            rep.q = q_run;
            rep.estimate = estimate_once(oracle, r_run, q_run, spec.s);
            rep.stats = oracle.stats();
        }

        ResultRow row;
        row.label = label;
        row.n = g.vertex_count();
        row.m = g.edge_count();
        row.s = spec.s;
        row.eps = spec.eps;
        row.alpha_used = alpha ? std::to_string(alpha_value) : "none";
        row.mode = spec.mode == "conditions" || spec.mode == "fixed" ? spec.mode
                                                                     : to_string(rep.mode);
        row.trial = trial;
        row.estimate = rep.estimate;
        row.mu_true = mu_true;
        if (mu_true > 0) row.rel_error = std::abs(rep.estimate - mu_true) / mu_true;
        row.r = rep.r;
        row.q = rep.q;
        row.stats = rep.stats;
        row.guess_trace_len = rep.guess_trace.size();
        row.seed = spec.seed;
        row.exceeded_sublinear_budget = rep.exceeded_sublinear_budget;
        if (spec.timings) {
            row.wall_ms = std::chrono::duration<double, std::milli>(
                              std::chrono::steady_clock::now() - start)
                              .count();
        }
        out.rows[trial] = std::move(row);
    });

    // summary against exact truth
    std::vector<double> errors;
    errors.reserve(out.rows.size());
    std::uint64_t hits = 0;
    double query_sum = 0;
    for (const auto& row : out.rows) {
        if (mu_true > 0) {
            const double rel = *row.rel_error;
            errors.push_back(rel);
            if (rel <= spec.eps) ++hits;
        } else if (row.estimate == 0.0) {
            ++hits;
        }
        query_sum += static_cast<double>(row.stats.total());
    }
    out.summary.success_fraction = static_cast<double>(hits) / static_cast<double>(spec.trials);
    out.summary.mean_rel_error =
        errors.empty() ? 0.0
                       : std::accumulate(errors.begin(), errors.end(), 0.0) / errors.size();
    out.summary.median_rel_error = median_of(errors);
    out.summary.mean_queries = query_sum / static_cast<double>(spec.trials);

    if (!spec.out_csv.empty()) write_csv(spec.out_csv, out.rows);
    return out;
}

std::string csv_text(const std::vector<ResultRow>& rows) {
    std::ostringstream out;
    out << "label,n,m,s,eps,alpha,mode,trial,estimate,mu_true,rel_error,r,q,"
           "uniform_vertex_queries,degree_queries,neighbor_queries,pair_queries,guess_trace_len,seed,"
           "wall_ms\n";
    for (const auto& r : rows) {
        out << r.label << ',' << r.n << ',' << r.m << ',' << r.s << ',' << format_double(r.eps)
            << ',' << r.alpha_used << ',' << r.mode << ',' << r.trial << ','
            << format_double(r.estimate) << ',' << format_double(r.mu_true) << ','
            << (r.rel_error ? format_double(*r.rel_error) : std::string{}) << ',' << r.r << ','
            << r.q << ',' << r.stats.uniform_vertex << ',' << r.stats.degree << ','
            << r.stats.neighbor << ',' << r.stats.pair << ',' << r.guess_trace_len << ','
            << r.seed << ','
            << (r.wall_ms ? format_double(*r.wall_ms) : std::string{}) << '\n';
    }
    return out.str();
}

void write_csv(const std::string& path, const std::vector<ResultRow>& rows) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open CSV for writing: " + path);
    f << csv_text(rows);
    if (!f) throw std::runtime_error("CSV write failed: " + path);
}

std::vector<DistinguishRow> run_distinguish(const DistinguishParams& params) {
    if (params.trials < 1) throw std::invalid_argument("run_distinguish: trials must be >= 1");
    const bool first_term = params.family == DistinguishParams::LbFamily::first_term;
    const int s = first_term ? params.s : 1;

    // reference instances fix the per-family truth; relabeling does not move moments
    auto make_instance = [&](int which, std::uint64_t seed) {
        if (first_term) {
            return gen_lb_first_term(params.n, params.alpha_t, params.m_t, s, which, seed);
        }
        auto pair = gen_valid_lb(params.n, params.c, seed);
        return which == 1 ? std::move(pair.first) : std::move(pair.second);
    };
    const GenResult ref_low = make_instance(1, params.seed ^ 0x5ULL);
    const GenResult ref_high = make_instance(2, params.seed ^ 0x6ULL);
    const double mu_low = exact_moment(ref_low.graph, s).mean;
    const double mu_high = exact_moment(ref_high.graph, s).mean;
    const double threshold = std::sqrt(mu_low * mu_high);
    const double h_low =
        static_cast<double>(ref_low.planted.size()) / static_cast<double>(params.n);
    const double h_high =
        static_cast<double>(ref_high.planted.size()) / static_cast<double>(params.n);

    std::vector<DistinguishRow> rows;
    for (std::size_t bi = 0; bi < params.budgets.size(); ++bi) {
        const std::uint64_t budget = params.budgets[bi];
        std::atomic<std::uint64_t> successes{0};
        std::atomic<std::uint64_t> low_trials{0}, low_misses{0};
        std::atomic<std::uint64_t> high_trials{0}, high_misses{0};

        parallel_for(params.trials, resolve_threads(params.threads), [&](std::uint64_t t) {
            Rng stream = Rng::for_stream(params.seed, bi * params.trials + t);
            const int which = stream.next() & 1 ? 2 : 1;
            const GenResult inst = make_instance(which, stream.next());

            QueryOracle oracle(inst.graph, stream);
            oracle.set_budget(budget);
            const std::uint64_t half = std::max<std::uint64_t>(1, budget / 4);
            const BudgetedEstimate est = estimate_once_budgeted(oracle, half, half, s);
            const bool said_high = est.value >= threshold;
            if (said_high == (which == 2)) successes.fetch_add(1);

            // separate all-miss leg: exactly `budget` uniform draws
            QueryOracle probe(inst.graph, Rng::for_stream(params.seed ^ 0xABCDULL,
                                                          bi * params.trials + t));
            bool missed_all = true;
            for (std::uint64_t i = 0; i < budget && missed_all; ++i) {
                const VertexId v = probe.random_vertex();
                missed_all = !std::binary_search(inst.planted.begin(), inst.planted.end(), v);
            }
            if (which == 1) {
                low_trials.fetch_add(1);
                if (missed_all) low_misses.fetch_add(1);
            } else {
                high_trials.fetch_add(1);
                if (missed_all) high_misses.fetch_add(1);
            }
        });

        DistinguishRow row;
        row.family = first_term ? "first_term" : "valid_lb";
        row.n = params.n;
        row.budget = budget;
        row.trials = params.trials;
        row.threshold = threshold;
        row.hit_prob = h_high;
        row.success_rate = static_cast<double>(successes.load()) / static_cast<double>(params.trials);
        row.all_miss_pred_low = std::pow(1.0 - h_low, static_cast<double>(budget));
        row.all_miss_pred_high = std::pow(1.0 - h_high, static_cast<double>(budget));
        row.all_miss_emp_low = low_trials.load() == 0
                                   ? 0.0
                                   : static_cast<double>(low_misses.load()) / low_trials.load();
        row.all_miss_emp_high = high_trials.load() == 0
                                    ? 0.0
                                    : static_cast<double>(high_misses.load()) / high_trials.load();
        rows.push_back(row);
    }
    return rows;
}

std::string distinguish_csv_text(const std::vector<DistinguishRow>& rows) {
    std::ostringstream out;
    out << "family,n,budget,trials,threshold,hit_prob,success_rate,"
           "all_miss_emp_low,all_miss_pred_low,all_miss_emp_high,all_miss_pred_high\n";
    for (const auto& r : rows) {
        out << r.family << ',' << r.n << ',' << r.budget << ',' << r.trials << ','
            << format_double(r.threshold) << ',' << format_double(r.hit_prob) << ','
            << format_double(r.success_rate) << ',' << format_double(r.all_miss_emp_low) << ','
            << format_double(r.all_miss_pred_low) << ',' << format_double(r.all_miss_emp_high)
            << ',' << format_double(r.all_miss_pred_high) << '\n';
    }
    return out.str();
}

}  // namespace degmom
