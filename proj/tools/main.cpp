#include "degmom/analysis.hpp"
#include "degmom/edge_list.hpp"
#include "degmom/estimator.hpp"
#include "degmom/generators.hpp"
#include "degmom/harness.hpp"
#include "degmom/moments.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace degmom;

AlphaPolicy parse_alpha(const std::string& text) {
    if (text == "none" || text.empty()) return AlphaPolicy::none();
    if (text == "auto") return AlphaPolicy::automatic();
    return AlphaPolicy::given(std::stoull(text));
}

std::map<std::string, double> parse_params(const std::string& text) {
    std::map<std::string, double> params;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        const auto eq = item.find('=');
        if (eq == std::string::npos) throw CLI::ValidationError("--params expects k=v,...");
        params[item.substr(0, eq)] = std::stod(item.substr(eq + 1));
    }
    return params;
}

void print_summary(const RunResult& res, const ExperimentSpec& spec) {
    std::cerr << "graph: n=" << res.n << " m=" << res.m << " mu_" << spec.s << "="
              << format_double(res.mu_true) << " alpha=" << res.alpha_used << "\n"
              << "trials=" << spec.trials << " mode=" << spec.mode
              << " within(1±eps)=" << format_double(res.summary.success_fraction)
              << " mean_rel_err=" << format_double(res.summary.mean_rel_error)
              << " median_rel_err=" << format_double(res.summary.median_rel_error)
              << " mean_queries=" << format_double(res.summary.mean_queries) << "\n";
}

int cmd_estimate(const std::string& graph_path, int s, double eps, double delta,
                 const std::string& alpha, const std::string& mode, double m_hat,
                 std::uint64_t seed, std::uint64_t trials, const std::string& out,
                 bool timings, unsigned threads) {
    ExperimentSpec spec;
    spec.source = graph_path;
    spec.s = s;
    spec.eps = eps;
    spec.delta = delta;
    spec.alpha = parse_alpha(alpha);
    spec.mode = mode;
    spec.trials = trials;
    spec.seed = seed;
    spec.out_csv = out;
    if (m_hat > 0) spec.m_hat = m_hat;
    spec.timings = timings;
    spec.threads = threads;

    const RunResult res = run_trials(spec);
    print_summary(res, spec);
    if (out.empty()) std::cout << csv_text(res.rows);
    return 0;
}

int cmd_verify_bounds(const std::string& graph_path, int s, const std::string& alpha_text,
                      double c_arb) {
    const Graph g = load_edge_list(graph_path);
    const AlphaPolicy policy = parse_alpha(alpha_text);
    const std::uint64_t alpha = policy.kind == AlphaPolicy::Kind::given
                                    ? policy.value
                                    : std::max<std::uint32_t>(1, core_number(g));

    nlohmann::json j;
    j["graph"] = graph_path;
    j["n"] = g.vertex_count();
    j["m"] = g.edge_count();
    j["s"] = s;
    j["alpha"] = alpha;
    j["core_number"] = core_number(g);

    bool all_ok = true;
    const auto add = [&](const char* name, double lhs, double rhs, bool ok) {
        j["checks"][name] = {{"lhs", lhs}, {"rhs", rhs}, {"ok", ok}};
        all_ok = all_ok && ok;
    };

    const auto ssq = verify_sum_square_bound(g, s);
    add("sum_square_bound", static_cast<double>(ssq.lhs), static_cast<double>(ssq.rhs), ssq.ok);

    const auto deg = verify_degeneracy_sum_square_bound(g, s, alpha);
    j["checks"]["degeneracy_sum_square"] = {{"lhs", static_cast<double>(deg.lhs)},
                                            {"rhs_over_c", static_cast<double>(deg.rhs_over_c)},
                                            {"ratio", static_cast<double>(deg.ratio)},
                                            {"c", c_arb},
                                            {"ok", static_cast<double>(deg.ratio) <= c_arb}};
    all_ok = all_ok && static_cast<double>(deg.ratio) <= c_arb;

    const auto norms = verify_norm_inequalities(g, s);
    j["checks"]["mu2s1_le_m_pow"] = norms.mu2s1_le_m_pow;
    j["checks"]["mu2s1_le_n_pow_m"] = norms.mu2s1_le_n_pow_m;
    j["checks"]["two_m_le_n_pow_m"] = norms.two_m_le_n_pow_m;
    j["checks"]["edge_plan_combined"] = norms.edge_plan_combined;
    j["checks"]["max_out_degree"] = norms.max_out_degree_ok;
    all_ok = all_ok && norms.all_ok;

    j["checks"]["alpha_moment_bound"] = verify_alpha_moment_bound(g, s);
    all_ok = all_ok && verify_alpha_moment_bound(g, s);

    const auto buckets = bucket_decomposition(g, s, alpha);
    j["checks"]["bucket_claim"] = {{"applicable", buckets.claim_applicable},
                                   {"violations", buckets.claim_violations},
                                   {"u_hat_violations", buckets.u_hat_violations}};
    all_ok = all_ok && (!buckets.claim_applicable ||
                        (buckets.claim_violations == 0 && buckets.u_hat_violations == 0));

    j["ok"] = all_ok;
    std::cout << j.dump(2) << "\n";
    return all_ok ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"degree-distribution moment estimation toolkit"};
    app.require_subcommand(1);

    std::string graph_path, alpha = "none", mode = "planned", out;
    int s = 1;
    double eps = 0.25, delta = 1.0 / 3.0, m_hat = 0.0, c_arb = 4.0;
    std::uint64_t seed = 0, trials = 1;
    bool timings = false;
    unsigned threads = 0;

    auto* est = app.add_subcommand("estimate", "estimate the s-th degree moment of a graph");
    est->add_option("--graph", graph_path, "edge-list path")->required();
    est->add_option("--s", s, "moment order");
    est->add_option("--eps", eps, "approximation parameter");
    est->add_option("--delta", delta, "failure probability");
    est->add_option("--alpha", alpha, "degeneracy bound: int|auto|none");
    est->add_option("--mode", mode, "planned|search|s1|edge|conditions|fixed");
    est->add_option("--m-hat", m_hat, "moment guess (skips search; default: exact)");
    est->add_option("--seed", seed, "master seed");
    est->add_option("--trials", trials, "independent trials");
    est->add_option("--out", out, "CSV output path (default: stdout)");
    est->add_flag("--timings", timings, "record wall time per row (breaks byte determinism)");
    est->add_option("--threads", threads, "worker threads (0 = hardware)");

    auto* exact = app.add_subcommand("exact", "exact moment by full enumeration");
    exact->add_option("--graph", graph_path, "edge-list path")->required();
    exact->add_option("--s", s, "moment order");

    auto* degen = app.add_subcommand("degeneracy", "core number by min-degree peeling");
    degen->add_option("--graph", graph_path, "edge-list path")->required();

    std::string family_name, params_text;
    auto* gen = app.add_subcommand("gen", "generate a synthetic graph as an edge list");
    gen->add_option("--family", family_name, "generator family")->required();
    gen->add_option("--params", params_text, "k=v,... family parameters");
    gen->add_option("--seed", seed, "generator seed");
    gen->add_option("--out", out, "edge-list output path")->required();

    std::string verify_alpha = "auto";
    auto* verify = app.add_subcommand("verify-bounds", "check the structural inequalities");
    verify->add_option("--graph", graph_path, "edge-list path")->required();
    verify->add_option("--s", s, "moment order");
    verify->add_option("--alpha", verify_alpha, "degeneracy bound: int|auto");
    verify->add_option("--c-arb", c_arb, "allowed degeneracy-variance ratio");

    std::string config_path;
    auto* experiment = app.add_subcommand("experiment", "run an experiment from a JSON config");
    experiment->add_option("--config", config_path, "JSON config path")->required();

    std::string lb_family = "first_term", budgets_text = "0";
    std::uint64_t dn = 1000, alpha_t = 8;
    double m_t = 0.0, c_const = 1.0;
    auto* dist = app.add_subcommand("distinguish", "query-budget distinguishing game");
    dist->add_option("--family", lb_family, "first_term|valid_lb");
    dist->add_option("--n", dn, "vertex count");
    dist->add_option("--s", s, "moment order (first_term)");
    dist->add_option("--alpha-t", alpha_t, "clique size (first_term)");
    dist->add_option("--m-t", m_t, "target moment (first_term)");
    dist->add_option("--c", c_const, "constant (valid_lb)");
    dist->add_option("--budgets", budgets_text, "comma-separated query budgets");
    dist->add_option("--trials", trials, "trials per budget");
    dist->add_option("--seed", seed, "master seed");
    dist->add_option("--out", out, "CSV output path (default: stdout)");
    dist->add_option("--threads", threads, "worker threads");

    CLI11_PARSE(app, argc, argv);

    try {
        if (est->parsed()) {
            return cmd_estimate(graph_path, s, eps, delta, alpha, mode, m_hat, seed, trials, out,
                                timings, threads);
        }
        if (exact->parsed()) {
            const Graph g = load_edge_list(graph_path);
            const auto res = exact_moment(g, s);
            std::cout << "n " << g.vertex_count() << "\nm " << g.edge_count() << "\nM "
                      << res.total.str() << "\nmu " << format_double(res.mean) << "\n";
            return 0;
        }
        if (degen->parsed()) {
            const Graph g = load_edge_list(graph_path);
            std::cout << core_number(g) << "\n";
            return 0;
        }
        if (gen->parsed()) {
            const auto fam = family_from_string(family_name);
            if (!fam) throw std::invalid_argument("unknown family: " + family_name);
            GeneratorSpec spec{*fam, parse_params(params_text), seed};
            const GenResult res = generate(spec);
            save_edge_list(res.graph, out);
            std::cerr << res.label << ": n=" << res.graph.vertex_count()
                      << " m=" << res.graph.edge_count() << " -> " << out << "\n";
            return 0;
        }
        if (verify->parsed()) return cmd_verify_bounds(graph_path, s, verify_alpha, c_arb);
        if (experiment->parsed()) {
            std::ifstream f(config_path);
            if (!f) throw std::runtime_error("cannot open config: " + config_path);
            std::stringstream buf;
            buf << f.rdbuf();
            const ExperimentSpec spec = experiment_spec_from_json_text(buf.str());
            const RunResult res = run_trials(spec);
            print_summary(res, spec);
            if (spec.out_csv.empty()) std::cout << csv_text(res.rows);
            return 0;
        }
        if (dist->parsed()) {
            DistinguishParams p;
            p.family = lb_family == "valid_lb" ? DistinguishParams::LbFamily::valid_lb
                                               : DistinguishParams::LbFamily::first_term;
            p.n = dn;
            p.s = s;
            p.alpha_t = alpha_t;
            p.m_t = m_t;
            p.c = c_const;
            p.trials = trials;
            p.seed = seed;
            p.threads = threads;
            std::stringstream ss(budgets_text);
            std::string tok;
            while (std::getline(ss, tok, ',')) {
                if (!tok.empty()) p.budgets.push_back(std::stoull(tok));
            }
            const auto rows = run_distinguish(p);
            const std::string text = distinguish_csv_text(rows);
            if (out.empty()) {
                std::cout << text;
            } else {
                std::ofstream of(out, std::ios::binary);
                of << text;
            }
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
