#pragma once

#include "degmom/generators.hpp"

#include "support.hpp"

#include <string>
#include <vector>

namespace testsupport {

struct CorpusEntry {
    std::string label;
    degmom::Graph graph;
};

// Deterministic test corpus spanning every generator family plus composites,
// ingested files and degenerate shapes; sizes up to 10^4 vertices.
inline std::vector<CorpusEntry> build_corpus() {
    using degmom::Family;
    using degmom::GeneratorSpec;
    std::vector<CorpusEntry> corpus;
    auto add = [&corpus](const degmom::GenResult& res) {
        corpus.push_back({res.label, res.graph});
    };
    auto add_spec = [&](Family f, std::map<std::string, double> params, std::uint64_t seed) {
        add(degmom::generate({f, std::move(params), seed}));
    };

    for (double n : {2, 3, 4, 6, 10, 31, 64, 100, 317, 1000, 9999}) add_spec(Family::path, {{"n", n}}, 0);
    for (double n : {3, 4, 5, 8, 16, 33, 100, 255, 1024, 10000}) add_spec(Family::cycle, {{"n", n}}, 0);
    for (double k : {1, 2, 3, 5, 10, 32, 100, 316, 999, 9999}) add_spec(Family::star, {{"k", k}}, 0);
    for (double k : {2, 3, 4, 5, 8, 16, 40, 100, 150}) add_spec(Family::clique, {{"k", k}}, 0);
    for (auto [a, b] : std::vector<std::pair<double, double>>{{1, 1}, {1, 5}, {2, 2}, {2, 9},
                                                              {3, 33}, {10, 10}, {10, 90},
                                                              {40, 60}, {1, 99}, {7, 111}}) {
        add_spec(Family::complete_bipartite, {{"a", a}, {"b", b}}, 0);
    }
    for (double n : {10, 30, 100, 300, 1000, 3000, 10000}) {
        for (double target_degree : {3.0, 10.0}) {
            for (std::uint64_t seed : {1, 2, 3}) {
                add_spec(Family::erdos_renyi, {{"n", n}, {"p", std::min(1.0, target_degree / n)}},
                         seed);
            }
        }
    }
    for (double n : {10, 50, 200, 1000, 5000, 10000}) {
        for (double m0 : {1, 2, 3, 5}) {
            if (n < m0 + 1) continue;
            for (std::uint64_t seed : {1, 2}) {
                add_spec(Family::preferential_attachment, {{"n", n}, {"m0", m0}}, seed);
            }
        }
    }

    struct FirstTerm {
        double n, alpha, m;
        int s;
    };
    for (const auto& ft : {FirstTerm{200, 4, 600, 1}, {200, 4, 8000, 2}, {1000, 8, 100000, 2},
                           {1000, 6, 4800, 1}, {2000, 8, 80000, 2}, {5000, 10, 200000, 3},
                           {400, 5, 20000, 2}, {800, 12, 8400, 1}}) {
        add(degmom::gen_lb_first_term(static_cast<std::uint64_t>(ft.n),
                                      static_cast<std::uint64_t>(ft.alpha), ft.m, ft.s, 1, 7));
        add(degmom::gen_lb_first_term(static_cast<std::uint64_t>(ft.n),
                                      static_cast<std::uint64_t>(ft.alpha), ft.m, ft.s, 2, 7));
    }

    struct SSet {
        double n, b, d, dprime, planted;
    };
    for (const auto& ss : {SSet{200, 3, 4, 0, 0}, {500, 4, 3, 30, 0}, {500, 6, 8, 0, 12},
                           {1000, 5, 4, 60, 0}, {2000, 6, 4, 253, 0}, {300, 3, 5, 0, 8},
                           {1500, 8, 10, 0, 0}}) {
        for (int which : {1, 2}) {
            add(degmom::gen_s_set_family(
                static_cast<std::uint64_t>(ss.n), static_cast<std::uint64_t>(ss.b),
                static_cast<std::uint32_t>(ss.d), static_cast<std::uint64_t>(ss.dprime),
                static_cast<std::uint64_t>(ss.planted), which, 13));
        }
    }

    for (std::uint64_t n : {400, 900, 1600, 2500, 4900}) {
        auto [cycles, with_clique] = degmom::gen_valid_lb(n, 1.0, 17);
        add(cycles);
        add(with_clique);
    }

    for (auto [n, hub] : std::vector<std::pair<std::uint64_t, std::uint64_t>>{
             {50, 10}, {300, 40}, {2000, 100}, {10000, 100}}) {
        corpus.push_back({"star_plus_path(" + std::to_string(n) + "," + std::to_string(hub) + ")",
                          make_star_plus_path(n, hub)});
    }

    // degenerate shapes: no edges, a single edge adrift in isolated vertices
    corpus.push_back({"edgeless(1)", degmom::build_graph(std::vector<degmom::Edge>{}, 1)});
    corpus.push_back({"edgeless(5)", degmom::build_graph(std::vector<degmom::Edge>{}, 5)});
    corpus.push_back({"edge_plus_isolated(6)",
                      degmom::build_graph(std::vector<degmom::Edge>{{2, 4}}, 6)});
    return corpus;
}

}  // namespace testsupport
