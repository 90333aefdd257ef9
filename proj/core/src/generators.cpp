#include "degmom/generators.hpp"

#include "degmom/moments.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_set>

namespace degmom {

namespace {

std::uint64_t edge_key(VertexId u, VertexId v) {
    if (u > v) std::swap(u, v);
    return (static_cast<std::uint64_t>(u) << 32) | v;
}

double need(const GeneratorSpec& spec, const std::string& name) {
    auto it = spec.params.find(name);
    if (it == spec.params.end()) {
        throw std::invalid_argument(std::string("generator ") + to_string(spec.family) +
                                    ": missing param '" + name + "'");
    }
    return it->second;
}

std::uint64_t need_count(const GeneratorSpec& spec, const std::string& name) {
    const double v = need(spec, name);
    if (!(v >= 0) || v != std::floor(v)) {
        throw std::invalid_argument("generator param '" + name + "' must be a non-negative integer");
    }
    return static_cast<std::uint64_t>(v);
}

void shuffle(std::vector<VertexId>& xs, Rng& rng) {
    for (std::size_t i = xs.size(); i > 1; --i) {
        std::swap(xs[i - 1], xs[static_cast<std::size_t>(rng.below(i))]);
    }
}

// random bijection on 0..n-1; lower-bound families differ only in labeling
std::vector<VertexId> random_permutation(std::uint64_t n, Rng& rng) {
    std::vector<VertexId> p(n);
    for (std::uint64_t i = 0; i < n; ++i) p[i] = static_cast<VertexId>(i);
    shuffle(p, rng);
    return p;
}

void relabel(std::vector<Edge>& edges, std::vector<VertexId>& planted, std::uint64_t n, Rng& rng) {
    const auto perm = random_permutation(n, rng);
    for (auto& [u, v] : edges) {
        u = perm[u];
        v = perm[v];
    }
    for (auto& v : planted) v = perm[v];
    std::sort(planted.begin(), planted.end());
}

void append_clique(std::vector<Edge>& edges, VertexId first, std::uint64_t k) {
    for (std::uint64_t i = 0; i < k; ++i) {
        for (std::uint64_t j = i + 1; j < k; ++j) {
            edges.emplace_back(static_cast<VertexId>(first + i), static_cast<VertexId>(first + j));
        }
    }
}

void append_cycle(std::vector<Edge>& edges, VertexId first, std::uint64_t k) {
    if (k < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
    for (std::uint64_t i = 0; i < k; ++i) {
        edges.emplace_back(static_cast<VertexId>(first + i),
                           static_cast<VertexId>(first + (i + 1) % k));
    }
}

// d edge-disjoint perfect matchings over verts (even size). Per round, up to
// 100 permutation attempts for a collision-free pairing; after that, local
// pair swaps, and any still-colliding pairs are dropped (reported as degree
// deviation, at most 1 per vertex per round).
std::uint64_t add_matchings(std::vector<Edge>& edges, std::unordered_set<std::uint64_t>& seen,
                            std::vector<VertexId> verts, std::uint32_t rounds, Rng& rng) {
    if (verts.size() % 2 != 0) throw std::invalid_argument("matching set must have even size");
    std::uint64_t dropped_pairs = 0;
    for (std::uint32_t round = 0; round < rounds; ++round) {
        bool committed = false;
        for (int attempt = 0; attempt < 100 && !committed; ++attempt) {
            shuffle(verts, rng);
            bool clean = true;
            for (std::size_t i = 0; i + 1 < verts.size(); i += 2) {
                if (seen.count(edge_key(verts[i], verts[i + 1]))) {
                    clean = false;
                    break;
                }
            }
            if (!clean) continue;
            for (std::size_t i = 0; i + 1 < verts.size(); i += 2) {
                seen.insert(edge_key(verts[i], verts[i + 1]));
                edges.emplace_back(verts[i], verts[i + 1]);
            }
            committed = true;
        }
        if (committed) continue;

        // fix-up: per colliding pair, hunt for a partner swap that leaves
        // both pairs clean; drop whatever remains stuck
        shuffle(verts, rng);
        auto colliding = [&](std::size_t i) { return seen.count(edge_key(verts[2 * i], verts[2 * i + 1])) != 0; };
        const std::size_t pairs = verts.size() / 2;
        for (std::size_t sweep = 0; sweep < 100; ++sweep) {
            bool stuck = false;
            for (std::size_t i = 0; i < pairs; ++i) {
                if (!colliding(i)) continue;
                bool fixed = false;
                for (int attempt = 0; attempt < 100 && !fixed; ++attempt) {
                    const std::size_t k = static_cast<std::size_t>(rng.below(pairs));
                    if (k == i) continue;
                    std::swap(verts[2 * i + 1], verts[2 * k + 1]);
                    if (!colliding(i) && !colliding(k)) {
                        fixed = true;
                    } else {
                        std::swap(verts[2 * i + 1], verts[2 * k + 1]);
                    }
                }
                stuck = stuck || !fixed;
            }
            if (!stuck) break;
        }
        for (std::size_t i = 0; i < pairs; ++i) {
            if (colliding(i)) {
                ++dropped_pairs;
                continue;
            }
            seen.insert(edge_key(verts[2 * i], verts[2 * i + 1]));
            edges.emplace_back(verts[2 * i], verts[2 * i + 1]);
        }
    }
    return dropped_pairs;
}

GenResult finish(std::vector<Edge> edges, std::uint64_t n, std::string label,
                 std::vector<VertexId> planted = {}, std::uint64_t deviation = 0) {
    GenResult out;
    out.graph = build_graph(edges, n);
    out.label = std::move(label);
    out.planted = std::move(planted);
    out.degree_deviation = deviation;
    return out;
}

}  // namespace

const char* to_string(Family f) {
    switch (f) {
        case Family::path: return "path";
        case Family::cycle: return "cycle";
        case Family::star: return "star";
        case Family::clique: return "clique";
        case Family::complete_bipartite: return "complete_bipartite";
        case Family::erdos_renyi: return "erdos_renyi";
        case Family::preferential_attachment: return "preferential_attachment";
        case Family::clique_plus_independent: return "clique_plus_independent";
        case Family::clique_bipartite_tail: return "clique_bipartite_tail";
        case Family::cycle_plus_cycle: return "cycle_plus_cycle";
        case Family::cycle_plus_clique: return "cycle_plus_clique";
        case Family::s_set_family: return "s_set_family";
    }
    return "?";
}

std::optional<Family> family_from_string(const std::string& name) {
    for (int f = 0; f <= static_cast<int>(Family::s_set_family); ++f) {
        if (name == to_string(static_cast<Family>(f))) return static_cast<Family>(f);
    }
    return std::nullopt;
}

GenResult gen_basic(const GeneratorSpec& spec) {
    Rng rng(spec.seed);
    std::vector<Edge> edges;
    switch (spec.family) {
        case Family::path: {
            const std::uint64_t n = need_count(spec, "n");
            if (n < 1) throw std::invalid_argument("path: n must be >= 1");
            for (std::uint64_t i = 0; i + 1 < n; ++i) {
                edges.emplace_back(static_cast<VertexId>(i), static_cast<VertexId>(i + 1));
            }
            return finish(std::move(edges), n, "path(" + std::to_string(n) + ")");
        }
        case Family::cycle: {
            const std::uint64_t n = need_count(spec, "n");
            append_cycle(edges, 0, n);
            return finish(std::move(edges), n, "cycle(" + std::to_string(n) + ")");
        }
        case Family::star: {
            const std::uint64_t k = need_count(spec, "k");
            if (k < 1) throw std::invalid_argument("star: k must be >= 1");
            for (std::uint64_t i = 1; i <= k; ++i) {
                edges.emplace_back(0, static_cast<VertexId>(i));
            }
            return finish(std::move(edges), k + 1, "star(" + std::to_string(k) + ")");
        }
        case Family::clique: {
            const std::uint64_t k = need_count(spec, "k");
            if (k < 1) throw std::invalid_argument("clique: k must be >= 1");
            append_clique(edges, 0, k);
            return finish(std::move(edges), k, "clique(" + std::to_string(k) + ")");
        }
        case Family::complete_bipartite: {
            const std::uint64_t a = need_count(spec, "a");
            const std::uint64_t b = need_count(spec, "b");
            if (a < 1 || b < 1) throw std::invalid_argument("complete_bipartite: sides must be >= 1");
            for (std::uint64_t i = 0; i < a; ++i) {
                for (std::uint64_t j = 0; j < b; ++j) {
                    edges.emplace_back(static_cast<VertexId>(i), static_cast<VertexId>(a + j));
                }
            }
            return finish(std::move(edges), a + b,
                          "complete_bipartite(" + std::to_string(a) + "," + std::to_string(b) + ")");
        }
        case Family::erdos_renyi: {
            const std::uint64_t n = need_count(spec, "n");
            const double p = need(spec, "p");
            if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("erdos_renyi: p must be in [0,1]");
            if (p > 0.0) {
                const double log1mp = std::log1p(-p);  // -inf at p=1 makes skip 0
                for (std::uint64_t i = 0; i + 1 < n; ++i) {
                    std::uint64_t j = i;
                    for (;;) {
                        const double u = rng.unit();
                        const std::uint64_t skip =
                            p >= 1.0 ? 0
                                     : static_cast<std::uint64_t>(std::floor(std::log1p(-u) / log1mp));
                        j += 1 + skip;
                        if (j >= n) break;
                        edges.emplace_back(static_cast<VertexId>(i), static_cast<VertexId>(j));
                    }
                }
            }
            return finish(std::move(edges), n,
                          "erdos_renyi(" + std::to_string(n) + ")");
        }
        case Family::preferential_attachment: {
            const std::uint64_t n = need_count(spec, "n");
            const std::uint64_t m0 = need_count(spec, "m0");
            if (m0 < 1 || n < m0 + 1) {
                throw std::invalid_argument("preferential_attachment: need m0 >= 1 and n >= m0+1");
            }
            append_clique(edges, 0, m0 + 1);
            std::vector<VertexId> endpoints;  // one entry per incident edge end
            for (auto [u, v] : edges) {
                endpoints.push_back(u);
                endpoints.push_back(v);
            }
            std::vector<VertexId> targets;
            for (std::uint64_t v = m0 + 1; v < n; ++v) {
                targets.clear();
                while (targets.size() < m0) {
                    const VertexId t = endpoints[rng.below(endpoints.size())];
                    if (std::find(targets.begin(), targets.end(), t) == targets.end()) {
                        targets.push_back(t);
                    }
                }
                for (VertexId t : targets) {
                    edges.emplace_back(static_cast<VertexId>(v), t);
                    endpoints.push_back(static_cast<VertexId>(v));
                    endpoints.push_back(t);
                }
            }
            return finish(std::move(edges), n,
                          "preferential_attachment(" + std::to_string(n) + "," + std::to_string(m0) + ")");
        }
        default:
            throw std::invalid_argument("gen_basic: not a basic family");
    }
}

GenResult gen_lb_first_term(std::uint64_t n, std::uint64_t alpha_t, double m_t, int s, int which,
                            std::uint64_t seed) {
    if (alpha_t < 2 || alpha_t > n) throw std::invalid_argument("gen_lb_first_term: bad alpha_t");
    if (which != 1 && which != 2) throw std::invalid_argument("gen_lb_first_term: which must be 1 or 2");
    Rng rng(seed);
    std::vector<Edge> edges;
    std::vector<VertexId> planted;

    append_clique(edges, 0, alpha_t);
    std::uint64_t marked = alpha_t;
    if (which == 2) {
        if (s < 1) throw std::invalid_argument("gen_lb_first_term: s must be >= 1");
        const double wide = std::ceil(std::pow(m_t / static_cast<double>(alpha_t), 1.0 / s));
        if (!(wide > static_cast<double>(alpha_t)) || wide > static_cast<double>(n)) {
            throw std::invalid_argument("gen_lb_first_term: infeasible sizes for which=2");
        }
        marked = static_cast<std::uint64_t>(wide);
        for (std::uint64_t i = 0; i < alpha_t; ++i) {
            for (std::uint64_t j = alpha_t; j < marked; ++j) {
                edges.emplace_back(static_cast<VertexId>(i), static_cast<VertexId>(j));
            }
        }
    }
    for (std::uint64_t i = 0; i < marked; ++i) planted.push_back(static_cast<VertexId>(i));
    relabel(edges, planted, n, rng);
    return finish(std::move(edges), n,
                  std::string(which == 1 ? "clique_plus_independent(" : "clique_bipartite_tail(") +
                      std::to_string(n) + ",a=" + std::to_string(alpha_t) + ")",
                  std::move(planted));
}

GenResult gen_s_set_family(std::uint64_t n, std::uint64_t b, std::uint32_t d, std::uint64_t d_prime,
                           std::uint64_t planted_clique, int which, std::uint64_t seed) {
    if (which != 1 && which != 2) throw std::invalid_argument("gen_s_set_family: which must be 1 or 2");
    if (b < 1 || b >= n) throw std::invalid_argument("gen_s_set_family: need 1 <= b < n");
    const std::uint64_t outside = n - b;
    const bool complete = d_prime == 0 || d_prime >= outside;
    if (complete && d < b) {
        throw std::invalid_argument("gen_s_set_family: complete regime needs d >= b");
    }
    if (!complete && d_prime > outside) {
        throw std::invalid_argument("gen_s_set_family: d_prime exceeds outside size");
    }

    Rng rng(seed);
    std::vector<Edge> edges;
    std::unordered_set<std::uint64_t> seen;
    std::uint64_t deviation = 0;

    // outside vertices b..n-1; matchings over an even-sized prefix
    std::vector<VertexId> match_set;
    const std::uint64_t even_outside = outside - (outside % 2);
    match_set.reserve(even_outside);
    for (std::uint64_t i = 0; i < even_outside; ++i) match_set.push_back(static_cast<VertexId>(b + i));

    const std::uint32_t internal_rounds = complete ? d - static_cast<std::uint32_t>(b) : d;
    deviation += 2 * add_matchings(edges, seen, match_set, internal_rounds, rng);

    // the S-edge endpoint slots; which=2 realizes them as S-to-outside edges,
    // which=1 pairs them up into special edges inside the background
    std::vector<VertexId> slots;
    if (complete) {
        for (std::uint64_t i = 0; i < b; ++i) {
            for (std::uint64_t j = 0; j < outside; ++j) slots.push_back(static_cast<VertexId>(b + j));
        }
    } else {
        std::vector<VertexId> pool;
        pool.reserve(outside);
        for (std::uint64_t j = 0; j < outside; ++j) pool.push_back(static_cast<VertexId>(b + j));
        for (std::uint64_t i = 0; i < b; ++i) {
            shuffle(pool, rng);
            for (std::uint64_t k = 0; k < d_prime; ++k) slots.push_back(pool[k]);
        }
    }

    if (which == 2) {
        std::size_t idx = 0;
        const std::uint64_t per_s = complete ? outside : d_prime;
        for (std::uint64_t i = 0; i < b; ++i) {
            for (std::uint64_t k = 0; k < per_s; ++k) {
                edges.emplace_back(static_cast<VertexId>(i), slots[idx++]);
            }
        }
    } else {
        // pair the endpoint slots at random, then repair self-pairs and
        // duplicates (against existing edges and among the pairs themselves)
        // by partner swaps; drop whatever stays stuck
        shuffle(slots, rng);
        if (slots.size() % 2 == 1) {
            slots.pop_back();
            ++deviation;
        }
        const std::size_t pairs = slots.size() / 2;
        std::unordered_set<std::uint64_t> staged;
        std::vector<std::size_t> bad;
        for (std::size_t sweep = 0; sweep < 200; ++sweep) {
            staged.clear();
            bad.clear();
            for (std::size_t i = 0; i < pairs; ++i) {
                const VertexId a = slots[2 * i], c = slots[2 * i + 1];
                if (a == c || seen.count(edge_key(a, c)) || !staged.insert(edge_key(a, c)).second) {
                    bad.push_back(i);
                }
            }
            if (bad.empty()) break;
            for (const std::size_t i : bad) {
                const std::size_t k = static_cast<std::size_t>(rng.below(pairs));
                if (k != i) std::swap(slots[2 * i + 1], slots[2 * k + 1]);
            }
        }
        staged.clear();
        for (std::size_t i = 0; i < pairs; ++i) {
            const VertexId a = slots[2 * i], c = slots[2 * i + 1];
            if (a == c || seen.count(edge_key(a, c)) || !staged.insert(edge_key(a, c)).second) {
                deviation += 2;
                continue;
            }
            edges.emplace_back(a, c);
        }
        seen.insert(staged.begin(), staged.end());
    }

    if (planted_clique >= 2) {
        if (planted_clique > outside) throw std::invalid_argument("gen_s_set_family: planted clique too large");
        append_clique(edges, static_cast<VertexId>(b), planted_clique);
    }

    std::vector<VertexId> planted;
    for (std::uint64_t i = 0; i < b; ++i) planted.push_back(static_cast<VertexId>(i));
    relabel(edges, planted, n, rng);
    return finish(std::move(edges), n,
                  "s_set_family(" + std::to_string(n) + ",b=" + std::to_string(b) +
                      ",which=" + std::to_string(which) + ")",
                  std::move(planted), deviation);
}

std::pair<GenResult, GenResult> gen_valid_lb(std::uint64_t n, double c, std::uint64_t seed) {
    const double small_real = 4.0 * c * std::sqrt(static_cast<double>(n));
    const auto small = static_cast<std::uint64_t>(std::ceil(small_real));
    if (small < 3 || small >= n - 3) throw std::invalid_argument("gen_valid_lb: n too small for c");
    const std::uint64_t big = n - small;

    auto build = [&](bool clique_small, std::uint64_t component_seed) {
        Rng rng(component_seed);
        std::vector<Edge> edges;
        append_cycle(edges, 0, big);
        if (clique_small) {
            append_clique(edges, static_cast<VertexId>(big), small);
        } else {
            append_cycle(edges, static_cast<VertexId>(big), small);
        }
        std::vector<VertexId> planted;
        for (std::uint64_t i = big; i < n; ++i) planted.push_back(static_cast<VertexId>(i));
        relabel(edges, planted, n, rng);
        return finish(std::move(edges), n,
                      clique_small ? "cycle_plus_clique(" + std::to_string(n) + ")"
                                   : "cycle_plus_cycle(" + std::to_string(n) + ")",
                      std::move(planted));
    };
    return {build(false, seed), build(true, seed + 0x9E3779B97F4A7C15ULL)};
}

LbPair gen_lb_first_term_pair(std::uint64_t n, std::uint64_t alpha_t, double m_t, int s,
                              std::uint64_t seed, double min_ratio) {
    LbPair pair{gen_lb_first_term(n, alpha_t, m_t, s, 1, seed),
                gen_lb_first_term(n, alpha_t, m_t, s, 2, seed + 1), 0.0};
    const double lo = exact_moment(pair.low.graph, s).mean;
    const double hi = exact_moment(pair.high.graph, s).mean;
    pair.moment_ratio = hi / lo;
    if (!(pair.moment_ratio >= min_ratio)) {
        throw std::runtime_error("gen_lb_first_term_pair: moment gap " +
                                 std::to_string(pair.moment_ratio) + " below required " +
                                 std::to_string(min_ratio));
    }
    return pair;
}

LbPair gen_s_set_pair(std::uint64_t n, std::uint64_t b, std::uint32_t d, std::uint64_t d_prime,
                      std::uint64_t planted_clique, int s, std::uint64_t seed, double min_ratio) {
    LbPair pair{gen_s_set_family(n, b, d, d_prime, planted_clique, 1, seed),
                gen_s_set_family(n, b, d, d_prime, planted_clique, 2, seed + 1), 0.0};
    const double lo = exact_moment(pair.low.graph, s).mean;
    const double hi = exact_moment(pair.high.graph, s).mean;
    pair.moment_ratio = hi / lo;
    if (!(pair.moment_ratio >= min_ratio)) {
        throw std::runtime_error("gen_s_set_pair: moment gap " + std::to_string(pair.moment_ratio) +
                                 " below required " + std::to_string(min_ratio));
    }
    return pair;
}

GenResult generate(const GeneratorSpec& spec) {
    switch (spec.family) {
        case Family::path:
        case Family::cycle:
        case Family::star:
        case Family::clique:
        case Family::complete_bipartite:
        case Family::erdos_renyi:
        case Family::preferential_attachment:
            return gen_basic(spec);
        case Family::clique_plus_independent:
            return gen_lb_first_term(need_count(spec, "n"), need_count(spec, "alpha"),
                                     0.0, 1, 1, spec.seed);
        case Family::clique_bipartite_tail:
            return gen_lb_first_term(need_count(spec, "n"), need_count(spec, "alpha"),
                                     need(spec, "m"), static_cast<int>(need_count(spec, "s")), 2,
                                     spec.seed);
        case Family::cycle_plus_cycle:
            return gen_valid_lb(need_count(spec, "n"), need(spec, "c"), spec.seed).first;
        case Family::cycle_plus_clique:
            return gen_valid_lb(need_count(spec, "n"), need(spec, "c"), spec.seed).second;
        case Family::s_set_family:
            return gen_s_set_family(need_count(spec, "n"), need_count(spec, "b"),
                                    static_cast<std::uint32_t>(need_count(spec, "d")),
                                    need_count(spec, "dprime"), need_count(spec, "planted"),
                                    static_cast<int>(need_count(spec, "which")), spec.seed);
    }
    throw std::invalid_argument("generate: unknown family");
}

}  // namespace degmom
