#pragma once

#include "degmom/graph.hpp"
#include "degmom/rng.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace degmom {

enum class Family {
    path,
    cycle,
    star,
    clique,
    complete_bipartite,
    erdos_renyi,
    preferential_attachment,
    clique_plus_independent,
    clique_bipartite_tail,
    cycle_plus_cycle,
    cycle_plus_clique,
    s_set_family,
};

const char* to_string(Family f);
std::optional<Family> family_from_string(const std::string& name);

struct GeneratorSpec {
    Family family = Family::path;
    std::map<std::string, double> params;  // family-specific, validated on use
    std::uint64_t seed = 0;
};

struct GenResult {
    Graph graph;
    std::string label;
    // the "hard to hit" set for the lower-bound families (post relabeling);
    // empty for the basic families
    std::vector<VertexId> planted;
    // perfect-matching fallbacks may drop colliding pairs; at most 1 per vertex
    std::uint64_t degree_deviation = 0;
};

// Deterministic in (spec, seed). Dispatches every family.
GenResult generate(const GeneratorSpec& spec);

// path/cycle/star/clique/complete-bipartite/ER/preferential-attachment only.
GenResult gen_basic(const GeneratorSpec& spec);

// Clique on alpha_t vertices (which=1: plus an independent set) or the same
// clique joined completely to a second set sized so the s-th moment reaches
// m_t (which=2: remainder independent). Vertices are randomly relabeled;
// planted is the clique (which=1) or clique + second set (which=2).
GenResult gen_lb_first_term(std::uint64_t n, std::uint64_t alpha_t, double m_t, int s, int which,
                            std::uint64_t seed);

// A small set S over a d-regular (outside-internal) background. which=2 wires
// each S-vertex to d_prime outside vertices (d_prime = 0 selects the complete
// bipartite regime, with the outside-internal degree reduced to d-b); which=1
// leaves S isolated and replaces pairs of those S-edges by "special" edges
// inside the background, preserving outside degrees. An optional clique of
// size planted_clique is added identically in both variants.
GenResult gen_s_set_family(std::uint64_t n, std::uint64_t b, std::uint32_t d, std::uint64_t d_prime,
                           std::uint64_t planted_clique, int which, std::uint64_t seed);

// Cycle(n - ceil(4c sqrt n)) plus a second component: another cycle (first) or
// a clique (second) on ceil(4c sqrt n) vertices, randomly relabeled.
std::pair<GenResult, GenResult> gen_valid_lb(std::uint64_t n, double c, std::uint64_t seed);

struct LbPair {
    GenResult low;   // which = 1
    GenResult high;  // which = 2
    double moment_ratio;  // exact M(high) / M(low) for the given s
};

// Pair builders that also assert the moment gap >= min_ratio (throws).
LbPair gen_lb_first_term_pair(std::uint64_t n, std::uint64_t alpha_t, double m_t, int s,
                              std::uint64_t seed, double min_ratio);
LbPair gen_s_set_pair(std::uint64_t n, std::uint64_t b, std::uint32_t d, std::uint64_t d_prime,
                      std::uint64_t planted_clique, int s, std::uint64_t seed, double min_ratio);

}  // namespace degmom
