#pragma once

#include "degmom/graph.hpp"
#include "degmom/rng.hpp"

#include <cstdint>
#include <limits>
#include <stdexcept>

namespace degmom {

struct QueryStats {
    std::uint64_t uniform_vertex = 0;
    std::uint64_t degree = 0;
    std::uint64_t neighbor = 0;
    std::uint64_t pair = 0;

    std::uint64_t total() const { return uniform_vertex + degree + neighbor + pair; }
};

// Thrown when a hard query budget runs out; estimators catch it and return
// their partial estimate with a truncated flag.
class QueryBudgetExhausted : public std::runtime_error {
public:
    QueryBudgetExhausted() : std::runtime_error("query budget exhausted") {}
};

// The only access path estimators get to a graph: uniform-vertex, degree,
// neighbor and pair queries, each counted. The oracle also owns the trial's
// random stream, so identical seed + identical call sequence replays exactly.
// One oracle per worker; the underlying Graph is shared read-only.
class QueryOracle {
public:
    static constexpr std::uint64_t kNoBudget = std::numeric_limits<std::uint64_t>::max();

    QueryOracle(const Graph& g, Rng rng) : g_(&g), rng_(rng) {}
    QueryOracle(const Graph& g, std::uint64_t seed) : g_(&g), rng_(Rng(seed)) {}

    std::uint64_t n() const { return g_->vertex_count(); }

    VertexId random_vertex() {
        if (g_->vertex_count() == 0) throw std::logic_error("random_vertex: empty graph");
        charge(stats_.uniform_vertex);
        return static_cast<VertexId>(rng_.below(g_->vertex_count()));
    }

    std::uint32_t degree_of(VertexId v) {
        check_id(v, "degree_of");
        charge(stats_.degree);
        return g_->degree(v);
    }

    // i-th neighbor, 0-based; the model's indexed-neighbor interface.
    VertexId neighbor(VertexId v, std::uint32_t i) {
        check_id(v, "neighbor");
        if (i >= g_->degree(v)) throw std::out_of_range("neighbor: index past degree");
        charge(stats_.neighbor);
        return g_->neighbor_at(v, i);
    }

    VertexId random_neighbor(VertexId v) {
        check_id(v, "random_neighbor");
        const std::uint32_t d = g_->degree(v);
        if (d == 0) throw std::logic_error("random_neighbor: vertex has degree 0");
        charge(stats_.neighbor);
        return g_->neighbor_at(v, static_cast<std::uint32_t>(rng_.below(d)));
    }

    bool pair_query(VertexId u, VertexId v) {
        check_id(u, "pair_query");
        check_id(v, "pair_query");
        charge(stats_.pair);
        return g_->has_edge(u, v);
    }

    const QueryStats& stats() const { return stats_; }
    void reset_stats() { stats_ = QueryStats{}; }

    void set_budget(std::uint64_t max_total_queries) { budget_ = max_total_queries; }
    std::uint64_t budget() const { return budget_; }

    // Non-query randomness (e.g. which sampled vertex to expand) draws from
    // the same stream, keeping whole trials replayable from one seed.
    Rng& rng() { return rng_; }

private:
    void check_id(VertexId v, const char* who) const {
        if (v >= g_->vertex_count()) {
            throw std::out_of_range(std::string(who) + ": vertex id out of range");
        }
    }

    void charge(std::uint64_t& counter) {
        if (stats_.total() >= budget_) throw QueryBudgetExhausted{};
        ++counter;
    }

    const Graph* g_;
    Rng rng_;
    QueryStats stats_;
    std::uint64_t budget_ = kNoBudget;
};

}  // namespace degmom
