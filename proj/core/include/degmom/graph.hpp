#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace degmom {

using VertexId = std::uint32_t;
using Edge = std::pair<VertexId, VertexId>;

// Tie-broken degree order: u precedes v iff d_u < d_v, or d_u = d_v and
// id(u) < id(v). Irreflexive total order on vertices.
struct DegreeOrderKey {
    std::uint32_t degree;
    VertexId id;

    friend constexpr bool operator<(const DegreeOrderKey& a, const DegreeOrderKey& b) {
        return a.degree != b.degree ? a.degree < b.degree : a.id < b.id;
    }
};

// Immutable undirected simple graph in compressed (CSR) form. Vertices are
// dense ids 0..n-1; adjacency lists are sorted; no self-loops or parallel
// edges. Safe to share read-only across threads.
class Graph {
public:
    Graph() = default;

    std::uint64_t vertex_count() const { return offsets_.empty() ? 0 : offsets_.size() - 1; }
    std::uint64_t edge_count() const { return m_; }

    std::uint32_t degree(VertexId v) const {
        return static_cast<std::uint32_t>(offsets_[v + 1] - offsets_[v]);
    }

    std::span<const VertexId> neighbors(VertexId v) const {
        return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
    }

    VertexId neighbor_at(VertexId v, std::uint32_t i) const {
        return adjacency_[offsets_[v] + i];
    }

    bool has_edge(VertexId u, VertexId v) const;

    std::uint64_t isolated_count() const { return isolated_; }

    // Offsets double as the cumulative degree sequence: slot x of the
    // adjacency array is the x-th directed edge.
    std::span<const std::uint64_t> offsets() const { return offsets_; }
    std::span<const VertexId> adjacency() const { return adjacency_; }

private:
    friend Graph build_graph(std::span<const Edge> edges, std::uint64_t n);

    std::vector<std::uint64_t> offsets_;
    std::vector<VertexId> adjacency_;
    std::uint64_t m_ = 0;
    std::uint64_t isolated_ = 0;
};

// Validates and builds: rejects self-loops and out-of-range ids, collapses
// duplicate edges, symmetrizes, sorts adjacency.
Graph build_graph(std::span<const Edge> edges, std::uint64_t n);

inline Graph build_graph(const std::vector<Edge>& edges, std::uint64_t n) {
    return build_graph(std::span<const Edge>(edges), n);
}

inline bool precedes(const Graph& g, VertexId u, VertexId v) {
    return DegreeOrderKey{g.degree(u), u} < DegreeOrderKey{g.degree(v), v};
}

// Degeneracy via min-degree peeling: the maximum, over the peel sequence, of
// the degree at removal time. Linear time with a bucket queue.
std::uint32_t core_number(const Graph& g);

}  // namespace degmom
