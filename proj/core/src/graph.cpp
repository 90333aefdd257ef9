#include "degmom/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace degmom {

bool Graph::has_edge(VertexId u, VertexId v) const {
    if (u == v) return false;
    // probe the shorter list
    if (degree(u) > degree(v)) std::swap(u, v);
    auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

Graph build_graph(std::span<const Edge> edges, std::uint64_t n) {
    std::vector<Edge> sorted;
    sorted.reserve(edges.size());
    for (std::size_t i = 0; i < edges.size(); ++i) {
        auto [u, v] = edges[i];
        if (u == v) {
            throw std::invalid_argument("build_graph: self-loop at vertex " +
                                        std::to_string(u) + " (edge index " +
                                        std::to_string(i) + ")");
        }
        if (u >= n || v >= n) {
            throw std::invalid_argument("build_graph: vertex id " +
                                        std::to_string(std::max(u, v)) +
                                        " out of range for n=" + std::to_string(n));
        }
        if (u > v) std::swap(u, v);
        sorted.emplace_back(u, v);
    }
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

    Graph g;
    g.m_ = sorted.size();
    std::vector<std::uint32_t> deg(n, 0);
    for (auto [u, v] : sorted) {
        ++deg[u];
        ++deg[v];
    }
    g.offsets_.assign(n + 1, 0);
    for (std::uint64_t v = 0; v < n; ++v) g.offsets_[v + 1] = g.offsets_[v] + deg[v];
    g.adjacency_.resize(g.offsets_[n]);

    std::vector<std::uint64_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
    for (auto [u, v] : sorted) {
        g.adjacency_[cursor[u]++] = v;
        g.adjacency_[cursor[v]++] = u;
    }
    for (std::uint64_t v = 0; v < n; ++v) {
        std::sort(g.adjacency_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v]),
                  g.adjacency_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v + 1]));
        if (deg[v] == 0) ++g.isolated_;
    }
    return g;
}

std::uint32_t core_number(const Graph& g) {
    const std::uint64_t n = g.vertex_count();
    if (n == 0) return 0;

    std::vector<std::uint32_t> deg(n);
    std::uint32_t max_deg = 0;
    for (std::uint64_t v = 0; v < n; ++v) {
        deg[v] = g.degree(static_cast<VertexId>(v));
        max_deg = std::max(max_deg, deg[v]);
    }

    // bucket sort vertices by degree
    std::vector<std::uint64_t> bucket_start(max_deg + 2, 0);
    for (std::uint64_t v = 0; v < n; ++v) ++bucket_start[deg[v] + 1];
    for (std::uint32_t d = 0; d <= max_deg; ++d) bucket_start[d + 1] += bucket_start[d];

    std::vector<VertexId> order(n);
    std::vector<std::uint64_t> pos(n);
    {
        std::vector<std::uint64_t> cursor(bucket_start.begin(), bucket_start.end() - 1);
        for (std::uint64_t v = 0; v < n; ++v) {
            pos[v] = cursor[deg[v]]++;
            order[pos[v]] = static_cast<VertexId>(v);
        }
    }

    std::uint32_t core = 0;
    for (std::uint64_t i = 0; i < n; ++i) {
        const VertexId v = order[i];
        core = std::max(core, deg[v]);
        for (VertexId u : g.neighbors(v)) {
            if (deg[u] > deg[v]) {
                // swap u to the front of its bucket, then shrink its degree
                const std::uint64_t bucket_front = bucket_start[deg[u]];
                const VertexId w = order[bucket_front];
                if (u != w) {
                    std::swap(order[pos[u]], order[bucket_front]);
                    std::swap(pos[u], pos[w]);
                }
                ++bucket_start[deg[u]];
                --deg[u];
            }
        }
    }
    return core;
}

}  // namespace degmom
