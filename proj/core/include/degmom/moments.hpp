#pragma once

#include "degmom/bigint.hpp"
#include "degmom/graph.hpp"

namespace degmom {

// Per-vertex weights under the degree order, for moment order s:
// an edge (v,u) with v preceding u carries weight d_v^{s-1} + d_u^{s-1},
// and wt(v) sums the weights of v's forward edges. Then sum_v wt(v) equals
// sum_v d_v^s exactly; that identity is asserted throughout the test suite.
struct WeightProfile {
    int s = 1;
    std::vector<BigInt> vertex_weight;
    BigInt total;          // sum_v wt(v) == sum_v d_v^s
    BigInt sum_squares;    // sum_v wt(v)^2
    BigInt mu_2s_minus_1;  // sum_v d_v^(2s-1)
    std::uint32_t max_out_degree = 0;
};

WeightProfile weight_profile(const Graph& g, int s);

// d_v^{s-1} + d_u^{s-1} if v precedes u, 0 for the reverse direction.
// Throws if u is not a neighbor of v.
BigInt edge_weight(const Graph& g, VertexId v, VertexId u, int s);

struct MomentResult {
    BigInt total;  // M = sum_v d_v^s, exact
    double mean;   // M / n
};

MomentResult exact_moment(const Graph& g, int s);

// core_number(g)^(s+1) <= M. Holds on every graph: a k-core contains k+1
// vertices of degree >= k, so M >= k^(s+1). Exact integer comparison.
bool verify_alpha_moment_bound(const Graph& g, int s);

}  // namespace degmom
