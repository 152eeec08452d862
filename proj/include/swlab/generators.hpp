#pragma once

#include <cstdint>
#include <vector>

#include "swlab/graph.hpp"

namespace swlab {

Graph complete(int n);
Graph star(int n);   // node 0 is the center
Graph chain(int n);  // path 0-1-...-(n-1)

/// Chain of p nodes whose last node (p-1) is the center of a star with q
/// additional nodes. N = p+q nodes, p-1+q edges.
Graph chain_star(int p, int q);

/// G(n, p) with p = z/(n-1), reduced to its largest connected component,
/// relabeled 0..N'-1 in original node order.
struct ErdosRenyiResult {
    Graph graph;
    int requested_n;
    int realized_n;  // == graph.num_nodes()
};
ErdosRenyiResult erdos_renyi(int n, double z, uint64_t seed);

/// Preferential attachment starting from complete(v); each of `steps` added
/// nodes gets m edges to distinct earlier nodes chosen with probability
/// proportional to degree (uniform while all degrees are zero).
Graph barabasi_albert(int v, int m, int steps, uint64_t seed);

/// Term schedule for the layered construction: a_i, i = 1..steps, all >= 2.
struct LayeredSpec {
    enum class Kind { Constant, Polynomial, Geometric, Explicit };

    static LayeredSpec constant(long long c, int steps);
    static LayeredSpec polynomial(int degree, int steps);  // a_i = i^degree + 2
    static LayeredSpec geometric(long long base, int steps);  // a_i = base^i
    static LayeredSpec explicit_terms(std::vector<long long> terms);

    long long term(int i) const;  // i in 1..steps
    long long node_count() const;  // 1 + sum of terms
    void validate() const;         // throws unless every term >= 2

    Kind kind = Kind::Constant;
    long long param = 2;
    int steps = 1;
    std::vector<long long> terms;  // Explicit only
};

/// Layered small-world construction. Step 1 attaches a_1 nodes to the base
/// node; at step i >= 2 two designated nodes are attached to the previous
/// extreme pair (one edge each) and every other node gets one edge to a
/// non-extreme node of the previous layer, round-robin (falling back to the
/// first extreme when the previous layer has only the extreme pair). The
/// result is a tree with diameter exactly 2*steps.
Graph layered(const LayeredSpec& spec);

}  // namespace swlab
