#pragma once

#include <vector>

#include "swlab/graph.hpp"
#include "swlab/rational.hpp"

namespace swlab {

/// Distance-frequency histogram of a connected n-node graph: alpha[j-1] is
/// the number of unordered node pairs at geodesic distance j, j = 1..n-1.
/// The counts sum to n(n-1)/2 and the largest nonzero index is the diameter.
struct AlphaArray {
    int n = 0;
    std::vector<long long> alpha;  // length n-1

    long long total_pairs() const {
        return static_cast<long long>(n) * (n - 1) / 2;
    }
    bool valid() const;
};

struct DistanceSummary {
    int n = 0;
    int diameter = 0;
    Rational mean;
    double median = 0.0;  // always of the form m or m - 0.5
};

/// Geodesic distances from `source` to every node. Throws if some node is
/// unreachable, naming it.
std::vector<int> bfs_distances(const Graph& g, int source);

/// Exact all-pairs distance histogram via one BFS per source. Fans BFS out
/// across threads (capped by SWLAB_THREADS); the reduction is an integer sum,
/// so the result is identical regardless of scheduling.
AlphaArray alpha_array(const Graph& g);

int diameter(const AlphaArray& a);
Rational mean_distance(const AlphaArray& a);
double median_distance(const AlphaArray& a);

/// Computes the alpha array once and derives all three statistics from it.
DistanceSummary summarize(const Graph& g);
DistanceSummary summarize(const AlphaArray& a);

}  // namespace swlab
