#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace swlab {

/// Undirected simple graph over nodes 0..n-1, immutable after construction.
/// Edges are kept in canonical (u < v) sorted order; adjacency lists are
/// sorted per node.
class Graph {
public:
    using Edge = std::pair<int, int>;

    // Validates node range, rejects self-loops and duplicate edges.
    // Connectivity is not enforced here; generators guarantee it and the
    // distance routines reject disconnected inputs.
    Graph(int n, std::vector<Edge> edges);

    int num_nodes() const { return n_; }
    long long num_edges() const { return static_cast<long long>(edges_.size()); }

    const std::vector<Edge>& edges() const { return edges_; }
    std::span<const int> neighbors(int u) const {
        return {adj_.data() + offsets_[u],
                static_cast<size_t>(offsets_[u + 1] - offsets_[u])};
    }

    bool is_connected() const;

private:
    int n_;
    std::vector<Edge> edges_;
    std::vector<int> adj_;       // flattened sorted neighbor lists
    std::vector<int> offsets_;   // per-node slice into adj_, length n_+1
};

}  // namespace swlab
