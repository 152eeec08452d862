#include "swlab/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace swlab {

Graph::Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
    if (n_ < 1) throw std::invalid_argument("Graph: node count must be >= 1");
    for (auto& [u, v] : edges_) {
        if (u == v)
            throw std::invalid_argument("Graph: self-loop at node " + std::to_string(u));
        if (u < 0 || v < 0 || u >= n_ || v >= n_)
            throw std::invalid_argument("Graph: edge endpoint out of range");
        if (u > v) std::swap(u, v);
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
        throw std::invalid_argument("Graph: duplicate edge");

    std::vector<int> degree(n_, 0);
    for (const auto& [u, v] : edges_) {
        ++degree[u];
        ++degree[v];
    }
    offsets_.assign(n_ + 1, 0);
    for (int i = 0; i < n_; ++i) offsets_[i + 1] = offsets_[i] + degree[i];
    adj_.resize(edges_.size() * 2);
    std::vector<int> cursor(offsets_.begin(), offsets_.end() - 1);
    for (const auto& [u, v] : edges_) {
        adj_[cursor[u]++] = v;
        adj_[cursor[v]++] = u;
    }
    // edges_ is sorted, so each neighbor slice comes out sorted already for
    // the low endpoint; the high endpoint side needs a pass.
    for (int i = 0; i < n_; ++i)
        std::sort(adj_.begin() + offsets_[i], adj_.begin() + offsets_[i + 1]);
}

bool Graph::is_connected() const {
    std::vector<char> seen(n_, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int v : neighbors(u)) {
            if (!seen[v]) {
                seen[v] = 1;
                ++count;
                stack.push_back(v);
            }
        }
    }
    return count == n_;
}

}  // namespace swlab
