#include "swlab/generators.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>
#include <string>

namespace swlab {

Graph complete(int n) {
    if (n < 1) throw std::invalid_argument("complete: n must be >= 1");
    std::vector<Graph::Edge> edges;
    edges.reserve(static_cast<size_t>(n) * (n - 1) / 2);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return Graph(n, std::move(edges));
}

Graph star(int n) {
    if (n < 2) throw std::invalid_argument("star: n must be >= 2");
    std::vector<Graph::Edge> edges;
    edges.reserve(n - 1);
    for (int v = 1; v < n; ++v) edges.emplace_back(0, v);
    return Graph(n, std::move(edges));
}

Graph chain(int n) {
    if (n < 2) throw std::invalid_argument("chain: n must be >= 2");
    std::vector<Graph::Edge> edges;
    edges.reserve(n - 1);
    for (int v = 1; v < n; ++v) edges.emplace_back(v - 1, v);
    return Graph(n, std::move(edges));
}

Graph chain_star(int p, int q) {
    if (p < 1 || q < 0 || p + q < 2)
        throw std::invalid_argument("chain_star: need p >= 1, q >= 0, p+q >= 2");
    std::vector<Graph::Edge> edges;
    edges.reserve(p - 1 + q);
    for (int v = 1; v < p; ++v) edges.emplace_back(v - 1, v);
    for (int v = p; v < p + q; ++v) edges.emplace_back(p - 1, v);
    return Graph(p + q, std::move(edges));
}

namespace {

// Flat index t in [0, n(n-1)/2) -> canonical pair (i, j), i < j, ordered by
// (i, j) lexicographically.
Graph::Edge pair_from_index(long long t, int n) {
    // Row offsets: off(i) = i*n - i(i+1)/2.
    double disc = (2.0 * n - 1) * (2.0 * n - 1) - 8.0 * static_cast<double>(t);
    int i = static_cast<int>(((2.0 * n - 1) - std::sqrt(std::max(disc, 0.0))) / 2.0);
    auto off = [n](long long k) { return k * n - k * (k + 1) / 2; };
    while (i > 0 && off(i) > t) --i;
    while (off(i + 1) <= t) ++i;
    int j = static_cast<int>(i + 1 + (t - off(i)));
    return {i, j};
}

}  // namespace

ErdosRenyiResult erdos_renyi(int n, double z, uint64_t seed) {
    if (n < 2) throw std::invalid_argument("erdos_renyi: n must be >= 2");
    if (z <= 0 || z >= n)
        throw std::invalid_argument("erdos_renyi: need 0 < z < n");
    const double p = z / (n - 1);
    const long long total = static_cast<long long>(n) * (n - 1) / 2;

    std::mt19937_64 rng(seed);
    std::vector<Graph::Edge> edges;
    if (p >= 1.0) {
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    } else {
        // Geometric gap sampling over the flat pair index.
        std::uniform_real_distribution<double> unit(0.0, 1.0);
        const double log1mp = std::log1p(-p);
        long long t = -1;
        for (;;) {
            double u = unit(rng);
            if (u <= 0.0) u = std::numeric_limits<double>::min();
            long long gap = static_cast<long long>(std::floor(std::log(u) / log1mp));
            if (gap < 0) gap = 0;
            t += gap + 1;
            if (t >= total) break;
            edges.push_back(pair_from_index(t, n));
        }
    }

    // Extract the largest connected component and relabel in node order.
    std::vector<std::vector<int>> adj(n);
    for (const auto& [u, v] : edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    std::vector<int> comp(n, -1);
    std::vector<int> comp_size;
    std::vector<int> stack;
    for (int s = 0; s < n; ++s) {
        if (comp[s] >= 0) continue;
        int id = static_cast<int>(comp_size.size());
        comp[s] = id;
        stack.assign(1, s);
        int size = 1;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int v : adj[u]) {
                if (comp[v] < 0) {
                    comp[v] = id;
                    ++size;
                    stack.push_back(v);
                }
            }
        }
        comp_size.push_back(size);
    }
    int best = static_cast<int>(std::max_element(comp_size.begin(), comp_size.end()) -
                                comp_size.begin());
    if (comp_size[best] < 2)
        throw std::runtime_error(
            "erdos_renyi: largest component has fewer than 2 nodes");

    std::vector<int> relabel(n, -1);
    int next = 0;
    for (int v = 0; v < n; ++v)
        if (comp[v] == best) relabel[v] = next++;
    std::vector<Graph::Edge> kept;
    kept.reserve(edges.size());
    for (const auto& [u, v] : edges)
        if (comp[u] == best && comp[v] == best)
            kept.emplace_back(relabel[u], relabel[v]);

    return {Graph(next, std::move(kept)), n, next};
}

Graph barabasi_albert(int v, int m, int steps, uint64_t seed) {
    if (v < 1 || m < 1 || m > v)
        throw std::invalid_argument("barabasi_albert: need 1 <= m <= v");
    if (steps < 1) throw std::invalid_argument("barabasi_albert: steps must be >= 1");

    std::mt19937_64 rng(seed);
    std::vector<Graph::Edge> edges;
    edges.reserve(static_cast<size_t>(v) * (v - 1) / 2 +
                  static_cast<size_t>(m) * steps);
    // Degree-proportional sampling via an endpoint list: each node appears
    // once per incident edge.
    std::vector<int> endpoints;
    for (int a = 0; a < v; ++a) {
        for (int b = a + 1; b < v; ++b) {
            edges.emplace_back(a, b);
            endpoints.push_back(a);
            endpoints.push_back(b);
        }
    }

    std::vector<char> chosen_mark(v + steps, 0);
    for (int s = 0; s < steps; ++s) {
        const int node = v + s;
        std::vector<int> chosen;
        chosen.reserve(m);
        while (static_cast<int>(chosen.size()) < m) {
            int target;
            if (endpoints.empty()) {
                std::uniform_int_distribution<int> uni(0, node - 1);
                target = uni(rng);
            } else {
                std::uniform_int_distribution<size_t> pick(0, endpoints.size() - 1);
                target = endpoints[pick(rng)];
            }
            if (!chosen_mark[target]) {
                chosen_mark[target] = 1;
                chosen.push_back(target);
            }
        }
        std::sort(chosen.begin(), chosen.end());
        for (int target : chosen) {
            chosen_mark[target] = 0;
            edges.emplace_back(target, node);
            endpoints.push_back(target);
            endpoints.push_back(node);
        }
    }
    return Graph(v + steps, std::move(edges));
}

LayeredSpec LayeredSpec::constant(long long c, int steps) {
    LayeredSpec s;
    s.kind = Kind::Constant;
    s.param = c;
    s.steps = steps;
    s.validate();
    return s;
}

LayeredSpec LayeredSpec::polynomial(int degree, int steps) {
    LayeredSpec s;
    s.kind = Kind::Polynomial;
    s.param = degree;
    s.steps = steps;
    s.validate();
    return s;
}

LayeredSpec LayeredSpec::geometric(long long base, int steps) {
    LayeredSpec s;
    s.kind = Kind::Geometric;
    s.param = base;
    s.steps = steps;
    s.validate();
    return s;
}

LayeredSpec LayeredSpec::explicit_terms(std::vector<long long> terms) {
    LayeredSpec s;
    s.kind = Kind::Explicit;
    s.steps = static_cast<int>(terms.size());
    s.terms = std::move(terms);
    s.validate();
    return s;
}

long long LayeredSpec::term(int i) const {
    switch (kind) {
        case Kind::Constant: return param;
        case Kind::Polynomial: {
            long long value = 1;
            for (int k = 0; k < param; ++k) value *= i;
            return value + 2;
        }
        case Kind::Geometric: {
            long long value = 1;
            for (int k = 0; k < i; ++k) value *= param;
            return value;
        }
        case Kind::Explicit: return terms[i - 1];
    }
    throw std::logic_error("LayeredSpec: bad kind");
}

long long LayeredSpec::node_count() const {
    long long total = 1;
    for (int i = 1; i <= steps; ++i) total += term(i);
    return total;
}

void LayeredSpec::validate() const {
    if (steps < 1) throw std::invalid_argument("LayeredSpec: steps must be >= 1");
    for (int i = 1; i <= steps; ++i)
        if (term(i) < 2)
            throw std::invalid_argument("LayeredSpec: term a_" + std::to_string(i) +
                                        " = " + std::to_string(term(i)) +
                                        " must be >= 2");
}

Graph layered(const LayeredSpec& spec) {
    spec.validate();
    const long long n = spec.node_count();
    std::vector<Graph::Edge> edges;
    edges.reserve(n - 1);

    int prev_begin = 0, prev_end = 1;       // layer i-1 node range
    int prev_extreme_a = 0, prev_extreme_b = 0;
    for (int i = 1; i <= spec.steps; ++i) {
        const int count = static_cast<int>(spec.term(i));
        const int begin = prev_end;
        const int end = begin + count;
        if (i == 1) {
            for (int v = begin; v < end; ++v) edges.emplace_back(prev_begin, v);
        } else {
            // Designated pair keeps the extreme distance growing by 2.
            edges.emplace_back(prev_extreme_a, begin);
            edges.emplace_back(prev_extreme_b, begin + 1);
            // Remaining nodes round-robin over non-extreme previous nodes.
            std::vector<int> targets;
            for (int v = prev_begin; v < prev_end; ++v)
                if (v != prev_extreme_a && v != prev_extreme_b) targets.push_back(v);
            if (targets.empty()) targets.push_back(prev_extreme_a);
            for (int k = 0; k < count - 2; ++k)
                edges.emplace_back(targets[k % targets.size()], begin + 2 + k);
        }
        prev_extreme_a = begin;
        prev_extreme_b = begin + 1;
        prev_begin = begin;
        prev_end = end;
    }
    return Graph(static_cast<int>(n), std::move(edges));
}

}  // namespace swlab
