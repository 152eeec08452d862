#include "swlab/stats.hpp"

#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <thread>

namespace swlab {

namespace {

int worker_count(int n_sources) {
    unsigned hw = std::thread::hardware_concurrency();
    int threads = hw == 0 ? 1 : static_cast<int>(hw);
    if (const char* env = std::getenv("SWLAB_THREADS")) {
        int cap = std::atoi(env);
        if (cap >= 1 && cap < threads) threads = cap;
    }
    if (threads > n_sources) threads = n_sources;
    return threads < 1 ? 1 : threads;
}

// BFS into a caller-owned distance buffer; returns the number of reached
// nodes so callers can detect disconnection without a second scan.
int bfs_into(const Graph& g, int source, std::vector<int>& dist,
             std::vector<int>& queue) {
    std::fill(dist.begin(), dist.end(), -1);
    queue.clear();
    queue.push_back(source);
    dist[source] = 0;
    size_t head = 0;
    while (head < queue.size()) {
        int u = queue[head++];
        int du = dist[u];
        for (int v : g.neighbors(u)) {
            if (dist[v] < 0) {
                dist[v] = du + 1;
                queue.push_back(v);
            }
        }
    }
    return static_cast<int>(queue.size());
}

}  // namespace

bool AlphaArray::valid() const {
    if (n < 1 || alpha.size() != static_cast<size_t>(n - 1)) return false;
    long long sum = 0;
    for (long long a : alpha) {
        if (a < 0) return false;
        sum += a;
    }
    return sum == total_pairs();
}

std::vector<int> bfs_distances(const Graph& g, int source) {
    if (source < 0 || source >= g.num_nodes())
        throw std::invalid_argument("bfs_distances: source out of range");
    std::vector<int> dist(g.num_nodes(), -1);
    std::vector<int> queue;
    queue.reserve(g.num_nodes());
    bfs_into(g, source, dist, queue);
    for (int v = 0; v < g.num_nodes(); ++v) {
        if (dist[v] < 0)
            throw std::runtime_error("bfs_distances: node " + std::to_string(v) +
                                     " unreachable from " + std::to_string(source));
    }
    return dist;
}

AlphaArray alpha_array(const Graph& g) {
    const int n = g.num_nodes();
    AlphaArray result;
    result.n = n;
    result.alpha.assign(n > 1 ? n - 1 : 0, 0);
    if (n == 1) return result;

    const int threads = worker_count(n);
    std::atomic<int> next_source{0};
    std::atomic<int> unreachable{-1};
    std::vector<std::vector<long long>> partial(
        threads, std::vector<long long>(n - 1, 0));

    auto work = [&](int tid) {
        std::vector<int> dist(n);
        std::vector<int> queue;
        queue.reserve(n);
        auto& counts = partial[tid];
        for (;;) {
            int s = next_source.fetch_add(1);
            if (s >= n || unreachable.load() >= 0) break;
            int reached = bfs_into(g, s, dist, queue);
            if (reached != n) {
                for (int v = 0; v < n; ++v)
                    if (dist[v] < 0) { unreachable.store(v); break; }
                break;
            }
            for (int v = 0; v < n; ++v)
                if (dist[v] > 0) ++counts[dist[v] - 1];
        }
    };

    if (threads == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(threads);
        for (int t = 0; t < threads; ++t) pool.emplace_back(work, t);
        for (auto& th : pool) th.join();
    }

    if (unreachable.load() >= 0)
        throw std::runtime_error("alpha_array: graph is disconnected (node " +
                                 std::to_string(unreachable.load()) +
                                 " unreachable)");

    // Each unordered pair was counted from both endpoints.
    for (int j = 0; j < n - 1; ++j) {
        for (int t = 0; t < threads; ++t) result.alpha[j] += partial[t][j];
        result.alpha[j] /= 2;
    }
    return result;
}

int diameter(const AlphaArray& a) {
    if (a.n < 2) throw std::invalid_argument("diameter: need at least 2 nodes");
    for (int j = a.n - 2; j >= 0; --j)
        if (a.alpha[j] != 0) return j + 1;
    throw std::invalid_argument("diameter: empty alpha array");
}

Rational mean_distance(const AlphaArray& a) {
    if (a.n < 2) throw std::invalid_argument("mean_distance: need at least 2 nodes");
    long long weighted = 0;
    for (int j = 0; j < a.n - 1; ++j) weighted += (j + 1) * a.alpha[j];
    return Rational(weighted, a.total_pairs());
}

double median_distance(const AlphaArray& a) {
    if (a.n < 2) throw std::invalid_argument("median_distance: need at least 2 nodes");
    const long long total = a.total_pairs();
    // 1-based positions of the middle order statistics.
    const long long lo_pos = (total + 1) / 2;
    const long long hi_pos = total / 2 + 1;
    long long cum = 0;
    int lo = 0, hi = 0;
    for (int j = 0; j < a.n - 1; ++j) {
        cum += a.alpha[j];
        if (lo == 0 && cum >= lo_pos) lo = j + 1;
        if (cum >= hi_pos) { hi = j + 1; break; }
    }
    return (lo + hi) / 2.0;
}

DistanceSummary summarize(const AlphaArray& a) {
    DistanceSummary s;
    s.n = a.n;
    s.diameter = diameter(a);
    s.mean = mean_distance(a);
    s.median = median_distance(a);
    return s;
}

DistanceSummary summarize(const Graph& g) {
    if (g.num_nodes() < 2)
        throw std::invalid_argument("summarize: need at least 2 nodes");
    return summarize(alpha_array(g));
}

}  // namespace swlab
