#include <doctest.h>

#include <random>

#include "swlab/generators.hpp"
#include "swlab/stats.hpp"
#include "test_support.hpp"

using namespace swlab;
using swlab::testing::brute_force_distances;
using swlab::testing::make_alpha;
using swlab::testing::random_connected_graph;

TEST_CASE("graph construction rejects bad input") {
    CHECK_THROWS_AS(Graph(0, {}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(3, {{1, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(3, {{0, 3}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), std::invalid_argument);
    Graph g(3, {{2, 0}, {0, 1}});
    CHECK(g.edges() == std::vector<Graph::Edge>{{0, 1}, {0, 2}});
}

TEST_CASE("bfs_distances on the worked examples") {
    CHECK(bfs_distances(star(4), 0) == std::vector<int>{0, 1, 1, 1});
    CHECK(bfs_distances(chain(5), 0) == std::vector<int>{0, 1, 2, 3, 4});
    // chain_star(2,2): node 0 is the free chain end, node 1 the star center.
    CHECK(bfs_distances(chain_star(2, 2), 0) == std::vector<int>{0, 1, 2, 2});
}

TEST_CASE("bfs_distances names an unreachable node") {
    Graph disconnected(4, {{0, 1}, {2, 3}});
    CHECK_THROWS_WITH_AS(bfs_distances(disconnected, 0),
                         doctest::Contains("unreachable"), std::runtime_error);
    CHECK_THROWS_AS(alpha_array(disconnected), std::runtime_error);
}

TEST_CASE("alpha_array on small families") {
    CHECK(alpha_array(complete(4)).alpha == std::vector<long long>{6, 0, 0});
    CHECK(alpha_array(chain(4)).alpha == std::vector<long long>{3, 2, 1});
    CHECK(alpha_array(star(4)).alpha == std::vector<long long>{3, 3, 0});
}

TEST_CASE("diameter") {
    CHECK(diameter(make_alpha(6, {6, 4, 3, 2, 0})) == 4);
    CHECK(diameter(alpha_array(chain(10))) == 9);
    CHECK(diameter(alpha_array(complete(7))) == 1);
    CHECK_THROWS_AS(diameter(make_alpha(1, {})), std::invalid_argument);
}

TEST_CASE("mean_distance is exact") {
    CHECK(mean_distance(make_alpha(6, {6, 4, 3, 2, 0})) == Rational(31, 15));
    CHECK(mean_distance(alpha_array(complete(12))) == Rational(1));
    CHECK(mean_distance(alpha_array(star(5))) == Rational(8, 5));
}

TEST_CASE("median_distance") {
    CHECK(median_distance(make_alpha(6, {5, 6, 4, 0, 0})) == 2.0);
    CHECK(median_distance(alpha_array(star(4))) == 1.5);
    CHECK(median_distance(alpha_array(complete(9))) == 1.0);
}

TEST_CASE("summarize bundles the three statistics") {
    auto s = summarize(star(4));
    CHECK(s.diameter == 2);
    CHECK(s.mean == Rational(3, 2));
    CHECK(s.median == 1.5);

    s = summarize(chain(4));
    CHECK(s.diameter == 3);
    CHECK(s.mean == Rational(5, 3));
    CHECK(s.median == 1.5);

    s = summarize(complete(2));
    CHECK(s.diameter == 1);
    CHECK(s.mean == Rational(1));
    CHECK(s.median == 1.0);
}

TEST_CASE("alpha counts cover every unordered pair") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 30; ++trial) {
        std::uniform_int_distribution<int> size(2, 40);
        int n = size(rng);
        Graph g = random_connected_graph(n, n / 2, rng);
        AlphaArray a = alpha_array(g);
        CHECK(a.valid());
        long long sum = 0;
        for (long long c : a.alpha) sum += c;
        CHECK(sum == static_cast<long long>(n) * (n - 1) / 2);
    }
}

TEST_CASE("metric axioms on random triples") {
    std::mt19937_64 rng(11);
    Graph g = random_connected_graph(60, 40, rng);
    std::uniform_int_distribution<int> node(0, 59);
    for (int trial = 0; trial < 200; ++trial) {
        int s = node(rng), u = node(rng), t = node(rng);
        auto ds = bfs_distances(g, s);
        auto du = bfs_distances(g, u);
        CHECK(ds[t] <= ds[u] + du[t]);  // triangle inequality
        CHECK(ds[u] == du[s]);          // symmetry
    }
}

TEST_CASE("median never exceeds twice the mean") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 50; ++trial) {
        std::uniform_int_distribution<int> size(2, 50);
        int n = size(rng);
        Graph g = random_connected_graph(n, n, rng);
        auto s = summarize(g);
        CHECK(s.median <= 2.0 * s.mean.to_double());
    }
}

TEST_CASE("alpha statistics match the full distance matrix up to n=64") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 20; ++trial) {
        std::uniform_int_distribution<int> size(2, 64);
        int n = size(rng);
        Graph g = random_connected_graph(n, n / 3, rng);
        auto matrix = brute_force_distances(g);

        std::vector<int> all;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) all.push_back(matrix[i][j]);
        std::sort(all.begin(), all.end());

        long long total = 0;
        int max_d = 0;
        for (int d : all) {
            total += d;
            max_d = std::max(max_d, d);
        }
        double median = all.size() % 2 == 1
                            ? all[all.size() / 2]
                            : (all[all.size() / 2 - 1] + all[all.size() / 2]) / 2.0;

        auto s = summarize(g);
        CHECK(s.diameter == max_d);
        CHECK(s.mean == Rational(total, static_cast<long long>(all.size())));
        CHECK(s.median == median);
    }
}
