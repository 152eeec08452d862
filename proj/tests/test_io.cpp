#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <random>

#include "swlab/generators.hpp"
#include "swlab/io.hpp"
#include "test_support.hpp"

using namespace swlab;
using nlohmann::json;

TEST_CASE("graph json round trip") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 20; ++trial) {
        std::uniform_int_distribution<int> size(2, 30);
        Graph g = testing::random_connected_graph(size(rng), 5, rng);
        Graph back = graph_from_json(graph_to_json(g));
        CHECK(back.num_nodes() == g.num_nodes());
        CHECK(back.edges() == g.edges());
    }
}

TEST_CASE("graph json is canonical") {
    json j = graph_to_json(Graph(3, {{2, 0}, {1, 0}}));
    CHECK(j["edges"] == json::array({{0, 1}, {0, 2}}));
}

TEST_CASE("alpha json round trip and validation") {
    AlphaArray a = alpha_array(star(6));
    AlphaArray back = alpha_from_json(alpha_to_json(a));
    CHECK(back.alpha == a.alpha);
    CHECK(back.n == a.n);

    json bad{{"n", 4}, {"alpha", {1, 1, 1}}};  // sums to 3, needs 6
    CHECK_THROWS_AS(alpha_from_json(bad), std::invalid_argument);
    CHECK_THROWS_AS(graph_from_json(json{{"n", 3}}), std::invalid_argument);
}

TEST_CASE("summary json fields") {
    json j = summary_to_json(summarize(star(4)));
    CHECK(j["n"] == 4);
    CHECK(j["diameter"] == 2);
    CHECK(j["mean"]["num"] == 3);
    CHECK(j["mean"]["den"] == 2);
    CHECK(j["mean_float"] == doctest::Approx(1.5));
    CHECK(j["median"] == 1.5);
}

TEST_CASE("alpha_from_file accepts graphs and alpha arrays") {
    const std::string graph_path = "io_test_graph.json";
    const std::string alpha_path = "io_test_alpha.json";
    save_json_file(graph_path, graph_to_json(chain(5)));
    save_json_file(alpha_path, alpha_to_json(alpha_array(chain(5))));
    CHECK(alpha_from_file(graph_path).alpha == alpha_from_file(alpha_path).alpha);
    std::remove(graph_path.c_str());
    std::remove(alpha_path.c_str());
}

TEST_CASE("malformed files raise invalid_argument") {
    const std::string path = "io_test_bad.json";
    {
        std::ofstream out(path);
        out << "{not json";
    }
    CHECK_THROWS_AS(load_json_file(path), std::invalid_argument);
    std::remove(path.c_str());
    CHECK_THROWS_AS(load_json_file("does_not_exist.json"), std::runtime_error);
}
