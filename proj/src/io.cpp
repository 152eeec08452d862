#include "swlab/io.hpp"

#include <fstream>
#include <stdexcept>

namespace swlab {

using nlohmann::json;

json graph_to_json(const Graph& g) {
    json edges = json::array();
    for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
    return json{{"n", g.num_nodes()}, {"edges", std::move(edges)}};
}

Graph graph_from_json(const json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
        throw std::invalid_argument("graph json: expected {\"n\", \"edges\"}");
    int n = j.at("n").get<int>();
    std::vector<Graph::Edge> edges;
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2)
            throw std::invalid_argument("graph json: edge must be a pair");
        edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    return Graph(n, std::move(edges));
}

json alpha_to_json(const AlphaArray& a) {
    return json{{"n", a.n}, {"alpha", a.alpha}};
}

AlphaArray alpha_from_json(const json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("alpha"))
        throw std::invalid_argument("alpha json: expected {\"n\", \"alpha\"}");
    AlphaArray a;
    a.n = j.at("n").get<int>();
    a.alpha = j.at("alpha").get<std::vector<long long>>();
    if (!a.valid())
        throw std::invalid_argument("alpha json: counts do not sum to n(n-1)/2");
    return a;
}

json summary_to_json(const DistanceSummary& s) {
    return json{
        {"n", s.n},
        {"diameter", s.diameter},
        {"mean", {{"num", s.mean.num()}, {"den", s.mean.den()}}},
        {"mean_float", s.mean.to_double()},
        {"median", s.median},
    };
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw std::invalid_argument("malformed json in " + path + ": " + e.what());
    }
    return j;
}

void save_json_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << j.dump(2) << '\n';
}

AlphaArray alpha_from_file(const std::string& path) {
    json j = load_json_file(path);
    if (j.contains("alpha")) return alpha_from_json(j);
    return alpha_array(graph_from_json(j));
}

}  // namespace swlab
