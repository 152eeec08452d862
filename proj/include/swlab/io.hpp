#pragma once

#include <string>

#include <json.hpp>

#include "swlab/graph.hpp"
#include "swlab/stats.hpp"

namespace swlab {

// File schemas:
//   graph:   {"n": <int>, "edges": [[u, v], ...]}   u < v, sorted
//   alpha:   {"n": <int>, "alpha": [a_1, ..., a_{n-1}]}
//   summary: {"n", "diameter", "mean": {"num", "den"}, "mean_float", "median"}

nlohmann::json graph_to_json(const Graph& g);
Graph graph_from_json(const nlohmann::json& j);

nlohmann::json alpha_to_json(const AlphaArray& a);
AlphaArray alpha_from_json(const nlohmann::json& j);

nlohmann::json summary_to_json(const DistanceSummary& s);

nlohmann::json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const nlohmann::json& j);

/// Reads either a graph file or an alpha-array file and returns the alpha
/// array (computing it when given a graph).
AlphaArray alpha_from_file(const std::string& path);

}  // namespace swlab
