#pragma once

#include <istream>
#include <string>

#include <json.hpp>

#include "fcg/combination.hpp"
#include "fcg/graph.hpp"

namespace fcg {

/// {"n": int, "framing": [0|1, ...], "edges": [[i, j, "b"|"r"], ...]}, i < j.
nlohmann::json graph_to_json(const FramedColoredGraph& g);
FramedColoredGraph graph_from_json(const nlohmann::json& j);
FramedColoredGraph read_graph(std::istream& in);
FramedColoredGraph read_graph_file(const std::string& path);

/// [{"coeff": "p/q", "graph": {...}}, ...] with graphs in canonical labeling.
nlohmann::json combination_to_json(const LinearCombination& x);
LinearCombination combination_from_json(const nlohmann::json& j);

}  // namespace fcg
