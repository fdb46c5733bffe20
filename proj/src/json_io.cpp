#include "fcg/json_io.hpp"

#include <fstream>
#include <stdexcept>

namespace fcg {

using nlohmann::json;

json graph_to_json(const FramedColoredGraph& g) {
  json framing = json::array();
  for (auto f : g.framings()) framing.push_back(int(f));
  json edges = json::array();
  for (const auto& e : g.edges()) {
    edges.push_back(json::array({e.u, e.v, std::string(1, color_letter(e.color))}));
  }
  return json{{"n", g.size()}, {"framing", framing}, {"edges", edges}};
}

namespace {

FramedColoredGraph parse_graph(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("framing")) {
    throw std::invalid_argument("graph JSON needs \"n\" and \"framing\"");
  }
  const int n = j.at("n").get<int>();
  if (n < 0) throw std::invalid_argument("graph JSON: negative n");
  const auto& fr = j.at("framing");
  if (!fr.is_array() || static_cast<int>(fr.size()) != n) {
    throw std::invalid_argument("graph JSON: framing must list exactly n values");
  }
  std::vector<std::uint8_t> framing;
  for (const auto& f : fr) {
    const int v = f.get<int>();
    if (v != 0 && v != 1) throw std::invalid_argument("graph JSON: framing values are 0 or 1");
    framing.push_back(static_cast<std::uint8_t>(v));
  }
  FramedColoredGraph g(std::move(framing));
  if (j.contains("edges")) {
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 3) {
        throw std::invalid_argument("graph JSON: edges are [i, j, \"b\"|\"r\"]");
      }
      const int a = e[0].get<int>();
      const int b = e[1].get<int>();
      const auto c = e[2].get<std::string>();
      if (a < 0 || b >= n || a >= b) {
        throw std::invalid_argument("graph JSON: edge indices must satisfy 0 <= i < j < n");
      }
      if (g.adjacent(a, b)) throw std::invalid_argument("graph JSON: duplicate edge");
      if (c == "b") {
        g.set_edge(a, b, EdgeColor::Black);
      } else if (c == "r") {
        g.set_edge(a, b, EdgeColor::Red);
      } else {
        throw std::invalid_argument("graph JSON: edge color must be \"b\" or \"r\"");
      }
    }
  }
  return g;
}

}  // namespace

FramedColoredGraph graph_from_json(const json& j) {
  try {
    return parse_graph(j);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("graph JSON: ") + e.what());
  }
}

FramedColoredGraph read_graph(std::istream& in) {
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
  }
  return graph_from_json(j);
}

FramedColoredGraph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  return read_graph(in);
}

json combination_to_json(const LinearCombination& x) {
  json out = json::array();
  for (const auto& [k, c] : x) {
    out.push_back(json{{"coeff", to_string(c)}, {"graph", graph_to_json(decode(k))}});
  }
  return out;
}

LinearCombination combination_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("combination JSON must be an array");
  LinearCombination x;
  for (const auto& t : j) {
    x.add(canonical_form(graph_from_json(t.at("graph"))), parse_scalar(t.at("coeff").get<std::string>()));
  }
  return x;
}

}  // namespace fcg
