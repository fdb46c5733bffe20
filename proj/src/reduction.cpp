#include "fcg/reduction.hpp"

#include <set>
#include <stdexcept>

namespace fcg {

namespace {

std::vector<Edge> edges_of_color(const FramedColoredGraph& g, EdgeColor c) {
  std::vector<Edge> out;
  for (const auto& e : g.edges()) {
    if (e.color == c) out.push_back(e);
  }
  return out;
}

void require_no(const LinearCombination& x, EdgeColor c, const char* what) {
  for (const auto& [k, coeff] : x) {
    if (decode(k).edge_count(c) > 0) throw std::invalid_argument(what);
  }
}

}  // namespace

LinearCombination iota(const LinearCombination& x) {
  require_no(x, EdgeColor::Red, "iota: red edge in an all-black element");
  return x;
}

LinearCombination psi(const FramedColoredGraph& g) {
  const auto reds = edges_of_color(g, EdgeColor::Red);
  LinearCombination out;
  auto h = g;
  for (std::uint64_t removed = 0; removed < (std::uint64_t{1} << reds.size()); ++removed) {
    int sign = 1;
    for (std::size_t i = 0; i < reds.size(); ++i) {
      const bool drop = removed >> i & 1U;
      h.set_edge(reds[i].u, reds[i].v, drop ? EdgeColor::None : EdgeColor::Black);
      if (drop) sign = -sign;
    }
    add_graph(out, h, sign);
  }
  return out;
}

LinearCombination psi(const LinearCombination& x) {
  return apply_linear(x, [](const CanonicalKey& k) { return psi(decode(k)); });
}

LinearCombination red_normal_form(const FramedColoredGraph& g) {
  const auto blacks = edges_of_color(g, EdgeColor::Black);
  LinearCombination out;
  auto h = g;
  for (std::uint64_t kept = 0; kept < (std::uint64_t{1} << blacks.size()); ++kept) {
    for (std::size_t i = 0; i < blacks.size(); ++i) {
      h.set_edge(blacks[i].u, blacks[i].v, (kept >> i & 1U) ? EdgeColor::Red : EdgeColor::None);
    }
    add_graph(out, h);
  }
  return out;
}

LinearCombination red_normal_form(const LinearCombination& x) {
  return apply_linear(x, [](const CanonicalKey& k) { return red_normal_form(decode(k)); });
}

LinearCombination pi_c(const LinearCombination& x) {
  require_no(x, EdgeColor::Black, "pi_c: black edge in a red-only element");
  LinearCombination out;
  for (const auto& [k, c] : x) {
    if (decode(k).is_connected()) out.add(k, c);
  }
  return out;
}

LinearCombination pi_jr_formula(const CanonicalKey& key) {
  const auto g = decode(key);
  if (g.edge_count(EdgeColor::Red) > 0) throw std::invalid_argument("pi_jr: red edge");
  LinearCombination out;
  for_each_spanning_subgraph(g, [&](const FramedColoredGraph& outer) {
    if (!outer.is_connected()) return;
    const int outer_edges = outer.edge_count();
    for_each_spanning_subgraph(outer, [&](const FramedColoredGraph& inner) {
      add_graph(out, inner, (outer_edges - inner.edge_count()) % 2 == 0 ? 1 : -1);
    });
  });
  return out;
}

LinearCombination pi_jr_formula(const LinearCombination& x) {
  return apply_linear(x, [](const CanonicalKey& k) { return pi_jr_formula(k); });
}

LinearCombination pi_jr_composition(const LinearCombination& x) {
  return psi(pi_c(red_normal_form(iota(x))));
}

FramedColoredGraph ICGenerator::variant(EdgeColor c) const {
  auto g = pattern;
  g.set_edge(u, v, c);
  return g;
}

LinearCombination ICGenerator::element() const {
  LinearCombination x;
  add_graph(x, variant(EdgeColor::Red), 1);
  add_graph(x, variant(EdgeColor::Black), -1);
  add_graph(x, variant(EdgeColor::None), 1);
  return x;
}

std::vector<ICGenerator> ic_generators(int n) {
  std::vector<ICGenerator> out;
  std::set<std::vector<std::pair<std::string, std::string>>> seen;
  for (const auto& key : enumerate_graphs(n, Palette::both())) {
    const auto g = decode(key);
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        ICGenerator gen{g, u, v};
        gen.pattern.set_edge(u, v, EdgeColor::None);
        std::vector<std::pair<std::string, std::string>> sig;
        for (const auto& [k, c] : gen.element()) sig.emplace_back(k.bytes(), to_string(c));
        if (seen.insert(std::move(sig)).second) out.push_back(std::move(gen));
      }
    }
  }
  return out;
}

}  // namespace fcg
