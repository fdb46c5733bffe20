#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "fcg/canonical.hpp"
#include "fcg/combination.hpp"
#include "fcg/graph.hpp"

namespace fcg::testing {

inline FramedColoredGraph make(std::vector<std::uint8_t> framing,
                               std::initializer_list<Edge> edges = {}) {
  std::vector<Edge> es(edges);
  return FramedColoredGraph(std::move(framing), es);
}

inline constexpr EdgeColor R = EdgeColor::Red;
inline constexpr EdgeColor B = EdgeColor::Black;

inline FramedColoredGraph vertex(int f) { return make({static_cast<std::uint8_t>(f)}); }

inline FramedColoredGraph path(std::vector<std::uint8_t> framing, EdgeColor c = R) {
  FramedColoredGraph g(framing);
  for (int i = 0; i + 1 < g.size(); ++i) g.set_edge(i, i + 1, c);
  return g;
}

inline FramedColoredGraph cycle(std::vector<std::uint8_t> framing, EdgeColor c = R) {
  auto g = path(framing, c);
  g.set_edge(0, g.size() - 1, c);
  return g;
}

inline FramedColoredGraph complete(int n, EdgeColor c = R) {
  FramedColoredGraph g(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) g.set_edge(i, j, c);
  }
  return g;
}

inline FramedColoredGraph permuted(const FramedColoredGraph& g, const std::vector<int>& p) {
  FramedColoredGraph h(g.size());
  for (int v = 0; v < g.size(); ++v) h.set_framing(p[v], g.framing(v));
  for (const auto& e : g.edges()) h.set_edge(p[e.u], p[e.v], e.color);
  return h;
}

inline FramedColoredGraph random_graph(std::mt19937_64& rng, int n, Palette palette) {
  FramedColoredGraph g(n);
  std::uniform_int_distribution<int> bit(0, 1);
  std::uniform_int_distribution<int> color(0, 2);
  for (int v = 0; v < n; ++v) g.set_framing(v, bit(rng));
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      auto c = static_cast<EdgeColor>(color(rng));
      if (palette.allows(c)) g.set_edge(i, j, c);
    }
  }
  return g;
}

inline std::vector<int> random_permutation(std::mt19937_64& rng, int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

/// Exhaustive canonical form: the smallest labeled encoding over all n!
/// relabelings. Independent of the refinement-based search.
inline std::string brute_canonical(const FramedColoredGraph& g) {
  std::vector<int> p(g.size());
  std::iota(p.begin(), p.end(), 0);
  std::string best;
  bool first = true;
  do {
    auto code = encode_labeled(permuted(g, p));
    if (first || code < best) best = std::move(code);
    first = false;
  } while (std::next_permutation(p.begin(), p.end()));
  return best;
}

/// Every labeled graph on n vertices with edges from `palette`.
inline std::vector<FramedColoredGraph> all_labeled(int n, Palette palette) {
  std::vector<EdgeColor> colors{EdgeColor::None};
  if (palette.black) colors.push_back(EdgeColor::Black);
  if (palette.red) colors.push_back(EdgeColor::Red);
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  }
  std::vector<FramedColoredGraph> out;
  long long edge_states = 1;
  for (std::size_t i = 0; i < pairs.size(); ++i) edge_states *= static_cast<long long>(colors.size());
  for (int fr = 0; fr < (1 << n); ++fr) {
    for (long long s = 0; s < edge_states; ++s) {
      FramedColoredGraph g(n);
      for (int v = 0; v < n; ++v) g.set_framing(v, (fr >> v) & 1);
      long long rest = s;
      for (const auto& [i, j] : pairs) {
        g.set_edge(i, j, colors[rest % static_cast<long long>(colors.size())]);
        rest /= static_cast<long long>(colors.size());
      }
      out.push_back(std::move(g));
    }
  }
  return out;
}

inline LinearCombination lc(std::initializer_list<std::pair<FramedColoredGraph, Scalar>> terms) {
  LinearCombination x;
  for (const auto& [g, c] : terms) add_graph(x, g, c);
  return x;
}

}  // namespace fcg::testing
