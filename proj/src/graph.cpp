#include "fcg/graph.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace fcg {

char color_letter(EdgeColor c) {
  switch (c) {
    case EdgeColor::Black:
      return 'b';
    case EdgeColor::Red:
      return 'r';
    case EdgeColor::None:
      break;
  }
  return '-';
}

FramedColoredGraph::FramedColoredGraph(int n)
    : FramedColoredGraph(std::vector<std::uint8_t>(n < 0 ? 0 : n, 0)) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
}

FramedColoredGraph::FramedColoredGraph(std::vector<std::uint8_t> framing)
    : n_(static_cast<int>(framing.size())),
      framing_(std::move(framing)),
      adj_(static_cast<std::size_t>(n_) * n_, EdgeColor::None) {
  for (auto& f : framing_) {
    if (f > 1) throw std::invalid_argument("framing must be 0 or 1");
  }
}

FramedColoredGraph::FramedColoredGraph(std::vector<std::uint8_t> framing,
                                       std::span<const Edge> edges)
    : FramedColoredGraph(std::move(framing)) {
  for (const auto& e : edges) {
    if (e.color == EdgeColor::None) throw std::invalid_argument("edge without color");
    if (adjacent(e.u, e.v)) throw std::invalid_argument("multi-edge");
    set_edge(e.u, e.v, e.color);
  }
}

int FramedColoredGraph::check(int v) const {
  if (v < 0 || v >= n_) {
    throw std::out_of_range("vertex index " + std::to_string(v) + " out of range for n=" +
                            std::to_string(n_));
  }
  return v;
}

void FramedColoredGraph::set_framing(int v, int f) {
  if (f != 0 && f != 1) throw std::invalid_argument("framing must be 0 or 1");
  framing_[check(v)] = static_cast<std::uint8_t>(f);
}

void FramedColoredGraph::set_edge(int u, int v, EdgeColor c) {
  check(u);
  check(v);
  if (u == v) throw std::invalid_argument("self-loop");
  adj_[u * n_ + v] = c;
  adj_[v * n_ + u] = c;
}

std::vector<Edge> FramedColoredGraph::edges() const {
  std::vector<Edge> out;
  for (int u = 0; u < n_; ++u) {
    for (int v = u + 1; v < n_; ++v) {
      auto c = adj_[u * n_ + v];
      if (c != EdgeColor::None) out.push_back({u, v, c});
    }
  }
  return out;
}

int FramedColoredGraph::edge_count() const {
  int m = 0;
  for (int u = 0; u < n_; ++u) {
    for (int v = u + 1; v < n_; ++v) m += adj_[u * n_ + v] != EdgeColor::None;
  }
  return m;
}

int FramedColoredGraph::edge_count(EdgeColor c) const {
  int m = 0;
  for (int u = 0; u < n_; ++u) {
    for (int v = u + 1; v < n_; ++v) m += adj_[u * n_ + v] == c;
  }
  return m;
}

int FramedColoredGraph::framing_sum() const {
  return std::accumulate(framing_.begin(), framing_.end(), 0);
}

bool FramedColoredGraph::uses_only(Palette p) const {
  for (auto c : adj_) {
    if (!p.allows(c)) return false;
  }
  return true;
}

bool FramedColoredGraph::is_connected() const {
  // The empty graph has zero components and is not connected.
  return component_vertex_sets(*this).size() == 1;
}

std::string to_string(const FramedColoredGraph& g) {
  std::ostringstream os;
  os << "n=" << g.size() << " f=";
  for (auto f : g.framings()) os << int(f);
  os << " E={";
  bool first = true;
  for (const auto& e : g.edges()) {
    if (!first) os << ',';
    first = false;
    os << e.u << e.v << color_letter(e.color);
  }
  os << '}';
  return os.str();
}

std::vector<std::vector<int>> component_vertex_sets(const FramedColoredGraph& g) {
  const int n = g.size();
  std::vector<int> comp(n, -1);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<int> members{s};
    comp[s] = static_cast<int>(out.size());
    for (std::size_t i = 0; i < members.size(); ++i) {
      int x = members[i];
      for (int y = 0; y < n; ++y) {
        if (comp[y] < 0 && g.adjacent(x, y)) {
          comp[y] = comp[s];
          members.push_back(y);
        }
      }
    }
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  return out;
}

std::vector<FramedColoredGraph> connected_components(const FramedColoredGraph& g) {
  std::vector<FramedColoredGraph> out;
  for (const auto& vs : component_vertex_sets(g)) out.push_back(full_subgraph(g, vs));
  return out;
}

int euler_characteristic(const FramedColoredGraph& g) { return g.size() - g.edge_count(); }

FramedColoredGraph full_subgraph(const FramedColoredGraph& g, std::span<const int> vertices) {
  std::vector<std::uint8_t> fr;
  fr.reserve(vertices.size());
  std::vector<bool> seen(g.size(), false);
  for (int v : vertices) {
    fr.push_back(static_cast<std::uint8_t>(g.framing(v)));
    if (seen[v]) throw std::invalid_argument("repeated vertex in subset");
    seen[v] = true;
  }
  FramedColoredGraph h(std::move(fr));
  const int k = static_cast<int>(vertices.size());
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      auto c = g.edge(vertices[i], vertices[j]);
      if (c != EdgeColor::None) h.set_edge(i, j, c);
    }
  }
  return h;
}

FramedColoredGraph full_subgraph_mask(const FramedColoredGraph& g, std::uint64_t mask) {
  if (g.size() < 64 && (mask >> g.size()) != 0) {
    throw std::out_of_range("vertex mask exceeds graph size");
  }
  std::vector<int> vs;
  for (int v = 0; v < g.size(); ++v) {
    if (mask >> v & 1U) vs.push_back(v);
  }
  return full_subgraph(g, vs);
}

void for_each_spanning_subgraph(const FramedColoredGraph& g,
                                const std::function<void(const FramedColoredGraph&)>& visit) {
  const auto es = g.edges();
  if (es.size() >= 63) throw std::length_error("too many edges for subset enumeration");
  const std::uint64_t count = std::uint64_t{1} << es.size();
  FramedColoredGraph h(g.framings());
  for (std::uint64_t s = 0; s < count; ++s) {
    for (std::size_t i = 0; i < es.size(); ++i) {
      h.set_edge(es[i].u, es[i].v, (s >> i & 1U) ? es[i].color : EdgeColor::None);
    }
    visit(h);
  }
}

std::vector<FramedColoredGraph> spanning_subgraphs(const FramedColoredGraph& g) {
  std::vector<FramedColoredGraph> out;
  for_each_spanning_subgraph(g, [&](const FramedColoredGraph& h) { out.push_back(h); });
  return out;
}

FramedColoredGraph disjoint_union(const FramedColoredGraph& g, const FramedColoredGraph& h) {
  auto fr = g.framings();
  fr.insert(fr.end(), h.framings().begin(), h.framings().end());
  FramedColoredGraph out(std::move(fr));
  for (const auto& e : g.edges()) out.set_edge(e.u, e.v, e.color);
  const int off = g.size();
  for (const auto& e : h.edges()) out.set_edge(e.u + off, e.v + off, e.color);
  return out;
}

FramedColoredGraph add_leaf(const FramedColoredGraph& g, int w, int fr, EdgeColor color) {
  if (color == EdgeColor::None) throw std::invalid_argument("leaf edge needs a color");
  if (w < 0 || w >= g.size()) throw std::out_of_range("leaf attachment vertex out of range");
  FramedColoredGraph leaf(1);
  leaf.set_framing(0, fr);
  auto out = disjoint_union(g, leaf);
  out.set_edge(w, g.size(), color);
  return out;
}

FramedColoredGraph nabla(const FramedColoredGraph& g, int u, const FramedColoredGraph& h, int v) {
  return nabla(g, u, h, v, g.framing(u) ^ h.framing(v));
}

FramedColoredGraph nabla(const FramedColoredGraph& g, int u, const FramedColoredGraph& h, int v,
                         int merged_framing) {
  if (u < 0 || u >= g.size() || v < 0 || v >= h.size()) {
    throw std::out_of_range("nabla vertex out of range");
  }
  // h's vertex v maps to u; the others to g.size() + (index skipping v).
  std::vector<int> map(h.size());
  int next = g.size();
  for (int x = 0; x < h.size(); ++x) map[x] = (x == v) ? u : next++;
  auto fr = g.framings();
  for (int x = 0; x < h.size(); ++x) {
    if (x != v) fr.push_back(static_cast<std::uint8_t>(h.framing(x)));
  }
  FramedColoredGraph out(std::move(fr));
  out.set_framing(u, merged_framing);
  for (const auto& e : g.edges()) out.set_edge(e.u, e.v, e.color);
  for (const auto& e : h.edges()) out.set_edge(map[e.u], map[e.v], e.color);
  return out;
}

FramedColoredGraph join_components(const FramedColoredGraph& g) {
  auto out = g;
  const auto comps = component_vertex_sets(g);
  for (std::size_t i = 0; i < comps.size(); ++i) {
    for (std::size_t j = i + 1; j < comps.size(); ++j) {
      for (int x : comps[i]) {
        for (int y : comps[j]) out.set_edge(x, y, EdgeColor::Red);
      }
    }
  }
  return out;
}

}  // namespace fcg
