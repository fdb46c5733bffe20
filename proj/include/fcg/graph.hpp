#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace fcg {

enum class EdgeColor : std::uint8_t { None = 0, Black = 1, Red = 2 };

char color_letter(EdgeColor c);

/// Which edge colors a graded basis may use.
struct Palette {
  bool black = false;
  bool red = false;

  static constexpr Palette black_only() { return {true, false}; }
  static constexpr Palette red_only() { return {false, true}; }
  static constexpr Palette both() { return {true, true}; }

  bool allows(EdgeColor c) const {
    return c == EdgeColor::None || (c == EdgeColor::Black && black) ||
           (c == EdgeColor::Red && red);
  }
  bool operator==(const Palette&) const = default;
};

struct Edge {
  int u;
  int v;
  EdgeColor color;
  bool operator==(const Edge&) const = default;
};

/// Simple graph with a framing in F_2 on every vertex and a black/red color
/// on every edge. Stored as a dense symmetric color matrix; graphs here have
/// at most a few dozen vertices.
class FramedColoredGraph {
 public:
  FramedColoredGraph() = default;
  explicit FramedColoredGraph(int n);
  explicit FramedColoredGraph(std::vector<std::uint8_t> framing);
  FramedColoredGraph(std::vector<std::uint8_t> framing, std::span<const Edge> edges);

  int size() const { return n_; }
  bool empty() const { return n_ == 0; }

  int framing(int v) const { return framing_[check(v)]; }
  const std::vector<std::uint8_t>& framings() const { return framing_; }
  void set_framing(int v, int f);

  EdgeColor edge(int u, int v) const { return adj_[check(u) * n_ + check(v)]; }
  bool adjacent(int u, int v) const { return edge(u, v) != EdgeColor::None; }
  void set_edge(int u, int v, EdgeColor c);

  std::vector<Edge> edges() const;
  int edge_count() const;
  int edge_count(EdgeColor c) const;
  int framing_sum() const;
  bool uses_only(Palette p) const;
  bool is_connected() const;

  bool operator==(const FramedColoredGraph&) const = default;

 private:
  int check(int v) const;

  int n_ = 0;
  std::vector<std::uint8_t> framing_;
  std::vector<EdgeColor> adj_;
};

std::string to_string(const FramedColoredGraph& g);

std::vector<FramedColoredGraph> connected_components(const FramedColoredGraph& g);
std::vector<std::vector<int>> component_vertex_sets(const FramedColoredGraph& g);
int euler_characteristic(const FramedColoredGraph& g);

/// Induced subgraph on `vertices`, relabeled 0..k-1 in the given order.
FramedColoredGraph full_subgraph(const FramedColoredGraph& g, std::span<const int> vertices);
/// Same, selecting vertices by bitmask (bit i = vertex i).
FramedColoredGraph full_subgraph_mask(const FramedColoredGraph& g, std::uint64_t mask);

/// Calls `visit` with each of the 2^|E| spanning subgraphs.
void for_each_spanning_subgraph(const FramedColoredGraph& g,
                                const std::function<void(const FramedColoredGraph&)>& visit);
std::vector<FramedColoredGraph> spanning_subgraphs(const FramedColoredGraph& g);

FramedColoredGraph disjoint_union(const FramedColoredGraph& g, const FramedColoredGraph& h);

/// New vertex of framing `fr` joined to `w`; it gets index g.size().
FramedColoredGraph add_leaf(const FramedColoredGraph& g, int w, int fr,
                            EdgeColor color = EdgeColor::Red);

/// Identifies vertex u of g with vertex v of h. The merged vertex keeps
/// index u; h's remaining vertices follow g's in order. Merged framing is
/// f(u) + f(v) over F_2.
FramedColoredGraph nabla(const FramedColoredGraph& g, int u, const FramedColoredGraph& h, int v);
FramedColoredGraph nabla(const FramedColoredGraph& g, int u, const FramedColoredGraph& h, int v,
                         int merged_framing);

/// Join of the connected components: every pair of vertices lying in
/// different components gets a red edge.
FramedColoredGraph join_components(const FramedColoredGraph& g);

}  // namespace fcg
