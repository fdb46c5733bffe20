#pragma once

#include <compare>
#include <functional>
#include <string>
#include <vector>

#include "fcg/graph.hpp"

namespace fcg {

/// Identity of a framed colored graph up to framing- and color-preserving
/// isomorphism. The bytes are
///   [n] [255 - |E|] [framing bits, packed] [2-bit color per vertex pair, packed]
/// for the canonical relabeling, so comparing bytes orders keys first by
/// vertex count and then puts graphs with more edges first.
class CanonicalKey {
 public:
  CanonicalKey();  // the empty graph
  explicit CanonicalKey(std::string bytes);

  const std::string& bytes() const { return bytes_; }
  int vertex_count() const { return static_cast<unsigned char>(bytes_[0]); }
  int edge_count() const { return 255 - static_cast<unsigned char>(bytes_[1]); }
  std::string hex() const;

  auto operator<=>(const CanonicalKey&) const = default;
  bool operator==(const CanonicalKey&) const = default;

 private:
  std::string bytes_;
};

inline constexpr int kMaxCanonicalVertices = 22;

/// Minimal encoding over all labelings reachable by color refinement plus
/// individualization, with twin pruning. Exact for every graph; fast for the
/// small graphs used here.
CanonicalKey canonical_form(const FramedColoredGraph& g);

/// Encoding of `g` under its current labeling, without canonicalization.
std::string encode_labeled(const FramedColoredGraph& g);

/// The graph in canonical labeling.
FramedColoredGraph decode(const CanonicalKey& key);

/// One key per isomorphism class on exactly n vertices, edges drawn from
/// `palette`, all framings; sorted ascending.
std::vector<CanonicalKey> enumerate_graphs(int n, Palette palette, bool connected_only = false);

}  // namespace fcg

template <>
struct std::hash<fcg::CanonicalKey> {
  std::size_t operator()(const fcg::CanonicalKey& k) const noexcept {
    return std::hash<std::string>{}(k.bytes());
  }
};
