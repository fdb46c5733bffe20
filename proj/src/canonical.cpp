#include "fcg/canonical.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace fcg {

namespace {

class BitWriter {
 public:
  explicit BitWriter(std::string& out) : out_(out) {}
  void put(unsigned value, int width) {
    for (int b = width - 1; b >= 0; --b) {
      cur_ = static_cast<unsigned char>(cur_ << 1 | (value >> b & 1U));
      if (++used_ == 8) flush();
    }
  }
  void finish() {
    if (used_ > 0) {
      cur_ = static_cast<unsigned char>(cur_ << (8 - used_));
      flush();
    }
  }

 private:
  void flush() {
    out_.push_back(static_cast<char>(cur_));
    cur_ = 0;
    used_ = 0;
  }
  std::string& out_;
  unsigned char cur_ = 0;
  int used_ = 0;
};

class BitReader {
 public:
  BitReader(const std::string& in, std::size_t pos) : in_(in), pos_(pos) {}
  unsigned get(int width) {
    unsigned v = 0;
    for (int b = 0; b < width; ++b) {
      if (pos_ >= in_.size()) throw std::invalid_argument("truncated canonical key");
      unsigned char byte = static_cast<unsigned char>(in_[pos_]);
      v = v << 1 | (byte >> (7 - bit_) & 1U);
      if (++bit_ == 8) {
        bit_ = 0;
        ++pos_;
      }
    }
    return v;
  }

 private:
  const std::string& in_;
  std::size_t pos_;
  int bit_ = 0;
};

// `order[i]` is the original vertex receiving label i.
std::string encode_order(const FramedColoredGraph& g, const std::vector<int>& order) {
  const int n = g.size();
  std::string out;
  out.reserve(2 + (n + 7) / 8 + (n * (n - 1) / 4 + 7) / 8);
  out.push_back(static_cast<char>(n));
  out.push_back(static_cast<char>(255 - g.edge_count()));
  BitWriter w(out);
  for (int i = 0; i < n; ++i) w.put(g.framing(order[i]), 1);
  w.finish();
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) w.put(static_cast<unsigned>(g.edge(order[i], order[j])), 2);
  }
  w.finish();
  return out;
}

class Canonizer {
 public:
  explicit Canonizer(const FramedColoredGraph& g) : g_(g), n_(g.size()) {}

  std::string run() {
    std::vector<int> colors(n_);
    for (int v = 0; v < n_; ++v) colors[v] = g_.framing(v);
    search(std::move(colors));
    return best_;
  }

 private:
  // Equitable refinement; colors stay dense 0..k-1 and the new order refines
  // the old one, so the result is an ordered partition invariant under
  // isomorphism. Returns the number of cells.
  int refine(std::vector<int>& colors) const {
    int cells = -1;
    std::vector<std::vector<int>> sig(n_);
    std::vector<int> idx(n_);
    for (;;) {
      for (int v = 0; v < n_; ++v) {
        auto& s = sig[v];
        s.clear();
        s.push_back(colors[v]);
        for (int w = 0; w < n_; ++w) {
          auto c = g_.edge(v, w);
          if (c != EdgeColor::None) s.push_back(colors[w] * 4 + static_cast<int>(c));
        }
        std::sort(s.begin() + 1, s.end());
      }
      for (int v = 0; v < n_; ++v) idx[v] = v;
      std::sort(idx.begin(), idx.end(), [&](int a, int b) { return sig[a] < sig[b]; });
      int rank = 0;
      for (int i = 0; i < n_; ++i) {
        if (i > 0 && sig[idx[i]] != sig[idx[i - 1]]) ++rank;
        colors[idx[i]] = rank;
      }
      const int now = n_ == 0 ? 0 : rank + 1;
      if (now == cells) return now;
      cells = now;
    }
  }

  bool twins(int a, int b) const {
    if (g_.framing(a) != g_.framing(b)) return false;
    for (int x = 0; x < n_; ++x) {
      if (x != a && x != b && g_.edge(a, x) != g_.edge(b, x)) return false;
    }
    return true;
  }

  void search(std::vector<int> colors) {
    const int cells = refine(colors);
    if (cells == n_) {
      std::vector<int> order(n_);
      for (int v = 0; v < n_; ++v) order[colors[v]] = v;
      auto enc = encode_order(g_, order);
      if (!have_ || enc < best_) {
        best_ = std::move(enc);
        have_ = true;
      }
      return;
    }
    std::vector<int> count(cells, 0);
    for (int c : colors) ++count[c];
    int target = 0;
    while (count[target] == 1) ++target;

    std::vector<int> tried;
    for (int v = 0; v < n_; ++v) {
      if (colors[v] != target) continue;
      if (std::any_of(tried.begin(), tried.end(), [&](int t) { return twins(t, v); })) continue;
      tried.push_back(v);
      std::vector<int> next(n_);
      for (int x = 0; x < n_; ++x) next[x] = 2 * colors[x] + (x == v ? 0 : 1);
      search(std::move(next));
    }
  }

  const FramedColoredGraph& g_;
  int n_;
  std::string best_;
  bool have_ = false;
};

}  // namespace

CanonicalKey::CanonicalKey() : bytes_(encode_labeled(FramedColoredGraph())) {}

CanonicalKey::CanonicalKey(std::string bytes) : bytes_(std::move(bytes)) {
  if (bytes_.size() < 2) throw std::invalid_argument("canonical key too short");
}

std::string CanonicalKey::hex() const {
  static const char* digits = "0123456789abcdef";
  std::string out;
  for (unsigned char c : bytes_) {
    out.push_back(digits[c >> 4]);
    out.push_back(digits[c & 15]);
  }
  return out;
}

std::string encode_labeled(const FramedColoredGraph& g) {
  std::vector<int> order(g.size());
  for (int v = 0; v < g.size(); ++v) order[v] = v;
  return encode_order(g, order);
}

CanonicalKey canonical_form(const FramedColoredGraph& g) {
  if (g.size() > kMaxCanonicalVertices) {
    throw std::length_error("graph too large for canonical keys");
  }
  return CanonicalKey(Canonizer(g).run());
}

FramedColoredGraph decode(const CanonicalKey& key) {
  const auto& b = key.bytes();
  const int n = key.vertex_count();
  std::vector<std::uint8_t> fr(n);
  BitReader frames(b, 2);
  for (int i = 0; i < n; ++i) fr[i] = static_cast<std::uint8_t>(frames.get(1));
  FramedColoredGraph g(std::move(fr));
  BitReader colors(b, 2 + static_cast<std::size_t>((n + 7) / 8));
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      auto c = colors.get(2);
      if (c > 2) throw std::invalid_argument("bad edge color in canonical key");
      if (c != 0) g.set_edge(i, j, static_cast<EdgeColor>(c));
    }
  }
  if (g.edge_count() != key.edge_count()) throw std::invalid_argument("edge count mismatch");
  return g;
}

std::vector<CanonicalKey> enumerate_graphs(int n, Palette palette, bool connected_only) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  std::vector<EdgeColor> states{EdgeColor::None};
  if (palette.black) states.push_back(EdgeColor::Black);
  if (palette.red) states.push_back(EdgeColor::Red);

  // Every graph on k+1 vertices is a graph on k vertices plus one vertex.
  std::set<CanonicalKey> level{CanonicalKey()};
  for (int k = 0; k < n; ++k) {
    std::set<CanonicalKey> next;
    for (const auto& key : level) {
      const auto base = decode(key);
      std::size_t combos = 1;
      for (int i = 0; i < k; ++i) combos *= states.size();
      for (int f = 0; f < 2; ++f) {
        FramedColoredGraph g(1);
        g.set_framing(0, f);
        g = disjoint_union(base, g);
        for (std::size_t code = 0; code < combos; ++code) {
          std::size_t c = code;
          for (int i = 0; i < k; ++i) {
            g.set_edge(i, k, states[c % states.size()]);
            c /= states.size();
          }
          next.insert(canonical_form(g));
        }
      }
    }
    level = std::move(next);
  }
  std::vector<CanonicalKey> out;
  for (const auto& key : level) {
    if (!connected_only || decode(key).is_connected()) out.push_back(key);
  }
  return out;
}

}  // namespace fcg
