#include "fcg/invariants.hpp"

#include <functional>
#include <map>
#include <stdexcept>

namespace fcg {

namespace {

void require_red_only(const FramedColoredGraph& g) {
  if (g.edge_count(EdgeColor::Black) > 0) {
    throw std::invalid_argument("invariant defined on red-only graphs; got a black edge");
  }
}

long long brute_force_colorings(const FramedColoredGraph& g, int k) {
  const int n = g.size();
  const auto es = g.edges();
  std::vector<int> color(n, 0);
  long long count = 0;
  std::function<void(int)> place = [&](int v) {
    if (v == n) {
      ++count;
      return;
    }
    for (int c = 0; c < k; ++c) {
      bool ok = true;
      for (int w = 0; w < v && ok; ++w) ok = !(g.adjacent(v, w) && color[w] == c);
      if (!ok) continue;
      color[v] = c;
      place(v + 1);
    }
  };
  place(0);
  return count;
}

// P(G) = P(G − e) − P(G / e), memoized on canonical keys.
long long deletion_contraction(const FramedColoredGraph& g, int k,
                               std::map<CanonicalKey, long long>& memo) {
  const auto es = g.edges();
  if (es.empty()) {
    long long p = 1;
    for (int i = 0; i < g.size(); ++i) p *= k;
    return p;
  }
  FramedColoredGraph plain(g.size());
  for (const auto& e : es) plain.set_edge(e.u, e.v, EdgeColor::Red);
  const auto key = canonical_form(plain);
  if (auto it = memo.find(key); it != memo.end()) return it->second;

  const auto e = es.front();
  auto deleted = plain;
  deleted.set_edge(e.u, e.v, EdgeColor::None);
  std::vector<int> keep;
  for (int w = 0; w < g.size(); ++w) {
    if (w != e.v) keep.push_back(w);
  }
  auto contracted = full_subgraph(plain, keep);
  const int merged = e.u < e.v ? e.u : e.u - 1;
  for (int i = 0; i < static_cast<int>(keep.size()); ++i) {
    if (keep[i] != e.u && plain.adjacent(e.v, keep[i])) {
      contracted.set_edge(merged, i, EdgeColor::Red);
    }
  }
  const long long p = deletion_contraction(deleted, k, memo) -
                      deletion_contraction(contracted, k, memo);
  memo.emplace(key, p);
  return p;
}

}  // namespace

FramedChromaticValue FramedChromaticValue::monomial(int deg_s0, int deg_s1, const Scalar& c) {
  FramedChromaticValue p;
  p.terms_.add({deg_s0, deg_s1}, c);
  return p;
}

Scalar FramedChromaticValue::evaluate(const Scalar& s0, const Scalar& s1) const {
  Scalar total = 0;
  for (const auto& [e, c] : terms_) {
    Scalar t = c;
    for (int i = 0; i < e.first; ++i) t *= s0;
    for (int i = 0; i < e.second; ++i) t *= s1;
    total += t;
  }
  return total;
}

FramedChromaticValue& FramedChromaticValue::operator+=(const FramedChromaticValue& o) {
  terms_ += o.terms_;
  return *this;
}

FramedChromaticValue& FramedChromaticValue::operator*=(const Scalar& c) {
  terms_ *= c;
  return *this;
}

FramedChromaticValue operator*(const FramedChromaticValue& a, const FramedChromaticValue& b) {
  FramedChromaticValue out;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      out.terms_.add({ea.first + eb.first, ea.second + eb.second}, ca * cb);
    }
  }
  return out;
}

std::string to_string(const FramedChromaticValue& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    Scalar mag = abs(c);
    if (first) {
      if (sgn(c) < 0) out += "-";
    } else {
      out += sgn(c) < 0 ? " - " : " + ";
    }
    first = false;
    std::string mono;
    auto power = [&](const char* name, int d) {
      if (d == 0) return;
      if (!mono.empty()) mono += "*";
      mono += name;
      if (d > 1) mono += "^" + std::to_string(d);
    };
    power("s0", e.first);
    power("s1", e.second);
    if (mono.empty()) {
      out += to_string(mag);
    } else if (mag == 1) {
      out += mono;
    } else {
      out += to_string(mag) + "*" + mono;
    }
  }
  return out;
}

long long count_proper_colorings(const FramedColoredGraph& g, int k) {
  require_red_only(g);
  if (k < 0) throw std::invalid_argument("negative number of colors");
  if (g.size() <= 10) return brute_force_colorings(g, k);
  std::map<CanonicalKey, long long> memo;
  return deletion_contraction(g, k, memo);
}

Scalar w_invariant(const FramedColoredGraph& g, WBase base) {
  require_red_only(g);
  const int chi = euler_characteristic(g);
  const int b = base == WBase::MinusTwo ? -2 : 2;
  Scalar scale = 1;
  for (int i = 0; i < (chi < 0 ? -chi : chi); ++i) scale *= b;
  if (chi > 0) scale = Scalar(1) / scale;
  if (g.framing_sum() % 2 == 1) scale = -scale;
  return Scalar(static_cast<long>(count_proper_colorings(g, 3))) * scale;
}

Scalar w_invariant(const LinearCombination& x, WBase base) {
  Scalar total = 0;
  for (const auto& [k, c] : x) total += c * w_invariant(decode(k), base);
  return total;
}

FramedColoredGraph contract_red_edge(const FramedColoredGraph& g, int u, int v, int& sign) {
  if (g.edge(u, v) != EdgeColor::Red) throw std::invalid_argument("contraction needs a red edge");
  const int a = g.framing(u);
  const int b = g.framing(v);
  int common = 0;
  std::vector<int> keep;
  for (int w = 0; w < g.size(); ++w) {
    if (w == u || w == v) continue;
    keep.push_back(w);
    common += g.adjacent(u, w) && g.adjacent(v, w);
  }
  if ((1 + a * b + common) % 2 == 1) sign = -sign;
  auto out = full_subgraph(g, keep);
  FramedColoredGraph merged(1);
  merged.set_framing(0, a | b);
  out = disjoint_union(out, merged);
  const int m = out.size() - 1;
  for (int i = 0; i < static_cast<int>(keep.size()); ++i) {
    if (g.adjacent(u, keep[i]) || g.adjacent(v, keep[i])) out.set_edge(m, i, EdgeColor::Red);
  }
  return out;
}

FramedChromaticValue framed_chromatic(const FramedColoredGraph& g) {
  require_red_only(g);
  auto h = g;
  int sign = 1;
  for (;;) {
    const auto es = h.edges();
    if (es.empty()) break;
    h = contract_red_edge(h, es.front().u, es.front().v, sign);
  }
  int zeros = 0;
  for (auto f : h.framings()) zeros += f == 0;
  return FramedChromaticValue::monomial(zeros, h.size() - zeros, sign);
}

FramedChromaticValue framed_chromatic(const LinearCombination& x) {
  FramedChromaticValue total;
  for (const auto& [k, c] : x) {
    auto v = framed_chromatic(decode(k));
    v *= c;
    total += v;
  }
  return total;
}

std::set<std::string> framed_chromatic_all_orders(const FramedColoredGraph& g) {
  require_red_only(g);
  std::set<std::string> values;
  std::function<void(const FramedColoredGraph&, int)> walk = [&](const FramedColoredGraph& h,
                                                                 int sign) {
    const auto es = h.edges();
    if (es.empty()) {
      int zeros = 0;
      for (auto f : h.framings()) zeros += f == 0;
      values.insert(to_string(FramedChromaticValue::monomial(zeros, h.size() - zeros, sign)));
      return;
    }
    for (const auto& e : es) {
      int s = sign;
      auto next = contract_red_edge(h, e.u, e.v, s);
      walk(next, s);
    }
  };
  walk(g, 1);
  return values;
}

}  // namespace fcg
