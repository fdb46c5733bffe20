#include "fcg/bialgebra.hpp"

#include <optional>
#include <stdexcept>

namespace fcg {

CanonicalKey product(const CanonicalKey& a, const CanonicalKey& b) {
  return canonical_form(disjoint_union(decode(a), decode(b)));
}

LinearCombination product(const LinearCombination& a, const LinearCombination& b) {
  LinearCombination out;
  for (const auto& [ka, ca] : a) {
    for (const auto& [kb, cb] : b) out.add(product(ka, kb), ca * cb);
  }
  return out;
}

Tensor product(const Tensor& a, const Tensor& b) {
  Tensor out;
  for (const auto& [ka, ca] : a) {
    for (const auto& [kb, cb] : b) {
      out.add({product(ka.first, kb.first), product(ka.second, kb.second)}, ca * cb);
    }
  }
  return out;
}

namespace {

// Visits (p, Γ_p, Γ_q) for every admissible vertex bipartition, with the
// canonical key of each vertex subset computed once.
template <class Visit>
void for_each_split(const FramedColoredGraph& g, CoproductRule rule, bool skip_trivial,
                    Visit&& visit) {
  const int n = g.size();
  if (n >= 30) throw std::length_error("graph too large for coproduct");
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;
  std::vector<std::uint64_t> red(n, 0);
  for (const auto& e : g.edges()) {
    if (e.color == EdgeColor::Red) {
      red[e.u] |= std::uint64_t{1} << e.v;
      red[e.v] |= std::uint64_t{1} << e.u;
    }
  }
  std::vector<std::optional<CanonicalKey>> cache(full + 1);
  auto key = [&](std::uint64_t m) -> const CanonicalKey& {
    if (!cache[m]) cache[m] = canonical_form(full_subgraph_mask(g, m));
    return *cache[m];
  };
  for (std::uint64_t p = 0; p <= full; ++p) {
    if (skip_trivial && (p == 0 || p == full)) continue;
    if (rule == CoproductRule::Colored) {
      bool cut = false;
      for (int v = 0; v < n && !cut; ++v) {
        if ((p >> v & 1U) && (red[v] & ~p)) cut = true;
      }
      if (cut) continue;
    }
    visit(key(p), key(full & ~p));
  }
}

}  // namespace

Tensor coproduct(const CanonicalKey& g, CoproductRule rule) {
  Tensor out;
  for_each_split(decode(g), rule, false,
                 [&](const CanonicalKey& a, const CanonicalKey& b) { out.add({a, b}, 1); });
  return out;
}

Tensor coproduct(const LinearCombination& x, CoproductRule rule) {
  Tensor out;
  for (const auto& [k, c] : x) out.axpy(c, coproduct(k, rule));
  return out;
}

Scalar counit(const LinearCombination& x) { return x.coeff(CanonicalKey()); }

LinearCombination counit_left(const Tensor& t) {
  LinearCombination out;
  for (const auto& [k, c] : t) {
    if (k.first == CanonicalKey()) out.add(k.second, c);
  }
  return out;
}

LinearCombination counit_right(const Tensor& t) {
  LinearCombination out;
  for (const auto& [k, c] : t) {
    if (k.second == CanonicalKey()) out.add(k.first, c);
  }
  return out;
}

Tensor3 coproduct_left_twice(const LinearCombination& x, CoproductRule rule) {
  Tensor3 out;
  for (const auto& [k, c] : coproduct(x, rule)) {
    for (const auto& [k2, c2] : coproduct(k.first, rule)) {
      out.add({k2.first, k2.second, k.second}, c * c2);
    }
  }
  return out;
}

Tensor3 coproduct_right_twice(const LinearCombination& x, CoproductRule rule) {
  Tensor3 out;
  for (const auto& [k, c] : coproduct(x, rule)) {
    for (const auto& [k2, c2] : coproduct(k.second, rule)) {
      out.add({k.first, k2.first, k2.second}, c * c2);
    }
  }
  return out;
}

BialgebraContext BialgebraContext::free(Palette palette, CoproductRule rule, int max_n,
                                        const std::function<bool(const FramedColoredGraph&)>& keep) {
  BialgebraContext ctx;
  ctx.palette = palette;
  ctx.rule = rule;
  for (int n = 0; n <= max_n; ++n) {
    auto keys = enumerate_graphs(n, palette);
    if (keep) std::erase_if(keys, [&](const CanonicalKey& k) { return !keep(decode(k)); });
    ctx.ambient[n] = std::move(keys);
  }
  return ctx;
}

const std::vector<CanonicalKey>& BialgebraContext::ambient_basis(int n) const {
  auto it = ambient.find(n);
  if (it == ambient.end()) {
    throw std::out_of_range("grading " + std::to_string(n) + " not in bialgebra context");
  }
  return it->second;
}

std::vector<CanonicalKey> BialgebraContext::quotient_basis(int n) const {
  std::vector<CanonicalKey> out;
  auto rel = relations.find(n);
  for (const auto& k : ambient_basis(n)) {
    if (rel == relations.end() || !rel->second.is_pivot(k)) out.push_back(k);
  }
  return out;
}

LinearCombination BialgebraContext::normal_form(const LinearCombination& x) const {
  if (relations.empty()) return x;
  std::map<int, LinearCombination> parts;
  for (const auto& [k, c] : x) parts[k.vertex_count()].add(k, c);
  LinearCombination out;
  for (auto& [n, part] : parts) {
    auto rel = relations.find(n);
    out += rel == relations.end() ? part : rel->second.reduce(part);
  }
  return out;
}

Tensor BialgebraContext::normal_form(const Tensor& t) const {
  if (relations.empty()) return t;
  Tensor out;
  for (const auto& [k, c] : t) {
    out.axpy(c, tensor(normal_form(LinearCombination(k.first)),
                       normal_form(LinearCombination(k.second))));
  }
  return out;
}

Tensor reduced_coproduct(const LinearCombination& x, const BialgebraContext& ctx) {
  if (homogeneous_grading(x) == -2) throw std::invalid_argument("inhomogeneous element");
  Tensor out;
  for (const auto& [k, c] : x) {
    for_each_split(decode(k), ctx.rule, true,
                   [&](const CanonicalKey& a, const CanonicalKey& b) { out.add({a, b}, c); });
  }
  return ctx.normal_form(out);
}

Tensor reduced_coproduct(const LinearCombination& x, CoproductRule rule) {
  BialgebraContext ctx;
  ctx.rule = rule;
  return reduced_coproduct(x, ctx);
}

bool is_primitive(const LinearCombination& x, const BialgebraContext& ctx) {
  return reduced_coproduct(x, ctx).is_zero();
}

bool is_primitive(const LinearCombination& x, CoproductRule rule) {
  return reduced_coproduct(x, rule).is_zero();
}

std::vector<LinearCombination> primitive_basis(int n, const BialgebraContext& ctx) {
  if (n == 0) return {};
  std::vector<std::pair<CanonicalKey, Tensor>> images;
  for (const auto& q : ctx.quotient_basis(n)) {
    images.emplace_back(q, reduced_coproduct(LinearCombination(q), ctx));
  }
  return kernel(images);
}

int primitive_dimension(int n, const BialgebraContext& ctx) {
  return static_cast<int>(primitive_basis(n, ctx).size());
}

std::vector<long long> symmetric_algebra_dimensions(const std::vector<long long>& primitive,
                                                    int max_n) {
  std::vector<long long> series(max_n + 1, 0);
  series[0] = 1;
  for (int k = 1; k <= max_n && k < static_cast<int>(primitive.size()); ++k) {
    const long long p = primitive[k];
    if (p == 0) continue;
    // Multiply by (1 - x^k)^(-p) = sum_j C(p + j - 1, j) x^(k j).
    std::vector<long long> next(max_n + 1, 0);
    for (int i = 0; i <= max_n; ++i) {
      if (series[i] == 0) continue;
      long long binom = 1;
      for (int j = 0; i + k * j <= max_n; ++j) {
        if (j > 0) binom = binom * (p + j - 1) / j;
        next[i + k * j] += series[i] * binom;
      }
    }
    series = std::move(next);
  }
  return series;
}

}  // namespace fcg
