#include "fcg/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

#include "fcg/bialgebra.hpp"
#include "fcg/invariants.hpp"
#include "fcg/json_io.hpp"
#include "fcg/reduction.hpp"

namespace fcg {

namespace {

using Clock = std::chrono::steady_clock;

CheckResult timed(const std::function<CheckResult()>& body) {
  const auto start = Clock::now();
  CheckResult r = body();
  r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return r;
}

CheckResult pass(std::string name, std::string detail) {
  return {std::move(name), true, std::move(detail), std::nullopt, 0};
}

CheckResult fail(std::string name, std::string detail, nlohmann::json counterexample) {
  return {std::move(name), false, std::move(detail), std::move(counterexample), 0};
}

CheckResult fail(std::string name, std::string detail) {
  return {std::move(name), false, std::move(detail), std::nullopt, 0};
}

std::string bound(const std::string& what, int max_n) {
  return what + " (n <= " + std::to_string(max_n) + ")";
}

nlohmann::json key_json(const CanonicalKey& k) { return graph_to_json(decode(k)); }

Tensor map_tensor(const Tensor& t, const std::function<LinearCombination(const CanonicalKey&)>& f) {
  Tensor out;
  for (const auto& [kk, c] : t) out.axpy(c, tensor(f(kk.first), f(kk.second)));
  return out;
}

// Orbit count of framed simple graphs on n labeled vertices by Burnside's
// lemma: a permutation fixes 2^{#vertex cycles + #pair cycles} labelings.
long long burnside_framed_graphs(int n) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  long long total = 0;
  long long perms = 0;
  do {
    ++perms;
    std::vector<bool> seen(n, false);
    int vertex_cycles = 0;
    for (int i = 0; i < n; ++i) {
      if (seen[i]) continue;
      ++vertex_cycles;
      for (int j = i; !seen[j]; j = perm[j]) seen[j] = true;
    }
    std::map<std::pair<int, int>, bool> pair_seen;
    int pair_cycles = 0;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        if (pair_seen[{i, j}]) continue;
        ++pair_cycles;
        int a = i;
        int b = j;
        while (!pair_seen[{std::min(a, b), std::max(a, b)}]) {
          pair_seen[{std::min(a, b), std::max(a, b)}] = true;
          a = perm[a];
          b = perm[b];
        }
      }
    }
    total += 1LL << (vertex_cycles + pair_cycles);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total / perms;
}

std::vector<CanonicalKey> all_classes(int max_n, Palette p, int min_n = 0) {
  std::vector<CanonicalKey> out;
  for (int n = min_n; n <= max_n; ++n) {
    const auto keys = enumerate_graphs(n, p);
    out.insert(out.end(), keys.begin(), keys.end());
  }
  return out;
}

bool is_tree(const FramedColoredGraph& g) {
  return g.is_connected() && g.edge_count() == g.size() - 1;
}

std::vector<FramedColoredGraph> framing0_trees(int k) {
  std::vector<FramedColoredGraph> out;
  for (const auto& key : enumerate_graphs(k, Palette::red_only(), true)) {
    auto g = decode(key);
    if (is_tree(g) && g.framing_sum() == 0) out.push_back(std::move(g));
  }
  return out;
}

std::string join_counts(const std::vector<long long>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

// P4 or C4 as an unlabeled simple graph.
bool is_p4_or_c4(const FramedColoredGraph& g) {
  if (g.size() != 4 || !g.is_connected()) return false;
  for (int v = 0; v < 4; ++v) {
    int deg = 0;
    for (int w = 0; w < 4; ++w) deg += v != w && g.adjacent(v, w);
    if (deg > 2) return false;
  }
  return g.edge_count() == 3 || g.edge_count() == 4;
}

}  // namespace

bool SuiteReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
}

CheckResult check_psi_iota(int max_n) {
  const auto name = bound("psi o iota = id", max_n);
  long long count = 0;
  for (const auto& k : all_classes(max_n, Palette::black_only())) {
    const LinearCombination x(k);
    if (psi(iota(x)) != x) return fail(name, "differs on a class", key_json(k));
    ++count;
  }
  return pass(name, std::to_string(count) + " classes");
}

CheckResult check_psi_kills_ic(int max_n) {
  const auto name = bound("psi annihilates I_C generators", max_n);
  long long count = 0;
  for (int n = 2; n <= max_n; ++n) {
    for (const auto& gen : ic_generators(n)) {
      if (!psi(gen.element()).is_zero()) {
        return fail(name, "nonzero image", combination_to_json(gen.element()));
      }
      ++count;
    }
  }
  return pass(name, std::to_string(count) + " generators");
}

CheckResult check_rnf_kills_ic(int max_n) {
  const auto name = bound("red normal form annihilates I_C generators", max_n);
  long long count = 0;
  for (int n = 2; n <= max_n; ++n) {
    for (const auto& gen : ic_generators(n)) {
      if (!red_normal_form(gen.element()).is_zero()) {
        return fail(name, "nonzero normal form", combination_to_json(gen.element()));
      }
      ++count;
    }
  }
  return pass(name, std::to_string(count) + " generators");
}

CheckResult check_psi_coalgebra_map(int max_n) {
  const auto name = bound("psi intertwines the colored and Joni-Rota coproducts", max_n);
  long long count = 0;
  for (const auto& k : all_classes(max_n, Palette::both())) {
    const auto lhs = coproduct(psi(decode(k)), CoproductRule::JoniRota);
    const auto rhs = map_tensor(coproduct(k, CoproductRule::Colored),
                                [](const CanonicalKey& g) { return psi(decode(g)); });
    if (lhs != rhs) return fail(name, "coproducts differ", key_json(k));
    ++count;
  }
  return pass(name, std::to_string(count) + " classes");
}

CheckResult check_red_basis_dimension(int max_n) {
  const auto name = bound("red-only basis has the framed-graph class count", max_n);
  std::vector<long long> counts;
  for (int n = 0; n <= max_n; ++n) {
    const auto red = static_cast<long long>(enumerate_graphs(n, Palette::red_only()).size());
    const auto black = static_cast<long long>(enumerate_graphs(n, Palette::black_only()).size());
    const auto orbits = burnside_framed_graphs(n);
    if (red != black || red != orbits) {
      return fail(name, "n=" + std::to_string(n) + ": red " + std::to_string(red) + ", black " +
                            std::to_string(black) + ", orbit count " + std::to_string(orbits));
    }
    counts.push_back(red);
  }
  return pass(name, "dims " + join_counts(counts));
}

CheckResult check_pi_jr_formula(int max_n) {
  const auto name = bound("projection formula equals psi o pi_C o rnf o iota", max_n);
  long long count = 0;
  for (const auto& k : all_classes(max_n, Palette::black_only())) {
    if (pi_jr_formula(k) != pi_jr_composition(LinearCombination(k))) {
      return fail(name, "mismatch", key_json(k));
    }
    ++count;
  }
  return pass(name, std::to_string(count) + " classes");
}

CheckResult check_pi_jr_idempotent(int max_n) {
  const auto name = bound("projection is idempotent", max_n);
  long long count = 0;
  for (const auto& k : all_classes(max_n, Palette::black_only())) {
    const auto p = pi_jr_formula(k);
    if (pi_jr_formula(p) != p) return fail(name, "p(p(x)) != p(x)", key_json(k));
    ++count;
  }
  return pass(name, std::to_string(count) + " classes");
}

CheckResult check_pi_jr_kills_products(int max_n, std::uint64_t seed, int samples) {
  const auto name = bound("projection kills products of positive gradings", max_n);
  if (max_n < 2) return pass(name, "no products in range");
  std::mt19937_64 rng(seed);
  std::map<int, std::vector<CanonicalKey>> classes;
  for (int n = 1; n < max_n; ++n) classes[n] = enumerate_graphs(n, Palette::black_only());
  auto pick = [&](int n) {
    const auto& v = classes[n];
    return v[std::uniform_int_distribution<std::size_t>(0, v.size() - 1)(rng)];
  };
  for (int s = 0; s < samples; ++s) {
    const int na = std::uniform_int_distribution<int>(1, max_n - 1)(rng);
    const int nb = std::uniform_int_distribution<int>(1, max_n - na)(rng);
    const auto ab = product(pick(na), pick(nb));
    if (!pi_jr_formula(ab).is_zero()) return fail(name, "nonzero on a product", key_json(ab));
  }
  return pass(name, std::to_string(samples) + " samples, seed " + std::to_string(seed));
}

CheckResult check_pi_jr_primitive(int max_n) {
  const auto name = bound("projection lands in Joni-Rota primitives", max_n);
  long long count = 0;
  for (const auto& k : all_classes(max_n, Palette::black_only(), 1)) {
    if (!is_primitive(pi_jr_formula(k), CoproductRule::JoniRota)) {
      return fail(name, "image not primitive", key_json(k));
    }
    ++count;
  }
  return pass(name, std::to_string(count) + " classes");
}

namespace {

template <class Check>
CheckResult over_both_rules(const std::string& name, int max_n, Check&& check) {
  long long count = 0;
  for (auto [palette, rule] : {std::pair{Palette::black_only(), CoproductRule::JoniRota},
                               std::pair{Palette::both(), CoproductRule::Colored}}) {
    for (const auto& k : all_classes(max_n, palette)) {
      if (!check(LinearCombination(k), rule)) return fail(name, "fails on a class", key_json(k));
      ++count;
    }
  }
  return pass(name, std::to_string(count) + " classes");
}

}  // namespace

CheckResult check_coassociativity(int max_n) {
  return over_both_rules(bound("coassociativity", max_n), max_n,
                         [](const LinearCombination& x, CoproductRule r) {
                           return coproduct_left_twice(x, r) == coproduct_right_twice(x, r);
                         });
}

CheckResult check_counit(int max_n) {
  return over_both_rules(bound("counit", max_n), max_n,
                         [](const LinearCombination& x, CoproductRule r) {
                           const auto d = coproduct(x, r);
                           return counit_left(d) == x && counit_right(d) == x;
                         });
}

CheckResult check_cocommutativity(int max_n) {
  return over_both_rules(bound("cocommutativity", max_n), max_n,
                         [](const LinearCombination& x, CoproductRule r) {
                           const auto d = coproduct(x, r);
                           return flip(d) == d;
                         });
}

CheckResult check_multiplicativity(int max_n, std::uint64_t seed, int samples) {
  const auto name = bound("coproduct of a product is the product of coproducts", max_n);
  if (max_n < 2) return pass(name, "no products in range");
  std::mt19937_64 rng(seed);
  for (auto [palette, rule] : {std::pair{Palette::black_only(), CoproductRule::JoniRota},
                               std::pair{Palette::both(), CoproductRule::Colored}}) {
    std::map<int, std::vector<CanonicalKey>> classes;
    for (int n = 1; n < max_n; ++n) classes[n] = enumerate_graphs(n, palette);
    auto pick = [&](int n) {
      const auto& v = classes[n];
      return v[std::uniform_int_distribution<std::size_t>(0, v.size() - 1)(rng)];
    };
    for (int s = 0; s < samples; ++s) {
      const int na = std::uniform_int_distribution<int>(1, max_n - 1)(rng);
      const int nb = std::uniform_int_distribution<int>(1, max_n - na)(rng);
      const auto a = pick(na);
      const auto b = pick(nb);
      if (coproduct(product(a, b), rule) != product(coproduct(a, rule), coproduct(b, rule))) {
        return fail(name, "mismatch", key_json(product(a, b)));
      }
    }
  }
  return pass(name, std::to_string(samples) + " samples per rule, seed " + std::to_string(seed));
}

CheckResult check_fourterm_ranks(int max_n, int workers) {
  const auto name = bound("red-form and classical 4-element spans agree", max_n);
  std::vector<long long> ranks;
  for (int n = 0; n <= max_n; ++n) {
    const auto red = fc_span(n, GeneratorSource::RedForm, {}, workers);
    const auto jr = fc_span(n, GeneratorSource::JrImage, {}, workers);
    const auto black = fjr_span(n).rank();
    if (!(red == jr) || red.rank() != black) {
      return fail(name, "n=" + std::to_string(n) + ": red-form rank " +
                            std::to_string(red.rank()) + ", image rank " +
                            std::to_string(jr.rank()) + ", black-basis rank " +
                            std::to_string(black));
    }
    ranks.push_back(static_cast<long long>(red.rank()));
  }
  return pass(name, "ranks " + join_counts(ranks));
}

CheckResult check_fc_biideal(int max_n, int workers) {
  const auto name = bound("F_C is a coideal", max_n);
  LandoWorkspace ws(max_n, workers);
  const auto ctx = ws.quotient_context(max_n);
  long long count = 0;
  for (int n = 1; n <= max_n; ++n) {
    for (const auto& gen : fc_generators(n, GeneratorSource::RedForm, {}, workers)) {
      if (!ctx.normal_form(coproduct(gen, CoproductRule::Colored)).is_zero()) {
        return fail(name, "coproduct leaves F_C ⊗ G + G ⊗ F_C", combination_to_json(gen));
      }
      ++count;
    }
  }
  return pass(name, std::to_string(count) + " generators");
}

namespace {

template <class Vanishes>
CheckResult over_generators(const std::string& name, int max_n, int workers, Vanishes&& vanishes) {
  long long count = 0;
  for (int n = 1; n <= max_n; ++n) {
    for (auto source : {GeneratorSource::RedForm, GeneratorSource::JrImage}) {
      for (const auto& gen : fc_generators(n, source, {}, workers)) {
        if (!vanishes(gen)) return fail(name, "nonzero on a generator", combination_to_json(gen));
        ++count;
      }
    }
  }
  return pass(name, std::to_string(count) + " generators");
}

}  // namespace

CheckResult check_w_vanishing(int max_n, int workers) {
  return over_generators(bound("W vanishes on F_C", max_n), max_n, workers,
                         [](const LinearCombination& g) { return w_invariant(g) == 0; });
}

CheckResult check_w_nabla(int max_piece) {
  const auto name = "W(G nabla H) = -2/3 W(G) W(H) (pieces <= " + std::to_string(max_piece) + ")";
  std::vector<FramedColoredGraph> pieces;
  std::vector<Scalar> w;
  for (int n = 1; n <= max_piece; ++n) {
    for (const auto& k : enumerate_graphs(n, Palette::red_only(), true)) {
      pieces.push_back(decode(k));
      w.push_back(w_invariant(pieces.back()));
    }
  }
  const Scalar factor(-2, 3);
  long long count = 0;
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    for (std::size_t j = i; j < pieces.size(); ++j) {
      for (int u = 0; u < pieces[i].size(); ++u) {
        for (int v = 0; v < pieces[j].size(); ++v) {
          const auto glued = nabla(pieces[i], u, pieces[j], v);
          if (w_invariant(glued) != factor * w[i] * w[j]) {
            return fail(name, "gluing at " + std::to_string(u) + "," + std::to_string(v),
                        graph_to_json(glued));
          }
          ++count;
        }
      }
    }
  }
  return pass(name, std::to_string(count) + " gluings");
}

CheckResult check_w_leaf(int max_n) {
  const auto name = bound("framing-0 leaf doubles W", max_n);
  long long count = 0;
  for (int n = 1; n <= max_n; ++n) {
    for (const auto& k : enumerate_graphs(n, Palette::red_only(), true)) {
      const auto g = decode(k);
      const Scalar w = w_invariant(g);
      for (int v = 0; v < n; ++v) {
        if (w_invariant(add_leaf(g, v, 0)) != 2 * w) {
          return fail(name, "leaf at vertex " + std::to_string(v), graph_to_json(g));
        }
        ++count;
      }
    }
  }
  return pass(name, std::to_string(count) + " attachments");
}

CheckResult check_chromatic_vanishing(int max_n, int workers) {
  return over_generators(bound("framed chromatic vanishes on F_C", max_n), max_n, workers,
                         [](const LinearCombination& g) { return framed_chromatic(g).is_zero(); });
}

CheckResult check_chromatic_order(int max_n) {
  const auto name = bound("framed chromatic is contraction-order independent", max_n);
  long long count = 0;
  for (int n = 1; n <= max_n; ++n) {
    for (const auto& k : enumerate_graphs(n, Palette::red_only(), true)) {
      const auto g = decode(k);
      if (framed_chromatic_all_orders(g).size() != 1) {
        return fail(name, "orders disagree", graph_to_json(g));
      }
      ++count;
    }
  }
  return pass(name, std::to_string(count) + " connected classes");
}

CheckResult check_chromatic_multiplicative(int max_n) {
  const auto name = bound("framed chromatic is multiplicative", max_n);
  long long count = 0;
  for (int na = 1; na < max_n; ++na) {
    for (int nb = na; na + nb <= max_n; ++nb) {
      for (const auto& a : enumerate_graphs(na, Palette::red_only())) {
        for (const auto& b : enumerate_graphs(nb, Palette::red_only())) {
          const auto lhs = framed_chromatic(decode(product(a, b)));
          if (lhs != framed_chromatic(decode(a)) * framed_chromatic(decode(b))) {
            return fail(name, "mismatch", key_json(product(a, b)));
          }
          ++count;
        }
      }
    }
  }
  return pass(name, std::to_string(count) + " products");
}

CheckResult check_tree_on_framed_vertex(int max_n) {
  const auto name = bound("tree on a framing-1 vertex has nonzero chromatic value", max_n);
  FramedColoredGraph v1(1);
  v1.set_framing(0, 1);
  long long count = 0;
  for (int n = 2; n <= max_n; ++n) {
    for (const auto& tree : framing0_trees(n - 1)) {
      for (int tv = 0; tv < tree.size(); ++tv) {
        const auto g = tree_action_at(tree, tv, v1, 0);
        if (framed_chromatic(g).is_zero()) return fail(name, "zero value", graph_to_json(g));
        ++count;
      }
    }
  }
  return pass(name, std::to_string(count) + " elements");
}

CheckResult check_leaf_identity(int max_n, LandoWorkspace& ws) {
  const auto name = bound("leaf-attachment identity", max_n);
  const auto failures = leaf_identity_failures(max_n, ws);
  if (!failures.empty()) {
    const auto& f = failures.front();
    return fail(name,
                std::to_string(failures.size()) + " failures; first at edge " +
                    std::to_string(f.u) + "-" + std::to_string(f.v),
                graph_to_json(f.graph));
  }
  long long edges = 0;
  for (int n = 2; n <= max_n; ++n) {
    for (const auto& k : ws.connected_red_classes(n)) edges += k.edge_count();
  }
  return pass(name, std::to_string(edges) + " edges");
}

CheckResult check_forest(int max_n, LandoWorkspace& ws) {
  const auto name = bound("framing-0 trees are equal and nonzero in N", max_n);
  std::string detail = "ranks";
  for (const auto& row : forest_checks(max_n, ws)) {
    if (!row.all_equal || !row.nonzero || row.rank != 1) {
      return fail(name, "grading " + std::to_string(row.k) + ": rank " +
                            std::to_string(row.rank) + ", chromatic " + row.chromatic);
    }
    detail += (row.k == 1 ? " " : ",") + std::to_string(row.rank);
  }
  return pass(name, detail);
}

CheckResult check_primitive_methods(int max_n, LandoWorkspace& ws) {
  const auto name = bound("dim PN by intersection equals dim ker reduced coproduct", max_n);
  std::vector<long long> dims;
  for (int n = 1; n <= max_n; ++n) {
    const auto a = ws.dim_primitive_intersection(n);
    const auto b = ws.dim_primitive_kernel(n);
    if (a != b) {
      return fail(name, "n=" + std::to_string(n) + ": " + std::to_string(a) + " vs " +
                            std::to_string(b));
    }
    dims.push_back(a);
  }
  return pass(name, "dims " + join_counts(dims));
}

CheckResult check_milnor_moore(int max_n, LandoWorkspace& ws) {
  const auto name = bound("graded dims of N equal the symmetric algebra on PN", max_n);
  std::vector<long long> prim(max_n + 1, 0);
  for (int n = 1; n <= max_n; ++n) prim[n] = ws.dim_primitive_intersection(n);
  const auto sym = symmetric_algebra_dimensions(prim, max_n);
  std::vector<long long> dims;
  for (int n = 0; n <= max_n; ++n) {
    dims.push_back(ws.dim_lando(n));
    if (dims.back() != sym[n]) {
      return fail(name, "n=" + std::to_string(n) + ": dim N " + std::to_string(dims.back()) +
                            ", series " + std::to_string(sym[n]));
    }
  }
  return pass(name, "dims " + join_counts(dims));
}

CheckResult check_direct_sum(int max_n, LandoWorkspace& ws) {
  const auto name = bound("dim PL = dim PBL + dim PWL", max_n);
  std::string detail;
  for (int n = 1; n <= max_n; ++n) {
    const auto d = ws.sub_bialgebra_dims(n);
    const auto line = std::to_string(d.pl) + "=" + std::to_string(d.pbl) + "+" +
                      std::to_string(d.pwl);
    if (d.pl != d.pbl + d.pwl) return fail(name, "n=" + std::to_string(n) + ": " + line);
    detail += (n == 1 ? "" : " ") + line;
  }
  return pass(name, detail);
}

CheckResult check_unframed_oracle(int max_n, LandoWorkspace& ws) {
  const auto name = bound("dim PBL equals the unframed black-basis primitive count", max_n);
  std::vector<long long> dims;
  for (int n = 1; n <= max_n; ++n) {
    const auto a = ws.sub_bialgebra_dims(n).pbl;
    const auto b = ws.unframed_lando_primitive_dim(n);
    if (a != b) {
      return fail(name, "n=" + std::to_string(n) + ": " + std::to_string(a) + " vs " +
                            std::to_string(b));
    }
    dims.push_back(a);
  }
  return pass(name, "dims " + join_counts(dims));
}

std::optional<PrimitiveWitness> pn4_witness(LandoWorkspace& ws) {
  std::vector<CanonicalKey> cands;
  for (const auto& k : ws.connected_red_classes(4)) {
    if (is_p4_or_c4(decode(k))) cands.push_back(k);
  }
  std::vector<std::pair<std::string, Scalar>> values;
  for (const auto& k : cands) {
    values.emplace_back(to_string(framed_chromatic(LinearCombination(k))),
                        w_invariant(LinearCombination(k)));
  }
  const auto& rel = ws.fc_connected_span(4);
  const int m = static_cast<int>(cands.size());
  for (int a = 0; a < m; ++a) {
    for (int b = a + 1; b < m; ++b) {
      for (int c = b + 1; c < m; ++c) {
        for (int d = c + 1; d < m; ++d) {
          const std::vector<int> pick{a, b, c, d};
          std::set<std::pair<std::string, Scalar>> distinct;
          for (int i : pick) distinct.insert(values[i]);
          if (distinct.size() != 4) continue;
          SpanBasis classes;
          for (int i : pick) classes.insert(rel.reduce(LinearCombination(cands[i])));
          if (classes.rank() != 4) continue;
          PrimitiveWitness w;
          for (int i : pick) {
            w.graphs.push_back(cands[i]);
            w.chromatic.push_back(values[i].first);
            w.w.push_back(values[i].second);
          }
          w.rank = 4;
          return w;
        }
      }
    }
  }
  return std::nullopt;
}

CheckResult check_pn4_witness(LandoWorkspace& ws) {
  const std::string name = "dim PN_4 >= 4 witnessed by P4/C4 classes";
  const auto w = pn4_witness(ws);
  if (!w) return fail(name, "no independent quadruple with distinct invariant values");
  std::string detail = "rank 4;";
  for (std::size_t i = 0; i < w->graphs.size(); ++i) {
    detail += " " + to_string(decode(w->graphs[i])) + " (" + w->chromatic[i] + ", " +
              to_string(w->w[i]) + ")";
  }
  return pass(name, detail);
}

CheckResult check_pn_tree_action(int max_n, LandoWorkspace& ws) {
  const auto name = bound("tree action keeps the PN_4 witnesses independent", max_n);
  const auto w = pn4_witness(ws);
  if (!w) return fail(name, "no grading-4 witness");
  std::vector<long long> ranks;
  for (int n = 5; n <= max_n; ++n) {
    SpanBasis classes;
    for (const auto& g : w->graphs) {
      classes.insert(ws.fc_connected_span(n).reduce(tree_action(path_tree(n - 4), decode(g))));
    }
    if (classes.rank() != 4) {
      return fail(name, "n=" + std::to_string(n) + ": rank " + std::to_string(classes.rank()));
    }
    ranks.push_back(4);
  }
  return pass(name, "ranks " + join_counts(ranks));
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{
      "psi-iota",       "ic-annihilation", "projection",  "fourterm-spans",
      "leaf-identity",  "forest",          "coassoc",     "vanishing-w",
      "vanishing-chrom", "milnor-moore",   "direct-sum"};
  return names;
}

SuiteReport run_suite(const std::string& suite, const VerifyConfig& cfg) {
  if (std::find(suite_names().begin(), suite_names().end(), suite) == suite_names().end()) {
    throw std::invalid_argument("unknown suite: " + suite);
  }
  if (cfg.max_n < 0) throw std::invalid_argument("max-n must be non-negative");
  SuiteReport r{suite, cfg.max_n, cfg.seed, {}};
  const int n = cfg.max_n;
  const int w = cfg.workers;
  auto run = [&](const std::function<CheckResult()>& f) { r.checks.push_back(timed(f)); };
  constexpr int kSamples = 100;

  if (suite == "psi-iota") {
    run([&] { return check_psi_iota(n); });
    run([&] { return check_psi_kills_ic(n); });
    run([&] { return check_psi_coalgebra_map(n); });
    run([&] { return check_red_basis_dimension(n); });
  } else if (suite == "ic-annihilation") {
    run([&] { return check_psi_kills_ic(n); });
    run([&] { return check_rnf_kills_ic(n); });
  } else if (suite == "projection") {
    run([&] { return check_pi_jr_formula(n); });
    run([&] { return check_pi_jr_idempotent(n); });
    run([&] { return check_pi_jr_kills_products(n, cfg.seed, kSamples); });
    run([&] { return check_pi_jr_primitive(n); });
  } else if (suite == "fourterm-spans") {
    run([&] { return check_fourterm_ranks(n, w); });
    run([&] { return check_fc_biideal(n, w); });
  } else if (suite == "leaf-identity") {
    LandoWorkspace ws(n + 1, w);
    run([&] { return check_leaf_identity(n, ws); });
  } else if (suite == "forest") {
    LandoWorkspace ws(n, w);
    run([&] { return check_forest(n, ws); });
  } else if (suite == "coassoc") {
    run([&] { return check_coassociativity(n); });
    run([&] { return check_counit(n); });
    run([&] { return check_cocommutativity(n); });
    run([&] { return check_multiplicativity(n, cfg.seed, kSamples); });
  } else if (suite == "vanishing-w") {
    run([&] { return check_w_vanishing(n, w); });
    run([&] { return check_w_nabla(std::min(n, 4)); });
    run([&] { return check_w_leaf(n); });
  } else if (suite == "vanishing-chrom") {
    run([&] { return check_chromatic_vanishing(n, w); });
    run([&] { return check_chromatic_order(n); });
    run([&] { return check_chromatic_multiplicative(n); });
    run([&] { return check_tree_on_framed_vertex(n); });
  } else if (suite == "milnor-moore") {
    LandoWorkspace ws(n, w);
    run([&] { return check_primitive_methods(n, ws); });
    run([&] { return check_milnor_moore(n, ws); });
    if (n >= 4) run([&] { return check_pn4_witness(ws); });
    if (n >= 5) run([&] { return check_pn_tree_action(n, ws); });
  } else if (suite == "direct-sum") {
    LandoWorkspace ws(n, w);
    run([&] { return check_direct_sum(n, ws); });
    run([&] { return check_unframed_oracle(n, ws); });
  }
  return r;
}

nlohmann::json report_to_json(const SuiteReport& r, bool timings) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : r.checks) {
    nlohmann::json j{{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}};
    if (c.counterexample) j["counterexample"] = *c.counterexample;
    if (timings) j["seconds"] = c.seconds;
    checks.push_back(std::move(j));
  }
  return {{"suite", r.suite},   {"max_n", r.max_n},   {"seed", r.seed},
          {"passed", r.passed()}, {"checks", checks}};
}

std::string report_to_text(const SuiteReport& r, bool timings) {
  std::ostringstream out;
  out << "suite " << r.suite << " (max-n " << r.max_n << ", seed " << r.seed << ")\n";
  for (const auto& c : r.checks) {
    out << (c.passed ? "PASS " : "FAIL ") << c.name << ": " << c.detail;
    if (timings) out << " [" << c.seconds << " s]";
    out << "\n";
    if (c.counterexample) out << "  counterexample: " << c.counterexample->dump() << "\n";
  }
  out << (r.passed() ? "PASS" : "FAIL") << "\n";
  return out.str();
}

std::string report_to_csv(const SuiteReport& r, bool timings) {
  auto quote = [](const std::string& s) {
    std::string q = "\"";
    for (char ch : s) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
    return q + "\"";
  };
  std::ostringstream out;
  out << "suite,check,passed,detail,counterexample" << (timings ? ",seconds" : "") << "\n";
  for (const auto& c : r.checks) {
    out << r.suite << "," << quote(c.name) << "," << (c.passed ? "true" : "false") << ","
        << quote(c.detail) << "," << quote(c.counterexample ? c.counterexample->dump() : "");
    if (timings) out << "," << c.seconds;
    out << "\n";
  }
  return out.str();
}

}  // namespace fcg
