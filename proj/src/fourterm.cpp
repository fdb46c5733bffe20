#include "fcg/fourterm.hpp"

#include <stdexcept>

#include "fcg/invariants.hpp"
#include "fcg/parallel.hpp"
#include "fcg/reduction.hpp"

namespace fcg {

LinearCombination fourterm_jr(const FramedColoredGraph& g, int u, int v) {
  if (g.edge_count(EdgeColor::Red) > 0) throw std::invalid_argument("fourterm_jr: red edge");
  if (!g.adjacent(u, v)) throw std::invalid_argument("fourterm_jr: u and v are not adjacent");
  auto erased = g;
  erased.set_edge(u, v, EdgeColor::None);
  auto tilde = g;
  for (int w = 0; w < g.size(); ++w) {
    if (w == u || w == v || !g.adjacent(v, w)) continue;
    tilde.set_edge(u, w, g.adjacent(u, w) ? EdgeColor::None : EdgeColor::Black);
  }
  tilde.set_framing(u, g.framing(u) ^ g.framing(v));
  auto tilde_erased = tilde;
  tilde_erased.set_edge(u, v, EdgeColor::None);

  const int s = g.framing(v) == 1 ? -1 : 1;
  LinearCombination x;
  add_graph(x, g, 1);
  add_graph(x, erased, -1);
  add_graph(x, tilde, -s);
  add_graph(x, tilde_erased, s);
  return x;
}

namespace {

void require_subset(std::span<const int> s, int n, std::vector<int>& owner, int tag) {
  for (int x : s) {
    if (x < 0 || x >= n) throw std::out_of_range("fourterm_red: vertex outside rest graph");
    if (owner[x] != -1) throw std::invalid_argument("fourterm_red: subsets a, b, c overlap");
    owner[x] = tag;
  }
}

// Adds Σ over maps s → {first, second, both} of the graph with the
// corresponding red edges, times coeff.
void add_split_sum(LinearCombination& out, FramedColoredGraph g, std::span<const int> split,
                   int first, int second, const Scalar& coeff) {
  std::size_t combos = 1;
  for (std::size_t i = 0; i < split.size(); ++i) combos *= 3;
  for (std::size_t code = 0; code < combos; ++code) {
    std::size_t c = code;
    for (int x : split) {
      const auto state = c % 3;
      c /= 3;
      g.set_edge(x, first, state != 1 ? EdgeColor::Red : EdgeColor::None);
      g.set_edge(x, second, state != 0 ? EdgeColor::Red : EdgeColor::None);
    }
    add_graph(out, g, coeff);
  }
}

}  // namespace

LinearCombination fourterm_red(const FramedColoredGraph& rest, int framing_u, int framing_v,
                               std::span<const int> a, std::span<const int> b,
                               std::span<const int> c) {
  const int r = rest.size();
  std::vector<int> owner(r, -1);
  require_subset(a, r, owner, 0);
  require_subset(b, r, owner, 1);
  require_subset(c, r, owner, 2);
  if (framing_u < 0 || framing_u > 1 || framing_v < 0 || framing_v > 1) {
    throw std::invalid_argument("fourterm_red: framings are 0 or 1");
  }
  const int u = r;
  const int v = r + 1;
  FramedColoredGraph two(std::vector<std::uint8_t>{static_cast<std::uint8_t>(framing_u),
                                                   static_cast<std::uint8_t>(framing_v)});
  auto base = disjoint_union(rest, two);
  base.set_edge(u, v, EdgeColor::Red);
  for (int x : a) base.set_edge(x, u, EdgeColor::Red);

  LinearCombination out;
  auto first = base;
  for (int x : c) first.set_edge(x, v, EdgeColor::Red);
  add_split_sum(out, first, b, u, v, 1);

  auto second = base;
  second.set_framing(u, framing_u ^ framing_v);
  for (int x : b) second.set_edge(x, v, EdgeColor::Red);
  add_split_sum(out, second, c, v, u, framing_v == 1 ? 1 : -1);
  return out;
}

namespace {

std::string signature(const LinearCombination& x) {
  std::string s;
  for (const auto& [k, c] : x) {
    s += k.bytes();
    s += '|';
    s += to_string(c);
    s += ';';
  }
  return s;
}

bool all_framing0(const FramedColoredGraph& g) { return g.framing_sum() == 0; }

std::vector<LinearCombination> red_form_for_rest(const FramedColoredGraph& rest,
                                                 GeneratorFilter filter) {
  std::vector<LinearCombination> out;
  const int r = rest.size();
  if (filter.framing0_only && !all_framing0(rest)) return out;
  std::size_t assignments = 1;
  for (int i = 0; i < r; ++i) assignments *= 4;
  for (int fu = 0; fu < 2; ++fu) {
    for (int fv = 0; fv < 2; ++fv) {
      if (filter.framing0_only && (fu != 0 || fv != 0)) continue;
      for (std::size_t code = 0; code < assignments; ++code) {
        std::vector<int> a, b, c;
        std::size_t s = code;
        for (int x = 0; x < r; ++x) {
          switch (s % 4) {
            case 1:
              a.push_back(x);
              break;
            case 2:
              b.push_back(x);
              break;
            case 3:
              c.push_back(x);
              break;
            default:
              break;
          }
          s /= 4;
        }
        auto x = fourterm_red(rest, fu, fv, a, b, c);
        if (x.is_zero()) continue;
        if (filter.connected_only && !decode(x.leading_key()).is_connected()) continue;
        out.push_back(std::move(x));
      }
    }
  }
  return out;
}

std::vector<LinearCombination> jr_image_for_graph(const FramedColoredGraph& g,
                                                  GeneratorFilter filter) {
  std::vector<LinearCombination> out;
  if (filter.framing0_only && !all_framing0(g)) return out;
  for (int u = 0; u < g.size(); ++u) {
    for (int v = 0; v < g.size(); ++v) {
      if (u == v || !g.adjacent(u, v)) continue;
      auto x = red_normal_form(fourterm_jr(g, u, v));
      if (filter.connected_only) x = pi_c(x);
      if (!x.is_zero()) out.push_back(std::move(x));
    }
  }
  return out;
}

}  // namespace

std::vector<LinearCombination> fc_generators(int n, GeneratorSource source,
                                             GeneratorFilter filter, int workers) {
  std::vector<std::vector<LinearCombination>> chunks;
  if ((source == GeneratorSource::RedForm || source == GeneratorSource::Both) && n >= 2) {
    const auto rests = enumerate_graphs(n - 2, Palette::red_only());
    auto part = parallel_map(rests.size(), workers,
                             [&](std::size_t i) { return red_form_for_rest(decode(rests[i]), filter); });
    for (auto& p : part) chunks.push_back(std::move(p));
  }
  if (source == GeneratorSource::JrImage || source == GeneratorSource::Both) {
    const auto graphs = enumerate_graphs(n, Palette::black_only());
    auto part = parallel_map(graphs.size(), workers,
                             [&](std::size_t i) { return jr_image_for_graph(decode(graphs[i]), filter); });
    for (auto& p : part) chunks.push_back(std::move(p));
  }
  std::vector<LinearCombination> out;
  std::set<std::string> seen;
  for (auto& chunk : chunks) {
    for (auto& x : chunk) {
      x *= Scalar(1) / x.begin()->second;
      if (seen.insert(signature(x)).second) out.push_back(std::move(x));
    }
  }
  return out;
}

SpanBasis fc_span(int n, GeneratorSource source, GeneratorFilter filter, int workers) {
  SpanBasis span;
  for (const auto& x : fc_generators(n, source, filter, workers)) span.insert(x);
  return span;
}

SpanBasis fc_ideal_closure(int n, GeneratorSource source) {
  SpanBasis span;
  for (int k = 2; k <= n; ++k) {
    const auto gens = fc_generators(k, source);
    const auto cofactors = enumerate_graphs(n - k, Palette::red_only());
    for (const auto& g : gens) {
      for (const auto& h : cofactors) span.insert(product(g, LinearCombination(h)));
    }
  }
  return span;
}

SpanBasis fjr_span(int n, bool framing0_only) {
  SpanBasis span;
  for (const auto& key : enumerate_graphs(n, Palette::black_only())) {
    const auto g = decode(key);
    if (framing0_only && !all_framing0(g)) continue;
    for (int u = 0; u < n; ++u) {
      for (int v = 0; v < n; ++v) {
        if (u != v && g.adjacent(u, v)) span.insert(fourterm_jr(g, u, v));
      }
    }
  }
  return span;
}

// ---------------------------------------------------------------------------

LandoWorkspace::LandoWorkspace(int max_n, int workers) : max_n_(max_n), workers_(workers) {
  if (max_n < 0) throw std::invalid_argument("negative maximum grading");
}

void LandoWorkspace::check_grading(int n) const {
  if (n < 0 || n > max_n_) {
    throw std::out_of_range("grading " + std::to_string(n) + " exceeds configured maximum " +
                            std::to_string(max_n_));
  }
}

const std::vector<CanonicalKey>& LandoWorkspace::red_classes(int n) {
  check_grading(n);
  auto it = red_.find(n);
  if (it == red_.end()) it = red_.emplace(n, enumerate_graphs(n, Palette::red_only())).first;
  return it->second;
}

const std::vector<CanonicalKey>& LandoWorkspace::connected_red_classes(int n) {
  auto it = connected_.find(n);
  if (it == connected_.end()) {
    std::vector<CanonicalKey> keys;
    for (const auto& k : red_classes(n)) {
      if (decode(k).is_connected()) keys.push_back(k);
    }
    it = connected_.emplace(n, std::move(keys)).first;
  }
  return it->second;
}

const SpanBasis& LandoWorkspace::fc_span(int n) {
  check_grading(n);
  auto it = fc_.find(n);
  if (it == fc_.end()) {
    it = fc_.emplace(n, fcg::fc_span(n, GeneratorSource::RedForm, {}, workers_)).first;
  }
  return it->second;
}

const SpanBasis& LandoWorkspace::fc_connected_span(int n) {
  check_grading(n);
  auto it = fc_conn_.find(n);
  if (it == fc_conn_.end()) {
    GeneratorFilter f;
    f.connected_only = true;
    it = fc_conn_.emplace(n, fcg::fc_span(n, GeneratorSource::RedForm, f, workers_)).first;
  }
  return it->second;
}

const SpanBasis& LandoWorkspace::fc_connected_framing0_span(int n) {
  check_grading(n);
  auto it = fc_conn0_.find(n);
  if (it == fc_conn0_.end()) {
    GeneratorFilter f;
    f.connected_only = true;
    f.framing0_only = true;
    it = fc_conn0_.emplace(n, fcg::fc_span(n, GeneratorSource::RedForm, f, workers_)).first;
  }
  return it->second;
}

long long LandoWorkspace::dim_lando(int n) {
  return static_cast<long long>(red_classes(n).size()) -
         static_cast<long long>(fc_span(n).rank());
}

long long LandoWorkspace::dim_primitive_intersection(int n) {
  if (n == 0) return 0;
  const auto& all = red_classes(n);
  const std::set<CanonicalKey> ambient(all.begin(), all.end());
  const auto& conn = connected_red_classes(n);
  const auto inter = intersect(fc_span(n), coordinate_span<CanonicalKey>(conn), ambient);
  return static_cast<long long>(conn.size()) - static_cast<long long>(inter.rank());
}

BialgebraContext LandoWorkspace::quotient_context(int n) {
  BialgebraContext ctx;
  ctx.palette = Palette::red_only();
  ctx.rule = CoproductRule::Colored;
  for (int k = 0; k <= n; ++k) {
    ctx.ambient[k] = red_classes(k);
    ctx.relations[k] = fc_span(k);
  }
  return ctx;
}

long long LandoWorkspace::dim_primitive_kernel(int n) {
  return primitive_dimension(n, quotient_context(n));
}

std::vector<LinearCombination> LandoWorkspace::primitive_basis_N(int n) {
  return primitive_basis(n, quotient_context(n));
}

SubBialgebraDims LandoWorkspace::sub_bialgebra_dims(int n) {
  SubBialgebraDims d;
  if (n == 0) return d;

  // Framing-0 sub-bialgebra: framing-0 classes modulo F_C ∩ (framing-0 span).
  BialgebraContext black_part;
  black_part.palette = Palette::red_only();
  black_part.rule = CoproductRule::Colored;
  for (int k = 0; k <= n; ++k) {
    const auto& all = red_classes(k);
    std::vector<CanonicalKey> zero;
    for (const auto& key : all) {
      if (all_framing0(decode(key))) zero.push_back(key);
    }
    const std::set<CanonicalKey> ambient(all.begin(), all.end());
    black_part.relations[k] = intersect(fc_span(k), coordinate_span<CanonicalKey>(zero), ambient);
    black_part.ambient[k] = std::move(zero);
  }
  d.pbl = primitive_dimension(n, black_part);

  // Connected graphs with at least one framing-1 vertex, modulo F_C.
  std::vector<CanonicalKey> white;
  for (const auto& key : connected_red_classes(n)) {
    if (!all_framing0(decode(key))) white.push_back(key);
  }
  const auto& all = red_classes(n);
  const std::set<CanonicalKey> ambient(all.begin(), all.end());
  const auto inter = intersect(fc_span(n), coordinate_span<CanonicalKey>(white), ambient);
  d.pwl = static_cast<long long>(white.size()) - static_cast<long long>(inter.rank());

  d.pl = dim_primitive_intersection(n);
  return d;
}

long long LandoWorkspace::unframed_lando_primitive_dim(int n) {
  check_grading(n);
  auto ctx = BialgebraContext::free(Palette::black_only(), CoproductRule::JoniRota, n,
                                    [](const FramedColoredGraph& g) { return all_framing0(g); });
  for (int k = 0; k <= n; ++k) ctx.relations[k] = fjr_span(k, true);
  return primitive_dimension(n, ctx);
}

DimensionRow LandoWorkspace::dimension_row(int n) {
  DimensionRow row;
  row.n = n;
  row.red_classes = static_cast<long long>(red_classes(n).size());
  row.connected_classes = static_cast<long long>(connected_red_classes(n).size());
  row.rank_fc = static_cast<long long>(fc_span(n).rank());
  row.dim_lando = dim_lando(n);
  if (n == 0) return row;
  const auto sub = sub_bialgebra_dims(n);
  row.dim_pn = sub.pl;
  row.dim_pbl = sub.pbl;
  row.dim_pwl = sub.pwl;
  return row;
}

LinearCombination LandoWorkspace::class_in_N(const LinearCombination& x) {
  std::map<int, LinearCombination> parts;
  for (const auto& [k, c] : x) parts[k.vertex_count()].add(k, c);
  LinearCombination out;
  for (auto& [n, part] : parts) out += fc_span(n).reduce(part);
  return out;
}

// ---------------------------------------------------------------------------

std::vector<LeafIdentityFailure> leaf_identity_failures(int n, LandoWorkspace& ws) {
  std::vector<LeafIdentityFailure> failures;
  for (int k = 2; k <= n; ++k) {
    for (const auto& key : ws.connected_red_classes(k)) {
      const auto g = decode(key);
      for (const auto& e : g.edges()) {
        LinearCombination diff = from_graph(add_leaf(g, e.u, 0));
        diff -= from_graph(add_leaf(g, e.v, 0));
        if (!ws.fc_span(k + 1).contains(diff)) failures.push_back({g, e.u, e.v});
      }
    }
  }
  return failures;
}

bool leaf_identity_check(int n, LandoWorkspace& ws) { return leaf_identity_failures(n, ws).empty(); }

FramedColoredGraph path_tree(int k) {
  if (k < 1) throw std::invalid_argument("tree needs at least one vertex");
  FramedColoredGraph t(k);
  for (int i = 0; i + 1 < k; ++i) t.set_edge(i, i + 1, EdgeColor::Red);
  return t;
}

FramedColoredGraph tree_action_at(const FramedColoredGraph& tree, int tree_vertex,
                                  const FramedColoredGraph& gamma, int gamma_vertex) {
  auto out = disjoint_union(gamma, tree);
  out.set_edge(gamma_vertex, gamma.size() + tree_vertex, EdgeColor::Red);
  return out;
}

LinearCombination tree_action(const FramedColoredGraph& tree, const FramedColoredGraph& gamma) {
  if (!tree.is_connected() || tree.edge_count() != tree.size() - 1) {
    throw std::invalid_argument("tree_action: first argument is not a tree");
  }
  if (tree.framing_sum() != 0) throw std::invalid_argument("tree_action: tree framings must be 0");
  if (tree.edge_count(EdgeColor::Black) > 0 || gamma.edge_count(EdgeColor::Black) > 0) {
    throw std::invalid_argument("tree_action: black edge");
  }
  if (!gamma.is_connected()) throw std::invalid_argument("tree_action: graph is not connected");
  const auto t = decode(canonical_form(tree));
  const auto g = decode(canonical_form(gamma));
  return from_graph(tree_action_at(t, 0, g, 0));
}

std::vector<ForestGrading> forest_checks(int n, LandoWorkspace& ws) {
  std::vector<ForestGrading> out;
  for (int k = 1; k <= n; ++k) {
    ForestGrading row;
    row.k = k;
    std::vector<CanonicalKey> trees;
    for (const auto& key : ws.connected_red_classes(k)) {
      const auto g = decode(key);
      if (g.edge_count() == k - 1 && all_framing0(g)) trees.push_back(key);
    }
    row.trees = static_cast<int>(trees.size());
    // Membership in the framing-0 connected generators suffices; fall back
    // to all connected generators before declaring two trees different.
    row.all_equal = true;
    for (std::size_t i = 1; i < trees.size(); ++i) {
      LinearCombination diff(trees[i]);
      diff -= LinearCombination(trees[0]);
      if (!ws.fc_connected_framing0_span(k).contains(diff) &&
          !ws.fc_connected_span(k).contains(diff)) {
        row.all_equal = false;
      }
    }
    const auto value = framed_chromatic(LinearCombination(trees.front()));
    row.chromatic = to_string(value);
    row.nonzero = !value.is_zero();
    if (row.all_equal) {
      row.rank = row.nonzero ? 1 : 0;
    } else {
      SpanBasis classes;
      for (const auto& t : trees) classes.insert(ws.fc_connected_span(k).reduce(LinearCombination(t)));
      row.rank = static_cast<int>(classes.rank());
    }
    out.push_back(std::move(row));
  }
  return out;
}

std::vector<ChoiceExperiment> tree_choice_experiment(int gamma_max, int tree_size,
                                                     LandoWorkspace& ws) {
  std::vector<ChoiceExperiment> out;
  const auto tree = decode(canonical_form(path_tree(tree_size)));
  for (int k = 1; k <= gamma_max; ++k) {
    for (const auto& key : ws.connected_red_classes(k)) {
      const auto g = decode(key);
      ChoiceExperiment e{g, tree_size, g.size(), true};
      const auto first = from_graph(tree_action_at(tree, 0, g, 0));
      for (int w = 1; w < g.size(); ++w) {
        auto diff = from_graph(tree_action_at(tree, 0, g, w)) - first;
        if (!ws.fc_connected_span(k + tree_size).contains(diff)) e.classes_coincide = false;
      }
      out.push_back(std::move(e));
    }
  }
  return out;
}

}  // namespace fcg
