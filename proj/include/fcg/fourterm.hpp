#pragma once

#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "fcg/bialgebra.hpp"
#include "fcg/combination.hpp"
#include "fcg/span.hpp"

namespace fcg {

/// Γ − Γ'_uv − (−1)^{f(v)} (Γ̃_uv − Γ̃'_uv) in the all-black basis. Γ' erases
/// u–v; Γ̃ toggles u–w for every other neighbor w of v and gives u the framing
/// f(u)+f(v); Γ̃' erases u–v from Γ̃.
LinearCombination fourterm_jr(const FramedColoredGraph& g, int u, int v);

/// The two-vertex relation in the red basis. `rest` is the unshown part; u
/// and v are appended as vertices rest.size() and rest.size()+1 with
/// framings A and B, joined by a red edge. Vertices of `a` attach to u only,
/// of `c` to v only; the first sum sends each vertex of `b` to u, v or both,
/// the second (with coefficient −(−1)^B and u framed A+B) sends `b` to v and
/// each vertex of `c` to v, u or both.
LinearCombination fourterm_red(const FramedColoredGraph& rest, int framing_u, int framing_v,
                               std::span<const int> a, std::span<const int> b,
                               std::span<const int> c);

enum class GeneratorSource { RedForm, JrImage, Both };

struct GeneratorFilter {
  bool connected_only = false;  // keep generators whose terms are connected
  bool framing0_only = false;   // keep generators whose terms are all framing 0
};

/// Distinct nonzero generators of grading n (normalized to leading
/// coefficient 1), in deterministic order. JrImage maps every classical
/// 4-element through red_normal_form.
std::vector<LinearCombination> fc_generators(int n, GeneratorSource source,
                                             GeneratorFilter filter = {}, int workers = 1);

/// Grading-n component of F_C. Both generator families are closed under
/// disjoint union with arbitrary graphs, so their span is already the ideal
/// component.
SpanBasis fc_span(int n, GeneratorSource source = GeneratorSource::RedForm,
                  GeneratorFilter filter = {}, int workers = 1);

/// Literal ideal closure: every generator of grading k <= n times every red
/// class of grading n − k.
SpanBasis fc_ideal_closure(int n, GeneratorSource source);

/// Classical 4-elements of grading n kept in the all-black basis.
SpanBasis fjr_span(int n, bool framing0_only = false);

struct DimensionRow {
  int n = 0;
  long long red_classes = 0;
  long long connected_classes = 0;
  long long rank_fc = 0;
  long long dim_lando = 0;
  long long dim_pn = 0;
  long long dim_pbl = 0;
  long long dim_pwl = 0;
};

struct SubBialgebraDims {
  long long pbl = 0;
  long long pwl = 0;
  long long pl = 0;
};

/// Caches graded enumerations and F_C spans up to a configured maximum
/// grading and answers the dimension questions about the quotient N.
class LandoWorkspace {
 public:
  explicit LandoWorkspace(int max_n = 6, int workers = 1);

  int max_n() const { return max_n_; }
  int workers() const { return workers_; }

  const std::vector<CanonicalKey>& red_classes(int n);
  const std::vector<CanonicalKey>& connected_red_classes(int n);
  const SpanBasis& fc_span(int n);
  /// Span of the generators whose terms are connected; F_C is graded by
  /// the number of components, so this is F_C ∩ (connected span).
  const SpanBasis& fc_connected_span(int n);
  const SpanBasis& fc_connected_framing0_span(int n);

  long long dim_lando(int n);
  /// #connected − dim(F_C ∩ connected span), intersection by Zassenhaus.
  long long dim_primitive_intersection(int n);
  /// dim ker Δ̄_C on the quotient N.
  long long dim_primitive_kernel(int n);
  std::vector<LinearCombination> primitive_basis_N(int n);

  /// The quotient N as a bialgebra context up to grading n.
  BialgebraContext quotient_context(int n);

  SubBialgebraDims sub_bialgebra_dims(int n);
  /// Primitive dimension of the unframed Lando quotient (framing-0 graphs,
  /// all-black basis, classical 4-term relation).
  long long unframed_lando_primitive_dim(int n);

  DimensionRow dimension_row(int n);

  /// Class of x in N: normal form modulo F_C of its grading.
  LinearCombination class_in_N(const LinearCombination& x);

 private:
  void check_grading(int n) const;

  int max_n_;
  int workers_;
  std::map<int, std::vector<CanonicalKey>> red_;
  std::map<int, std::vector<CanonicalKey>> connected_;
  std::map<int, SpanBasis> fc_;
  std::map<int, SpanBasis> fc_conn_;
  std::map<int, SpanBasis> fc_conn0_;
};

struct LeafIdentityFailure {
  FramedColoredGraph graph;
  int u;
  int v;
};

/// For every connected red graph with <= n vertices and every red edge u–v,
/// (framing-0 leaf at u) − (framing-0 leaf at v) lies in F_C.
std::vector<LeafIdentityFailure> leaf_identity_failures(int n, LandoWorkspace& ws);
bool leaf_identity_check(int n, LandoWorkspace& ws);

/// Attaches the framing-0 red tree T to the connected red graph Γ by one red
/// edge between the canonical vertex 0 of each. Throws if T is not a tree,
/// has a nonzero framing or a black edge, or Γ is not connected.
LinearCombination tree_action(const FramedColoredGraph& tree, const FramedColoredGraph& gamma);
/// Same, attaching at the given vertices.
FramedColoredGraph tree_action_at(const FramedColoredGraph& tree, int tree_vertex,
                                  const FramedColoredGraph& gamma, int gamma_vertex);
/// Red path on k framing-0 vertices.
FramedColoredGraph path_tree(int k);

struct ForestGrading {
  int k = 0;
  int trees = 0;
  bool all_equal = false;
  bool nonzero = false;
  int rank = 0;
  std::string chromatic;
};

/// Framing-0 red trees on k vertices, k = 1..n: all equal in N, and their
/// common class nonzero (framed chromatic value ≠ 0), i.e. rank 1.
std::vector<ForestGrading> forest_checks(int n, LandoWorkspace& ws);

struct ChoiceExperiment {
  FramedColoredGraph gamma;
  int tree_size = 0;
  int attachment_points = 0;
  bool classes_coincide = false;
};

/// For each connected red Γ with <= gamma_max vertices and every attachment
/// vertex of Γ, whether attaching the path tree of `tree_size` vertices gives
/// one class in N.
std::vector<ChoiceExperiment> tree_choice_experiment(int gamma_max, int tree_size,
                                                     LandoWorkspace& ws);

}  // namespace fcg
