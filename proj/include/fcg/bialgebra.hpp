#pragma once

#include <functional>
#include <map>
#include <vector>

#include "fcg/combination.hpp"
#include "fcg/span.hpp"

namespace fcg {

/// JoniRota: every vertex bipartition. Colored: only bipartitions that cut no
/// red edge.
enum class CoproductRule { JoniRota, Colored };

CanonicalKey product(const CanonicalKey& a, const CanonicalKey& b);
LinearCombination product(const LinearCombination& a, const LinearCombination& b);
Tensor product(const Tensor& a, const Tensor& b);

Tensor coproduct(const CanonicalKey& g, CoproductRule rule);
Tensor coproduct(const LinearCombination& x, CoproductRule rule);
inline Tensor coproduct_jr(const CanonicalKey& g) { return coproduct(g, CoproductRule::JoniRota); }
inline Tensor coproduct_c(const CanonicalKey& g) { return coproduct(g, CoproductRule::Colored); }

/// 1 on the empty graph, 0 elsewhere.
Scalar counit(const LinearCombination& x);
/// (ε ⊗ id) and (id ⊗ ε) applied to a tensor.
LinearCombination counit_left(const Tensor& t);
LinearCombination counit_right(const Tensor& t);

/// (Δ ⊗ id)Δ(x) and (id ⊗ Δ)Δ(x).
Tensor3 coproduct_left_twice(const LinearCombination& x, CoproductRule rule);
Tensor3 coproduct_right_twice(const LinearCombination& x, CoproductRule rule);

/// Graded (possibly quotient) bialgebra: the ambient basis per grading plus
/// homogeneous relation spans. Normal forms modulo the relations give the
/// quotient; with no relations this is the free graded bialgebra on the
/// ambient classes.
struct BialgebraContext {
  Palette palette = Palette::red_only();
  CoproductRule rule = CoproductRule::Colored;
  std::map<int, std::vector<CanonicalKey>> ambient;
  std::map<int, SpanBasis> relations;

  /// Ambient keys of every grading 0..max_n for `palette`, optionally
  /// restricted by `keep` (which must select a sub-bialgebra).
  static BialgebraContext free(Palette palette, CoproductRule rule, int max_n,
                               const std::function<bool(const FramedColoredGraph&)>& keep = {});

  const std::vector<CanonicalKey>& ambient_basis(int n) const;
  /// Ambient keys that are not relation pivots: a basis of the quotient.
  std::vector<CanonicalKey> quotient_basis(int n) const;
  LinearCombination normal_form(const LinearCombination& x) const;
  Tensor normal_form(const Tensor& t) const;
};

/// Δ(x) − x⊗1 − 1⊗x with both legs in normal form. Throws on inhomogeneous x.
Tensor reduced_coproduct(const LinearCombination& x, const BialgebraContext& ctx);
Tensor reduced_coproduct(const LinearCombination& x, CoproductRule rule);
bool is_primitive(const LinearCombination& x, const BialgebraContext& ctx);
bool is_primitive(const LinearCombination& x, CoproductRule rule);

/// Basis of ker Δ̄ on the grading-n component of the quotient, as
/// combinations of quotient basis keys.
std::vector<LinearCombination> primitive_basis(int n, const BialgebraContext& ctx);
int primitive_dimension(int n, const BialgebraContext& ctx);

/// Coefficients 0..max_n of prod_k (1 - x^k)^(-primitive[k]): the graded
/// dimensions of the symmetric algebra on a graded space. primitive[0] is
/// ignored.
std::vector<long long> symmetric_algebra_dimensions(const std::vector<long long>& primitive,
                                                    int max_n);

}  // namespace fcg
