#pragma once

#include <set>
#include <string>
#include <utility>

#include "fcg/combination.hpp"

namespace fcg {

/// Polynomial in the commuting indeterminates s0, s1 (the values on the
/// single vertex of framing 0 and 1), exact rational coefficients. Keys are
/// exponent pairs (deg s0, deg s1).
class FramedChromaticValue {
 public:
  using Exponents = std::pair<int, int>;

  FramedChromaticValue() = default;
  static FramedChromaticValue monomial(int deg_s0, int deg_s1, const Scalar& c = 1);

  const Combination<Exponents>& terms() const { return terms_; }
  bool is_zero() const { return terms_.is_zero(); }
  Scalar coeff(int deg_s0, int deg_s1) const { return terms_.coeff({deg_s0, deg_s1}); }
  Scalar evaluate(const Scalar& s0, const Scalar& s1) const;

  FramedChromaticValue& operator+=(const FramedChromaticValue& o);
  FramedChromaticValue& operator*=(const Scalar& c);
  friend FramedChromaticValue operator*(const FramedChromaticValue& a,
                                        const FramedChromaticValue& b);
  bool operator==(const FramedChromaticValue&) const = default;

 private:
  Combination<Exponents> terms_;
};

/// e.g. "s0", "-s1", "2*s0^2*s1 - 3/2*s1", "0".
std::string to_string(const FramedChromaticValue& p);

/// Proper vertex colorings with k colors; red edges only. Brute force up to
/// 10 vertices, deletion–contraction beyond.
long long count_proper_colorings(const FramedColoredGraph& g, int k);

/// MinusTwo: (#3-colorings)·(−2)^{−χ}·(−1)^{Σf}, the normalization that
/// vanishes on the 4-element relations. PlusTwo uses 2^{−χ} instead and is
/// kept only for comparison.
enum class WBase { MinusTwo, PlusTwo };

Scalar w_invariant(const FramedColoredGraph& g, WBase base = WBase::MinusTwo);
Scalar w_invariant(const LinearCombination& x, WBase base = WBase::MinusTwo);

/// Contracts red edges until none remain: contracting u–v (framings A, B,
/// other neighbors x, y) gives sign (−1)^{1+AB+|x∩y|} and a merged vertex of
/// framing A+B+AB joined to x∪y. Edgeless graphs give s0^{#0}·s1^{#1}.
/// The exponent agrees with A+B whenever exactly one framing is 1; for equal
/// framings it is the one that makes the value independent of the order of
/// contractions (A+B is not: the framed path 0–0–1 gives ±s1).
FramedChromaticValue framed_chromatic(const FramedColoredGraph& g);
FramedChromaticValue framed_chromatic(const LinearCombination& x);

/// One contraction step of the relation above.
FramedColoredGraph contract_red_edge(const FramedColoredGraph& g, int u, int v, int& sign);

/// The set of values reached over every order of edge contractions.
std::set<std::string> framed_chromatic_all_orders(const FramedColoredGraph& g);

}  // namespace fcg
