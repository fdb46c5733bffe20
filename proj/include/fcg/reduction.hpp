#pragma once

#include <vector>

#include "fcg/combination.hpp"

namespace fcg {

/// Views all-black graphs as elements of the colored algebra. Throws
/// std::invalid_argument if a red edge occurs.
LinearCombination iota(const LinearCombination& x);

/// Every red edge is either painted black (+) or removed (−); black edges
/// are kept. Lands in the all-black basis.
LinearCombination psi(const FramedColoredGraph& g);
LinearCombination psi(const LinearCombination& x);

/// Normal form modulo the red/black/deleted relation: each black edge becomes
/// red or is removed, coefficient +1. Lands in the red-only basis.
LinearCombination red_normal_form(const FramedColoredGraph& g);
LinearCombination red_normal_form(const LinearCombination& x);

/// Keeps connected red graphs, drops the rest. Throws on black edges.
LinearCombination pi_c(const LinearCombination& x);

/// Projection onto primitives of the all-black bialgebra along decomposables.
/// The formula sums (−1)^{e(Γ')−e(Γ'')} Γ'' over connected spanning Γ' ⊆ Γ and
/// spanning Γ'' ⊆ Γ'; the composition is ψ ∘ π_C ∘ red_normal_form ∘ ι.
LinearCombination pi_jr_formula(const CanonicalKey& g);
LinearCombination pi_jr_formula(const LinearCombination& x);
LinearCombination pi_jr_composition(const LinearCombination& x);

/// (red u–v) − (black u–v) + (no u–v) with everything else as in `pattern`.
struct ICGenerator {
  FramedColoredGraph pattern;
  int u = 0;
  int v = 1;

  FramedColoredGraph variant(EdgeColor c) const;
  LinearCombination element() const;
};

/// One generator per colored class on n vertices and vertex pair, with
/// duplicate elements removed.
std::vector<ICGenerator> ic_generators(int n);

}  // namespace fcg
