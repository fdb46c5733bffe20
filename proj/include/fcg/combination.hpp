#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <tuple>
#include <utility>

#include "fcg/canonical.hpp"

namespace fcg {

using Scalar = mpq_class;

std::string to_string(const Scalar& s);
/// Parses "p", "-p" or "p/q"; the result is canonicalized.
Scalar parse_scalar(const std::string& text);

/// Finite formal sum with exact rational coefficients. Zero coefficients are
/// never stored, so equality of combinations is equality of the maps.
template <class K>
class Combination {
 public:
  using Terms = std::map<K, Scalar>;

  Combination() = default;
  explicit Combination(const K& key, const Scalar& c = 1) { add(key, c); }

  void add(const K& key, const Scalar& c) {
    if (sgn(c) == 0) return;
    auto [it, inserted] = terms_.try_emplace(key, c);
    if (!inserted) {
      it->second += c;
      if (sgn(it->second) == 0) terms_.erase(it);
    }
  }

  /// this += c * other
  void axpy(const Scalar& c, const Combination& other) {
    if (sgn(c) == 0) return;
    for (const auto& [k, v] : other.terms_) add(k, c * v);
  }

  Scalar coeff(const K& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? Scalar(0) : it->second;
  }

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const Terms& terms() const { return terms_; }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }
  const K& leading_key() const { return terms_.begin()->first; }

  Combination& operator+=(const Combination& o) {
    axpy(Scalar(1), o);
    return *this;
  }
  Combination& operator-=(const Combination& o) {
    axpy(Scalar(-1), o);
    return *this;
  }
  Combination& operator*=(const Scalar& c) {
    if (sgn(c) == 0) {
      terms_.clear();
    } else {
      for (auto& [k, v] : terms_) v *= c;
    }
    return *this;
  }

  friend Combination operator+(Combination a, const Combination& b) { return a += b; }
  friend Combination operator-(Combination a, const Combination& b) { return a -= b; }
  friend Combination operator-(Combination a) { return a *= Scalar(-1); }
  friend Combination operator*(const Scalar& c, Combination a) { return a *= c; }

  bool operator==(const Combination& o) const { return terms_ == o.terms_; }

 private:
  Terms terms_;
};

using LinearCombination = Combination<CanonicalKey>;
using TensorKey = std::pair<CanonicalKey, CanonicalKey>;
using Tensor = Combination<TensorKey>;
using Tensor3Key = std::tuple<CanonicalKey, CanonicalKey, CanonicalKey>;
using Tensor3 = Combination<Tensor3Key>;

inline LinearCombination lc_add(const LinearCombination& a, const LinearCombination& b) {
  return a + b;
}
inline LinearCombination lc_scale(const Scalar& c, const LinearCombination& a) { return c * a; }

/// Canonicalizes and adds `c * g`.
inline void add_graph(LinearCombination& x, const FramedColoredGraph& g, const Scalar& c = 1) {
  x.add(canonical_form(g), c);
}
inline LinearCombination from_graph(const FramedColoredGraph& g, const Scalar& c = 1) {
  return LinearCombination(canonical_form(g), c);
}

/// Maps every key through `f` (key -> LinearCombination) and extends linearly.
template <class F>
LinearCombination apply_linear(const LinearCombination& x, F&& f) {
  LinearCombination out;
  for (const auto& [k, c] : x) out.axpy(c, f(k));
  return out;
}

/// All keys of x lie in a single grading; -1 for zero, -2 if mixed.
int homogeneous_grading(const LinearCombination& x);

/// Swaps tensor legs.
Tensor flip(const Tensor& t);
/// Expands a ⊗ b.
Tensor tensor(const LinearCombination& a, const LinearCombination& b);

}  // namespace fcg
