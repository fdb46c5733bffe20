#pragma once

#include <map>
#include <set>
#include <stdexcept>
#include <tuple>
#include <vector>

#include "fcg/combination.hpp"

namespace fcg {

/// Subspace spanned by inserted vectors, kept in fully reduced row-echelon
/// form: each row has coefficient 1 on its pivot (its smallest key) and zero
/// on every other row's pivot. The stored rows depend only on the subspace
/// and the key order, never on insertion order.
template <class K>
class Echelon {
 public:
  using Vector = Combination<K>;

  /// Returns true if `v` enlarged the span.
  bool insert(const Vector& v) {
    Vector w = reduce(v);
    if (w.is_zero()) return false;
    const K pivot = w.leading_key();
    w *= Scalar(1) / w.coeff(pivot);
    for (auto& [p, row] : rows_) {
      const Scalar c = row.coeff(pivot);
      if (sgn(c) != 0) row.axpy(-c, w);
    }
    rows_.emplace(pivot, std::move(w));
    return true;
  }

  /// Normal form of v modulo the span; zero iff v is in the span. Rows carry
  /// no entries in other pivot columns, so one pass suffices.
  Vector reduce(Vector v) const {
    if (rows_.empty()) return v;
    std::vector<std::pair<const Vector*, Scalar>> hits;
    for (const auto& [k, c] : v) {
      auto it = rows_.find(k);
      if (it != rows_.end()) hits.emplace_back(&it->second, c);
    }
    for (const auto& [row, c] : hits) v.axpy(-c, *row);
    return v;
  }

  bool contains(const Vector& v) const { return reduce(v).is_zero(); }
  std::size_t rank() const { return rows_.size(); }
  bool is_pivot(const K& k) const { return rows_.count(k) != 0; }
  const std::map<K, Vector>& rows() const { return rows_; }

  std::vector<Vector> basis() const {
    std::vector<Vector> out;
    for (const auto& [p, row] : rows_) out.push_back(row);
    return out;
  }

  bool operator==(const Echelon& o) const { return rows_ == o.rows_; }

 private:
  std::map<K, Vector> rows_;
};

using SpanBasis = Echelon<CanonicalKey>;

template <class K>
void require_in_ambient(const Combination<K>& v, const std::set<K>& ambient) {
  for (const auto& [k, c] : v) {
    if (!ambient.count(k)) throw std::invalid_argument("key outside ambient basis");
  }
}

/// Intersection of two subspaces of the ambient component (Zassenhaus):
/// echelonize rows (a | a) and (b | 0); rows whose left half vanishes span
/// the intersection in their right half.
template <class K>
Echelon<K> intersect(const Echelon<K>& a, const Echelon<K>& b, const std::set<K>& ambient) {
  using Tagged = std::pair<int, K>;
  Echelon<Tagged> stacked;
  for (const auto& [p, row] : a.rows()) {
    require_in_ambient(row, ambient);
    Combination<Tagged> t;
    for (const auto& [k, c] : row) {
      t.add({0, k}, c);
      t.add({1, k}, c);
    }
    stacked.insert(t);
  }
  for (const auto& [p, row] : b.rows()) {
    require_in_ambient(row, ambient);
    Combination<Tagged> t;
    for (const auto& [k, c] : row) t.add({0, k}, c);
    stacked.insert(t);
  }
  Echelon<K> out;
  for (const auto& [pivot, row] : stacked.rows()) {
    if (pivot.first != 1) continue;
    Combination<K> v;
    for (const auto& [k, c] : row) v.add(k.second, c);
    out.insert(v);
  }
  return out;
}

/// Subspace spanned by a set of basis keys.
template <class K, class Range>
Echelon<K> coordinate_span(const Range& keys) {
  Echelon<K> out;
  for (const auto& k : keys) out.insert(Combination<K>(k));
  return out;
}

/// Kernel of the linear map e_i -> images[i].second, returned as
/// combinations of the source keys images[i].first.
template <class In, class Out>
std::vector<Combination<In>> kernel(const std::vector<std::pair<In, Combination<Out>>>& images) {
  using Tagged = std::tuple<int, Out, In>;
  Echelon<Tagged> stacked;
  for (const auto& [src, img] : images) {
    Combination<Tagged> t;
    for (const auto& [k, c] : img) t.add({0, k, In{}}, c);
    t.add({1, Out{}, src}, Scalar(1));
    stacked.insert(t);
  }
  std::vector<Combination<In>> out;
  for (const auto& [pivot, row] : stacked.rows()) {
    if (std::get<0>(pivot) != 1) continue;
    Combination<In> v;
    for (const auto& [k, c] : row) v.add(std::get<2>(k), c);
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace fcg
