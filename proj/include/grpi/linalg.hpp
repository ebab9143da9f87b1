#pragma once

#include <map>
#include <utility>
#include <vector>

#include "grpi/field.hpp"

namespace grpi {

/// Sparse coordinate vector: (index, value) pairs sorted by index, no zeros.
template <class V>
class SparseVector {
 public:
  using Entry = std::pair<std::size_t, V>;

  SparseVector() = default;
  explicit SparseVector(std::vector<Entry> sorted) : entries_(std::move(sorted)) {}

  static SparseVector unit(std::size_t i, V one) { return SparseVector({{i, std::move(one)}}); }

  const std::vector<Entry>& entries() const { return entries_; }
  std::vector<Entry>& mutable_entries() { return entries_; }
  bool empty() const { return entries_.empty(); }
  std::size_t nnz() const { return entries_.size(); }
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }

  const V* find(std::size_t i) const {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), i,
                               [](const Entry& e, std::size_t k) { return e.first < k; });
    return it != entries_.end() && it->first == i ? &it->second : nullptr;
  }

  friend bool operator==(const SparseVector&, const SparseVector&) = default;

 private:
  std::vector<Entry> entries_;
};

/// a + c*b, dropping zeros.
template <Field F>
SparseVector<typename F::value_type> add_scaled(const F& field, const SparseVector<typename F::value_type>& a,
                                                const typename F::value_type& c,
                                                const SparseVector<typename F::value_type>& b) {
  using V = typename F::value_type;
  if (field.is_zero(c) || b.empty()) return a;
  std::vector<typename SparseVector<V>::Entry> out;
  out.reserve(a.nnz() + b.nnz());
  auto i = a.begin(), j = b.begin();
  while (i != a.end() || j != b.end()) {
    if (j == b.end() || (i != a.end() && i->first < j->first)) {
      out.push_back(*i++);
    } else if (i == a.end() || j->first < i->first) {
      out.emplace_back(j->first, V(c * j->second));
      ++j;
    } else {
      V s = i->second + c * j->second;
      if (!field.is_zero(s)) out.emplace_back(i->first, std::move(s));
      ++i;
      ++j;
    }
  }
  return SparseVector<V>(std::move(out));
}

template <Field F>
SparseVector<typename F::value_type> scale(const F& field, const SparseVector<typename F::value_type>& a,
                                           const typename F::value_type& c) {
  using V = typename F::value_type;
  if (field.is_zero(c)) return {};
  auto out = a;
  for (auto& [i, v] : out.mutable_entries()) v = V(v * c);
  return out;
}

/// Accumulates many scaled sparse vectors into a dense-keyed map; cheaper
/// than repeated add_scaled when the number of summands is large.
template <Field F>
class SparseAccumulator {
 public:
  using V = typename F::value_type;
  explicit SparseAccumulator(F field) : field_(std::move(field)) {}

  void add(std::size_t i, const V& v) {
    auto [it, inserted] = acc_.try_emplace(i, v);
    if (!inserted) it->second = it->second + v;
  }
  void add(const SparseVector<V>& x, const V& c) {
    for (const auto& [i, v] : x) add(i, V(c * v));
  }
  SparseVector<V> take() {
    std::vector<typename SparseVector<V>::Entry> out;
    out.reserve(acc_.size());
    for (auto& [i, v] : acc_)
      if (!field_.is_zero(v)) out.emplace_back(i, std::move(v));
    acc_.clear();
    return SparseVector<V>(std::move(out));
  }

 private:
  F field_;
  std::map<std::size_t, V> acc_;
};

/// Row space in reduced row echelon form. Each stored row has leading
/// coefficient 1 at its pivot and zeros at every other pivot.
template <Field F>
class EchelonBasis {
 public:
  using V = typename F::value_type;
  using Vec = SparseVector<V>;

  explicit EchelonBasis(F field = F{}) : field_(std::move(field)) {}

  std::size_t rank() const { return rows_.size(); }
  const std::map<std::size_t, Vec>& rows() const { return rows_; }
  const F& field() const { return field_; }

  Vec reduce(const Vec& v) const {
    std::vector<std::pair<const Vec*, V>> hits;
    for (const auto& [i, c] : v) {
      auto it = rows_.find(i);
      if (it != rows_.end()) hits.emplace_back(&it->second, c);
    }
    if (hits.empty()) return v;
    if (hits.size() == 1) return add_scaled(field_, v, V(-hits[0].second), *hits[0].first);
    SparseAccumulator<F> acc(field_);
    acc.add(v, field_.one());
    for (const auto& [row, c] : hits) acc.add(*row, V(-c));
    return acc.take();
  }

  bool contains(const Vec& v) const { return reduce(v).empty(); }

  /// Adds v to the span; returns false if it was already there.
  bool insert(const Vec& v) {
    auto r = reduce(v);
    if (r.empty()) return false;
    auto pivot = r.entries().front().first;
    V inv = field_.one() / r.entries().front().second;
    r = scale(field_, r, inv);
    for (auto& [p, row] : rows_) {
      if (const V* c = row.find(pivot)) {
        V neg = -*c;
        row = add_scaled(field_, row, neg, r);
      }
    }
    rows_.emplace(pivot, std::move(r));
    return true;
  }

  std::vector<Vec> basis() const {
    std::vector<Vec> out;
    out.reserve(rows_.size());
    for (const auto& [p, row] : rows_) out.push_back(row);
    return out;
  }

  /// Basis (in reduced echelon form) of { x in F^n : row . x = 0 for every row }.
  std::vector<Vec> null_space(std::size_t n) const {
    EchelonBasis kernel(field_);
    for (std::size_t f = 0; f < n; ++f) {
      if (rows_.count(f)) continue;
      std::vector<typename Vec::Entry> entries;
      for (const auto& [p, row] : rows_) {
        if (p > f) break;
        if (const V* c = row.find(f)) entries.emplace_back(p, V(-*c));
      }
      entries.emplace_back(f, field_.one());
      std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
      kernel.insert(Vec(std::move(entries)));
    }
    return kernel.basis();
  }

 private:
  F field_;
  std::map<std::size_t, Vec> rows_;
};

template <Field F>
std::size_t rank_of(const F& field, const std::vector<SparseVector<typename F::value_type>>& vs) {
  EchelonBasis<F> e(field);
  for (const auto& v : vs) e.insert(v);
  return e.rank();
}

}  // namespace grpi
