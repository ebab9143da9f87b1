#pragma once

#include <algorithm>
#include <array>
#include <numeric>
#include <memory>
#include <optional>
#include <string>
#include <tuple>
#include <unordered_map>
#include <vector>

#include "grpi/error.hpp"
#include "grpi/field.hpp"
#include "grpi/group.hpp"
#include "grpi/linalg.hpp"

namespace grpi {

/// Finite-dimensional G-graded algebra given by sparse structure constants
/// on a homogeneous basis.
template <Field F>
class GradedAlgebra {
 public:
  using V = typename F::value_type;
  using Vec = SparseVector<V>;

  struct Product {
    std::size_t left;
    std::size_t right;
    Vec value;
  };

  GradedAlgebra(std::shared_ptr<const GroupTable> group, F field, std::vector<std::string> labels,
                std::vector<GroupElement> grading, std::vector<Product> products)
      : group_(std::move(group)), field_(std::move(field)), labels_(std::move(labels)), grading_(std::move(grading)) {
    if (!group_) throw std::invalid_argument("algebra needs a group");
    if (labels_.empty()) throw InputError("algebra must have positive dimension");
    if (grading_.size() != labels_.size()) throw InputError("grading must assign a degree to every basis vector");
    components_.resize(group_->order());
    for (std::size_t i = 0; i < grading_.size(); ++i) {
      if (!group_->contains(grading_[i])) throw InputError("degree of basis vector " + labels_[i] + " outside the group");
      components_[grading_[i]].push_back(i);
    }
    for (auto& p : products) {
      if (p.left >= dim() || p.right >= dim()) throw InputError("structure constant index out of range");
      for (const auto& [k, c] : p.value)
        if (k >= dim()) throw InputError("structure constant index out of range");
      if (p.value.empty()) continue;
      auto [it, inserted] = mult_.try_emplace(key(p.left, p.right), std::move(p.value));
      if (!inserted) throw InputError("duplicate product for (" + labels_[p.left] + ", " + labels_[p.right] + ")");
    }
  }

  std::size_t dim() const { return labels_.size(); }
  const GroupTable& group() const { return *group_; }
  const std::shared_ptr<const GroupTable>& group_ptr() const { return group_; }
  const F& field() const { return field_; }
  const std::string& label(std::size_t i) const { return labels_[i]; }
  const std::vector<std::string>& labels() const { return labels_; }
  GroupElement degree(std::size_t i) const { return grading_[i]; }
  const std::vector<GroupElement>& grading() const { return grading_; }
  std::size_t product_count() const { return mult_.size(); }

  /// Basis indices spanning the homogeneous component A_g.
  const std::vector<std::size_t>& component(GroupElement g) const { return components_.at(g); }

  Vec basis_vector(std::size_t i) const { return Vec::unit(i, field_.one()); }

  const Vec& basis_product(std::size_t i, std::size_t j) const {
    static const Vec zero;
    auto it = mult_.find(key(i, j));
    return it == mult_.end() ? zero : it->second;
  }

  Vec multiply(const Vec& a, const Vec& b) const {
    if (a.empty() || b.empty()) return {};
    if (a.nnz() == 1 && b.nnz() == 1) {
      const auto& p = basis_product(a.begin()->first, b.begin()->first);
      V c = a.begin()->second * b.begin()->second;
      return c == field_.one() ? p : scale(field_, p, c);
    }
    SparseAccumulator<F> acc(field_);
    for (const auto& [i, ci] : a)
      for (const auto& [j, cj] : b) {
        const auto& p = basis_product(i, j);
        if (!p.empty()) acc.add(p, V(ci * cj));
      }
    return acc.take();
  }

  /// Degree of a nonzero homogeneous element; the zero vector is homogeneous
  /// of every degree and reports `fallback`.
  std::optional<GroupElement> degree_of(const Vec& v, GroupElement fallback) const {
    std::optional<GroupElement> d;
    for (const auto& [i, c] : v) {
      if (d && *d != grading_[i]) return std::nullopt;
      d = grading_[i];
    }
    return d ? d : std::optional<GroupElement>(fallback);
  }

  bool is_homogeneous_of(const Vec& v, GroupElement g) const {
    for (const auto& [i, c] : v)
      if (grading_[i] != g) return false;
    return true;
  }

  /// First (i, j, k) with e_i e_j having a coordinate at e_k of the wrong
  /// degree, if any.
  std::optional<std::array<std::size_t, 3>> grading_violation() const {
    for (const auto& [k, p] : mult_) {
      auto [i, j] = unkey(k);
      auto expected = group_->mul(grading_[i], grading_[j]);
      for (const auto& [t, c] : p)
        if (grading_[t] != expected) return std::array<std::size_t, 3>{i, j, t};
    }
    return std::nullopt;
  }

  /// First basis triple with (e_i e_j) e_k != e_i (e_j e_k), if any.
  std::optional<std::array<std::size_t, 3>> associativity_violation() const {
    const auto n = dim();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const auto& ij = basis_product(i, j);
        for (std::size_t k = 0; k < n; ++k) {
          const auto& jk = basis_product(j, k);
          if (ij.empty() && jk.empty()) continue;
          if (multiply(ij, basis_vector(k)) != multiply(basis_vector(i), jk))
            return std::array<std::size_t, 3>{i, j, k};
        }
      }
    return std::nullopt;
  }

  std::vector<Product> products() const {
    std::vector<Product> out;
    for (const auto& [k, p] : mult_) {
      auto [i, j] = unkey(k);
      out.push_back({i, j, p});
    }
    std::sort(out.begin(), out.end(),
              [](const Product& a, const Product& b) { return std::tie(a.left, a.right) < std::tie(b.left, b.right); });
    return out;
  }

 private:
  std::uint64_t key(std::size_t i, std::size_t j) const { return static_cast<std::uint64_t>(i) * dim() + j; }
  std::pair<std::size_t, std::size_t> unkey(std::uint64_t k) const { return {k / dim(), k % dim()}; }

  std::shared_ptr<const GroupTable> group_;
  F field_;
  std::vector<std::string> labels_;
  std::vector<GroupElement> grading_;
  std::vector<std::vector<std::size_t>> components_;
  std::unordered_map<std::uint64_t, Vec> mult_;
};

template <Field F>
using AlgebraPtr = std::shared_ptr<const GradedAlgebra<F>>;

/// Subspace of a graded algebra, kept as a reduced echelon basis.
template <Field F>
class Subspace {
 public:
  using V = typename F::value_type;
  using Vec = SparseVector<V>;

  Subspace(AlgebraPtr<F> parent, const std::vector<Vec>& spanning) : parent_(std::move(parent)), basis_(parent_->field()) {
    for (const auto& v : spanning) {
      for (const auto& [i, c] : v)
        if (i >= parent_->dim()) throw InputError("subspace vector has a coordinate outside the algebra");
      basis_.insert(v);
    }
    homogeneous_ = true;
    for (const auto& [p, row] : basis_.rows()) {
      for (const auto& part : split_by_degree(row))
        if (!basis_.contains(part)) homogeneous_ = false;
    }
  }

  /// Span of the given basis indices of the parent.
  static Subspace from_basis_indices(AlgebraPtr<F> parent, const std::vector<std::size_t>& idx) {
    std::vector<Vec> vs;
    for (auto i : idx) vs.push_back(parent->basis_vector(i));
    return Subspace(std::move(parent), vs);
  }

  static Subspace whole(AlgebraPtr<F> parent) {
    std::vector<std::size_t> idx(parent->dim());
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    return from_basis_indices(std::move(parent), idx);
  }

  const AlgebraPtr<F>& parent_ptr() const { return parent_; }
  const GradedAlgebra<F>& parent() const { return *parent_; }
  std::size_t dim() const { return basis_.rank(); }
  bool homogeneous() const { return homogeneous_; }
  std::vector<Vec> basis() const { return basis_.basis(); }
  const EchelonBasis<F>& echelon() const { return basis_; }
  bool contains(const Vec& v) const { return basis_.contains(v); }

  /// Basis of S ∩ A_g (reduced echelon). Requires a homogeneous subspace.
  std::vector<Vec> component(GroupElement g) const {
    if (!homogeneous_) throw InputError("homogeneous component requested for a non-homogeneous subspace");
    EchelonBasis<F> e(parent_->field());
    for (const auto& [p, row] : basis_.rows()) e.insert(project(row, g));
    return e.basis();
  }

  bool closed_under_multiplication() const {
    auto b = basis();
    for (const auto& u : b)
      for (const auto& v : b)
        if (!contains(parent_->multiply(u, v))) return false;
    return true;
  }

  /// A·S ⊆ S and S·A ⊆ S.
  bool is_two_sided_ideal() const {
    for (const auto& s : basis())
      for (std::size_t i = 0; i < parent_->dim(); ++i) {
        auto e = parent_->basis_vector(i);
        if (!contains(parent_->multiply(e, s)) || !contains(parent_->multiply(s, e))) return false;
      }
    return true;
  }

  Vec project(const Vec& v, GroupElement g) const {
    std::vector<typename Vec::Entry> out;
    for (const auto& e : v)
      if (parent_->degree(e.first) == g) out.push_back(e);
    return Vec(std::move(out));
  }

 private:
  std::vector<Vec> split_by_degree(const Vec& v) const {
    std::vector<Vec> parts;
    for (GroupElement g = 0; g < parent_->group().order(); ++g) {
      auto p = project(v, g);
      if (!p.empty()) parts.push_back(std::move(p));
    }
    return parts;
  }

  AlgebraPtr<F> parent_;
  EchelonBasis<F> basis_;
  bool homogeneous_ = true;
};

template <Field F>
std::size_t dim_sum(const Subspace<F>& a, const Subspace<F>& b) {
  EchelonBasis<F> e = a.echelon();
  for (const auto& v : b.basis()) e.insert(v);
  return e.rank();
}

template <Field F>
std::size_t dim_intersection(const Subspace<F>& a, const Subspace<F>& b) {
  return a.dim() + b.dim() - dim_sum(a, b);
}

/// Homogeneous subalgebras B, C of A with A = B + C; B optionally an ideal.
template <Field F>
struct SubalgebraPair {
  Subspace<F> b;
  Subspace<F> c;
  bool b_is_ideal = false;

  /// Empty string if every invariant holds, otherwise a description of the
  /// first failure.
  std::string validate() const {
    if (b.parent_ptr() != c.parent_ptr()) return "B and C live in different algebras";
    if (!b.homogeneous()) return "B is not homogeneous";
    if (!c.homogeneous()) return "C is not homogeneous";
    if (!b.closed_under_multiplication()) return "B is not closed under multiplication";
    if (!c.closed_under_multiplication()) return "C is not closed under multiplication";
    if (b_is_ideal && !b.is_two_sided_ideal()) return "B is flagged as an ideal but is not one";
    if (dim_sum(b, c) != b.parent().dim()) return "B + C does not span A";
    return {};
  }
};

/// Algebra together with a decomposition, as produced by the model builders.
template <Field F>
struct Model {
  AlgebraPtr<F> algebra;
  SubalgebraPair<F> pair;
};

template <Field F>
Subspace<F> homogeneous_component(const Subspace<F>& s, GroupElement g) {
  return Subspace<F>(s.parent_ptr(), s.component(g));
}

template <Field F>
Subspace<F> homogeneous_component(const AlgebraPtr<F>& a, GroupElement g) {
  return Subspace<F>::from_basis_indices(a, a->component(g));
}

}  // namespace grpi
