#pragma once

#include <map>
#include <string>
#include <vector>

#include "grpi/algebra.hpp"

namespace grpi {

/// Words of length 1..N over letters 1..m, ordered by length then
/// lexicographically. Basis of the truncated free algebra D_{<=N}.
class TruncatedWords {
 public:
  using Letters = std::vector<std::uint32_t>;

  TruncatedWords(std::uint32_t m, std::uint32_t depth) : m_(m), depth_(depth) {
    if (m == 0 || depth == 0) throw InputError("truncated free algebra needs m >= 1 and N >= 1");
    std::vector<Letters> layer{{}};
    for (std::uint32_t len = 1; len <= depth; ++len) {
      std::vector<Letters> next;
      for (const auto& w : layer)
        for (std::uint32_t a = 1; a <= m; ++a) {
          auto v = w;
          v.push_back(a);
          next.push_back(std::move(v));
        }
      for (const auto& w : next) {
        index_.emplace(w, words_.size());
        words_.push_back(w);
      }
      layer = std::move(next);
    }
  }

  std::uint32_t generators() const { return m_; }
  std::uint32_t depth() const { return depth_; }
  std::size_t size() const { return words_.size(); }
  const Letters& word(std::size_t i) const { return words_[i]; }
  std::optional<std::size_t> find(const Letters& w) const {
    auto it = index_.find(w);
    return it == index_.end() ? std::nullopt : std::optional<std::size_t>(it->second);
  }

  /// Index of uv, or nullopt when |uv| > N.
  std::optional<std::size_t> concat(std::size_t u, std::size_t v) const {
    if (words_[u].size() + words_[v].size() > depth_) return std::nullopt;
    auto w = words_[u];
    w.insert(w.end(), words_[v].begin(), words_[v].end());
    return find(w);
  }

  bool contains_letter(std::size_t i, std::uint32_t letter) const {
    return std::find(words_[i].begin(), words_[i].end(), letter) != words_[i].end();
  }

  std::string label(std::size_t i) const {
    std::string s;
    for (std::size_t k = 0; k < words_[i].size(); ++k) s += (k ? "*t" : "t") + std::to_string(words_[i][k]);
    return s;
  }

 private:
  std::uint32_t m_, depth_;
  std::vector<Letters> words_;
  std::map<Letters, std::size_t> index_;
};

/// M_n(F) with the elementary grading deg(e_ij) = g_i^{-1} g_j.
template <Field F = RationalField>
AlgebraPtr<F> matrix_algebra_elementary(std::size_t n, const std::vector<GroupElement>& degrees,
                                        std::shared_ptr<const GroupTable> group, F field = F{}) {
  if (n == 0) throw InputError("matrix size must be positive");
  if (degrees.size() != n) throw InputError("need one degree per matrix row");
  std::vector<std::string> labels;
  std::vector<GroupElement> grading;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      labels.push_back("e" + std::to_string(i + 1) + std::to_string(j + 1));
      if (!group->contains(degrees[i]) || !group->contains(degrees[j])) throw InputError("degree outside the group");
      grading.push_back(group->mul(group->inverse(degrees[i]), degrees[j]));
    }
  std::vector<typename GradedAlgebra<F>::Product> products;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        products.push_back({i * n + j, j * n + k, SparseVector<typename F::value_type>::unit(i * n + k, field.one())});
  return std::make_shared<const GradedAlgebra<F>>(group, field, std::move(labels), std::move(grading),
                                                  std::move(products));
}

/// FG with basis u_g, u_g u_h = u_{gh}, deg(u_g) = g.
template <Field F = RationalField>
AlgebraPtr<F> group_algebra(std::shared_ptr<const GroupTable> group, F field = F{}) {
  std::vector<std::string> labels;
  std::vector<GroupElement> grading;
  std::vector<typename GradedAlgebra<F>::Product> products;
  for (GroupElement g = 0; g < group->order(); ++g) {
    labels.push_back("u" + group->label(g));
    grading.push_back(g);
    for (GroupElement h = 0; h < group->order(); ++h)
      products.push_back({g, h, SparseVector<typename F::value_type>::unit(group->mul(g, h), field.one())});
  }
  return std::make_shared<const GradedAlgebra<F>>(group, field, std::move(labels), std::move(grading),
                                                  std::move(products));
}

/// D_{<=N}: non-unital, trivially graded, products longer than N vanish.
template <Field F = RationalField>
AlgebraPtr<F> truncated_free_algebra(std::uint32_t m, std::uint32_t depth, std::shared_ptr<const GroupTable> group,
                                     F field = F{}) {
  TruncatedWords words(m, depth);
  std::vector<std::string> labels;
  std::vector<typename GradedAlgebra<F>::Product> products;
  for (std::size_t u = 0; u < words.size(); ++u) {
    labels.push_back(words.label(u));
    for (std::size_t v = 0; v < words.size(); ++v)
      if (auto w = words.concat(u, v))
        products.push_back({u, v, SparseVector<typename F::value_type>::unit(*w, field.one())});
  }
  std::vector<GroupElement> grading(words.size(), group->identity());
  return std::make_shared<const GradedAlgebra<F>>(group, field, std::move(labels), std::move(grading),
                                                  std::move(products));
}

namespace detail {

// 2x2 block matrices over D_{<=N}; block (r, c) holds the words accepted by
// allowed(r, c, word). Degree of block (r, c) is 0 on the diagonal and 1
// off it (Z_2). Basis ordered by word, then block 11, 12, 21, 22.
template <Field F, class Allowed>
struct BlockAlgebra {
  AlgebraPtr<F> algebra;
  std::map<std::tuple<int, int, std::size_t>, std::size_t> index;  // (r, c, word) -> basis

  BlockAlgebra(const TruncatedWords& words, Allowed allowed, F field) {
    auto z2 = std::make_shared<const GroupTable>(cyclic_group(2));
    std::vector<std::string> labels;
    std::vector<GroupElement> grading;
    for (std::size_t w = 0; w < words.size(); ++w)
      for (int r = 1; r <= 2; ++r)
        for (int c = 1; c <= 2; ++c)
          if (allowed(r, c, w)) {
            index.emplace(std::tuple{r, c, w}, labels.size());
            labels.push_back("e" + std::to_string(r) + std::to_string(c) + ":" + words.label(w));
            grading.push_back(r == c ? 0 : 1);
          }
    std::vector<typename GradedAlgebra<F>::Product> products;
    for (std::size_t w1 = 0; w1 < words.size(); ++w1)
      for (std::size_t w2 = 0; w2 < words.size(); ++w2) {
        if (words.word(w1).size() + words.word(w2).size() > words.depth()) break;
        auto w = *words.concat(w1, w2);
        for (int r = 1; r <= 2; ++r)
          for (int k = 1; k <= 2; ++k)
            for (int c = 1; c <= 2; ++c) {
              auto left = index.find({r, k, w1});
              auto right = index.find({k, c, w2});
              if (left == index.end() || right == index.end()) continue;
              auto it = index.find({r, c, w});
              if (it == index.end()) throw std::logic_error("block algebra not closed under multiplication");
              products.push_back(
                  {left->second, right->second, SparseVector<typename F::value_type>::unit(it->second, field.one())});
            }
      }
    algebra = std::make_shared<const GradedAlgebra<F>>(z2, field, std::move(labels), std::move(grading),
                                                       std::move(products));
  }

  template <class Pred>
  Subspace<F> span_where(Pred pred) const {
    std::vector<std::size_t> idx;
    for (const auto& [k, i] : index) {
      auto [r, c, w] = k;
      if (pred(r, c, w)) idx.push_back(i);
    }
    std::sort(idx.begin(), idx.end());
    return Subspace<F>::from_basis_indices(algebra, idx);
  }
};

}  // namespace detail

/// A = M_2(D_{<=N}) graded by Z_2 (diagonal blocks neutral), with B the
/// upper and C the lower triangular block matrices.
template <Field F = RationalField>
Model<F> counterexample_A(std::uint32_t m, std::uint32_t depth, F field = F{}) {
  TruncatedWords words(m, depth);
  auto all = [](int, int, std::size_t) { return true; };
  detail::BlockAlgebra<F, decltype(all)> blocks(words, all, field);
  auto b = blocks.span_where([](int r, int c, std::size_t) { return r <= c; });
  auto c = blocks.span_where([](int r, int c, std::size_t) { return r >= c; });
  return {blocks.algebra, {std::move(b), std::move(c), false}};
}

/// Same A, with B the top row and C the bottom row, so A = B ⊕ C.
template <Field F = RationalField>
Model<F> counterexample_direct_sum(std::uint32_t m, std::uint32_t depth, F field = F{}) {
  TruncatedWords words(m, depth);
  auto all = [](int, int, std::size_t) { return true; };
  detail::BlockAlgebra<F, decltype(all)> blocks(words, all, field);
  auto b = blocks.span_where([](int r, int, std::size_t) { return r == 1; });
  auto c = blocks.span_where([](int r, int, std::size_t) { return r == 2; });
  return {blocks.algebra, {std::move(b), std::move(c), false}};
}

/// Upper triangular 2x2 matrices, deg e11 = deg e22 = 0, deg e12 = 1, with
/// B = span{e12} (an ideal) and C the diagonal.
template <Field F = RationalField>
Model<F> ideal_example_UT2(F field = F{}) {
  auto z2 = std::make_shared<const GroupTable>(cyclic_group(2));
  using Vec = SparseVector<typename F::value_type>;
  // basis: 0 = e11, 1 = e12, 2 = e22
  std::vector<typename GradedAlgebra<F>::Product> products{
      {0, 0, Vec::unit(0, field.one())},
      {0, 1, Vec::unit(1, field.one())},
      {1, 2, Vec::unit(1, field.one())},
      {2, 2, Vec::unit(2, field.one())},
  };
  auto a = std::make_shared<const GradedAlgebra<F>>(z2, field, std::vector<std::string>{"e11", "e12", "e22"},
                                                    std::vector<GroupElement>{0, 1, 0}, std::move(products));
  auto b = Subspace<F>::from_basis_indices(a, {1});
  auto c = Subspace<F>::from_basis_indices(a, {0, 2});
  return {a, {std::move(b), std::move(c), true}};
}

/// D = D_{<=N} = S1 + S2 with S2 the span of words containing letter 1;
/// A = (D, S2; S2, D) graded by Z_2, B = diag(S1, S1), C = all-S2 blocks.
template <Field F = RationalField>
Model<F> semi_example(std::uint32_t m, std::uint32_t depth, F field = F{}) {
  if (m < 2) throw InputError("semi_example needs at least two generators");
  TruncatedWords words(m, depth);
  auto allowed = [&words](int r, int c, std::size_t w) { return r == c || words.contains_letter(w, 1); };
  detail::BlockAlgebra<F, decltype(allowed)> blocks(words, allowed, field);
  auto b = blocks.span_where([&words](int r, int c, std::size_t w) { return r == c && !words.contains_letter(w, 1); });
  auto c = blocks.span_where([&words](int, int, std::size_t w) { return words.contains_letter(w, 1); });
  return {blocks.algebra, {std::move(b), std::move(c), false}};
}

/// Componentwise t-fold product A × ... × A with (A^t)_g = (A_g)^t.
template <Field F>
AlgebraPtr<F> direct_power(const GradedAlgebra<F>& a, std::size_t t) {
  if (t == 0) throw InputError("direct power exponent must be positive");
  const auto n = a.dim();
  std::vector<std::string> labels;
  std::vector<GroupElement> grading;
  for (std::size_t copy = 0; copy < t; ++copy)
    for (std::size_t i = 0; i < n; ++i) {
      labels.push_back(t == 1 ? a.label(i) : a.label(i) + "#" + std::to_string(copy + 1));
      grading.push_back(a.degree(i));
    }
  std::vector<typename GradedAlgebra<F>::Product> products;
  for (const auto& p : a.products())
    for (std::size_t copy = 0; copy < t; ++copy) {
      auto v = p.value;
      for (auto& e : v.mutable_entries()) e.first += copy * n;
      products.push_back({p.left + copy * n, p.right + copy * n, std::move(v)});
    }
  return std::make_shared<const GradedAlgebra<F>>(a.group_ptr(), a.field(), std::move(labels), std::move(grading),
                                                  std::move(products));
}

}  // namespace grpi
