#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "grpi/error.hpp"
#include "grpi/field.hpp"
#include "grpi/group.hpp"

namespace grpi {

enum class Family : std::uint8_t { X = 0, Y = 1, Z = 2 };

inline char family_letter(Family f) { return "xyz"[static_cast<int>(f)]; }

/// x_i^{(g)}, y_i^{(g)} or z_i^{(g)}.
struct Variable {
  Family family = Family::X;
  std::uint32_t index = 1;
  GroupElement degree = 0;

  friend auto operator<=>(const Variable&, const Variable&) = default;
};

inline Variable xvar(std::uint32_t i, GroupElement g) { return {Family::X, i, g}; }
inline Variable yvar(std::uint32_t i, GroupElement g) { return {Family::Y, i, g}; }
inline Variable zvar(std::uint32_t i, GroupElement g) { return {Family::Z, i, g}; }

using Word = std::vector<Variable>;

/// Canonical order on words: shorter first, then lexicographic.
struct WordOrder {
  bool operator()(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

inline GroupElement word_degree(const Word& w, const GroupTable& group) {
  GroupElement d = group.identity();
  for (const auto& v : w) {
    if (!group.contains(v.degree)) throw InputError("variable degree outside the group");
    d = group.mul(d, v.degree);
  }
  return d;
}

/// Counts of variables per group element, indexed by element.
using Signature = std::vector<std::uint32_t>;

inline std::uint32_t signature_size(const Signature& s) {
  std::uint32_t n = 0;
  for (auto c : s) n += c;
  return n;
}

/// Element of the free G-graded algebra over F: a finite sum of words with
/// nonzero coefficients.
template <Field F>
class Polynomial {
 public:
  using value_type = typename F::value_type;
  using TermMap = std::map<Word, value_type, WordOrder>;

  explicit Polynomial(std::shared_ptr<const GroupTable> group, F field = F{})
      : group_(std::move(group)), field_(std::move(field)) {
    if (!group_) throw std::invalid_argument("polynomial needs a group");
  }

  static Polynomial monomial(std::shared_ptr<const GroupTable> group, F field, Word w, value_type c) {
    Polynomial p(std::move(group), std::move(field));
    p.add_term(std::move(w), std::move(c));
    return p;
  }
  static Polynomial monomial(std::shared_ptr<const GroupTable> group, F field, Word w) {
    auto one = field.one();
    return monomial(std::move(group), std::move(field), std::move(w), std::move(one));
  }

  const std::shared_ptr<const GroupTable>& group_ptr() const { return group_; }
  const GroupTable& group() const { return *group_; }
  const F& field() const { return field_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  value_type coefficient(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? field_.zero() : it->second;
  }

  void add_term(Word w, const value_type& c) {
    for (const auto& v : w)
      if (!group_->contains(v.degree)) throw InputError("variable degree outside the group");
    if (field_.is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(std::move(w), c);
    if (!inserted) {
      it->second = it->second + c;
      if (field_.is_zero(it->second)) terms_.erase(it);
    }
  }

  Polynomial same_ring() const { return Polynomial(group_, field_); }

  Polynomial scaled(const value_type& c) const {
    Polynomial r = same_ring();
    if (field_.is_zero(c)) return r;
    for (const auto& [w, a] : terms_) r.terms_.emplace_hint(r.terms_.end(), w, value_type(a * c));
    return r;
  }

  Polynomial& operator+=(const Polynomial& o) {
    check_compatible(o);
    for (const auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    check_compatible(o);
    for (const auto& [w, c] : o.terms_) add_term(w, value_type(-c));
    return *this;
  }
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(const Polynomial& a) { return a.scaled(-a.field_.one()); }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.check_compatible(b);
    Polynomial r = a.same_ring();
    for (const auto& [u, cu] : a.terms_)
      for (const auto& [v, cv] : b.terms_) {
        Word w;
        w.reserve(u.size() + v.size());
        w.insert(w.end(), u.begin(), u.end());
        w.insert(w.end(), v.begin(), v.end());
        r.add_term(std::move(w), value_type(cu * cv));
      }
    return r;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return *a.group_ == *b.group_ && a.field_ == b.field_ && a.terms_ == b.terms_;
  }

  /// Degree shared by every word, or nullopt if f is not homogeneous. The
  /// zero polynomial reports the identity.
  std::optional<GroupElement> homogeneous_degree() const {
    std::optional<GroupElement> d;
    for (const auto& [w, c] : terms_) {
      auto g = word_degree(w, *group_);
      if (d && *d != g) return std::nullopt;
      d = g;
    }
    return d ? d : std::optional<GroupElement>(group_->identity());
  }

  std::set<Variable> variables() const {
    std::set<Variable> vs;
    for (const auto& [w, c] : terms_) vs.insert(w.begin(), w.end());
    return vs;
  }

  void check_compatible(const Polynomial& o) const {
    if (!(field_ == o.field_)) throw InputError("field mismatch between polynomials");
    if (group_ != o.group_ && !(*group_ == *o.group_)) throw InputError("group mismatch between polynomials");
  }

 private:
  std::shared_ptr<const GroupTable> group_;
  F field_;
  TermMap terms_;
};

template <Field F>
Polynomial<F> variable_poly(const Polynomial<F>& like, Variable v) {
  return Polynomial<F>::monomial(like.group_ptr(), like.field(), Word{v});
}

namespace detail {

// Literal substitution without degree checks; unassigned variables stay.
template <Field F>
Polynomial<F> replace_variables(const Polynomial<F>& f, const std::map<Variable, Polynomial<F>>& sigma) {
  Polynomial<F> result = f.same_ring();
  for (const auto& [w, c] : f.terms()) {
    auto term = Polynomial<F>::monomial(f.group_ptr(), f.field(), Word{}, c);
    for (const auto& v : w) {
      auto it = sigma.find(v);
      term = term * (it != sigma.end() ? it->second : variable_poly(f, v));
      if (term.is_zero()) break;
    }
    result += term;
  }
  return result;
}

}  // namespace detail

/// Image of f under the graded endomorphism defined by sigma (identity on
/// variables not in sigma). Every image must be homogeneous of the degree of
/// the variable it replaces.
template <Field F>
Polynomial<F> substitute(const Polynomial<F>& f, const std::map<Variable, Polynomial<F>>& sigma) {
  for (const auto& [v, image] : sigma) {
    f.check_compatible(image);
    if (image.is_zero()) continue;
    auto d = image.homogeneous_degree();
    if (!d || *d != v.degree)
      throw InputError(std::string("image of ") + family_letter(v.family) + std::to_string(v.index) +
                       " is not homogeneous of degree " + f.group().label(v.degree));
  }
  return detail::replace_variables(f, sigma);
}

/// Replaces every x_i^{(g)} by y_i^{(g)} + z_i^{(g)}.
template <Field F>
Polynomial<F> expand_x(const Polynomial<F>& f) {
  std::map<Variable, Polynomial<F>> sigma;
  for (const auto& v : f.variables())
    if (v.family == Family::X)
      sigma.emplace(v, variable_poly(f, yvar(v.index, v.degree)) + variable_poly(f, zvar(v.index, v.degree)));
  return detail::replace_variables(f, sigma);
}

/// True iff no word repeats a variable.
template <Field F>
bool is_word_multilinear(const Polynomial<F>& f) {
  for (const auto& [w, c] : f.terms()) {
    auto sorted = w;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  }
  return true;
}

/// True iff all words use one common variable set, each variable exactly once.
template <Field F>
bool is_multilinear(const Polynomial<F>& f) {
  std::optional<std::vector<Variable>> common;
  for (const auto& [w, c] : f.terms()) {
    auto sorted = w;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
    if (common && *common != sorted) return false;
    common = std::move(sorted);
  }
  return true;
}

/// Multilinear, and the common variable set has `signature[g]` variables of
/// each degree g.
template <Field F>
bool is_multilinear(const Polynomial<F>& f, const Signature& signature) {
  if (!is_multilinear(f)) return false;
  if (f.is_zero()) return true;
  Signature counts(f.group().order(), 0);
  for (const auto& v : f.terms().begin()->first) ++counts[v.degree];
  auto expected = signature;
  expected.resize(f.group().order(), 0);
  if (signature.size() > f.group().order())
    for (std::size_t i = f.group().order(); i < signature.size(); ++i)
      if (signature[i] != 0) return false;
  return counts == expected;
}

/// The signature of a multilinear polynomial (counts per degree).
template <Field F>
Signature signature_of(const Polynomial<F>& f) {
  Signature counts(f.group().order(), 0);
  if (!f.is_zero())
    for (const auto& v : f.terms().begin()->first) ++counts[v.degree];
  return counts;
}

}  // namespace grpi
