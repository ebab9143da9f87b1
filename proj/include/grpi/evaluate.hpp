#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "grpi/algebra.hpp"
#include "grpi/parse.hpp"
#include "grpi/polynomial.hpp"

namespace grpi {

/// Image of f under the graded homomorphism sending each variable to its
/// assigned element. Assigned elements must be homogeneous of the variable's
/// degree.
template <Field F>
SparseVector<typename F::value_type> evaluate(const Polynomial<F>& f,
                                              const std::map<Variable, SparseVector<typename F::value_type>>& assignment,
                                              const GradedAlgebra<F>& a) {
  using V = typename F::value_type;
  for (const auto& [v, x] : assignment)
    if (!a.is_homogeneous_of(x, v.degree))
      throw InputError("value assigned to " + format_variable(v, a.group()) + " is not homogeneous of its degree");
  SparseAccumulator<F> acc(a.field());
  for (const auto& [w, c] : f.terms()) {
    if (w.empty()) throw InputError("constant term cannot be evaluated in a non-unital algebra");
    SparseVector<V> prod;
    for (std::size_t i = 0; i < w.size(); ++i) {
      auto it = assignment.find(w[i]);
      if (it == assignment.end()) throw InputError("unassigned variable " + format_variable(w[i], a.group()));
      prod = i == 0 ? it->second : a.multiply(prod, it->second);
      if (prod.empty()) break;
    }
    acc.add(prod, c);
  }
  return acc.take();
}

/// Expands a Lie expression (brackets [a,b] = ab - ba) and evaluates it.
template <Field F>
SparseVector<typename F::value_type> lie_evaluate(std::string_view expression,
                                                  const std::map<Variable, SparseVector<typename F::value_type>>& assignment,
                                                  const GradedAlgebra<F>& a) {
  return evaluate(parse_lie(expression, a.group_ptr(), a.field()), assignment, a);
}

/// Candidate values for each (family, degree): a basis of the homogeneous
/// component each variable ranges over.
template <Field F>
class VariableRanges {
 public:
  using Vec = SparseVector<typename F::value_type>;

  /// Every family ranges over the whole algebra.
  static VariableRanges over(const AlgebraPtr<F>& a) {
    VariableRanges r(a);
    for (GroupElement g = 0; g < a->group().order(); ++g) {
      std::vector<Vec> comp;
      for (auto i : a->component(g)) comp.push_back(a->basis_vector(i));
      for (auto& fam : r.table_) fam[g] = comp;
    }
    return r;
  }

  /// Every family ranges over the homogeneous subspace S.
  static VariableRanges over(const Subspace<F>& s) {
    VariableRanges r(s.parent_ptr());
    for (GroupElement g = 0; g < s.parent().group().order(); ++g) {
      auto comp = s.component(g);
      for (auto& fam : r.table_) fam[g] = comp;
    }
    return r;
  }

  /// X over A, Y over B, Z over C.
  static VariableRanges semi(const SubalgebraPair<F>& pair) {
    auto r = over(pair.b.parent_ptr());
    for (GroupElement g = 0; g < pair.b.parent().group().order(); ++g) {
      r.table_[static_cast<int>(Family::Y)][g] = pair.b.component(g);
      r.table_[static_cast<int>(Family::Z)][g] = pair.c.component(g);
    }
    return r;
  }

  const GradedAlgebra<F>& algebra() const { return *algebra_; }
  const AlgebraPtr<F>& algebra_ptr() const { return algebra_; }

  const std::vector<Vec>& candidates(const Variable& v) const {
    return table_[static_cast<int>(v.family)].at(v.degree);
  }

 private:
  explicit VariableRanges(AlgebraPtr<F> a) : algebra_(std::move(a)) {
    for (auto& fam : table_) fam.resize(algebra_->group().order());
  }

  AlgebraPtr<F> algebra_;
  std::array<std::vector<std::vector<Vec>>, 3> table_;
};

}  // namespace grpi
