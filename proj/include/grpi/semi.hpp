#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "grpi/combinatorics.hpp"
#include "grpi/engine.hpp"

namespace grpi {

/// Decomposition A = B + C plus the semi-identities registered for it.
/// Registering returns a new context; contexts are never mutated.
template <Field F>
class SemiContext {
 public:
  explicit SemiContext(Model<F> model, std::uint64_t budget = kDefaultCellBudget)
      : model_(std::move(model)), budget_(budget) {
    if (!model_.pair.b.homogeneous() || !model_.pair.c.homogeneous())
      throw InputError("semi-identities need homogeneous subalgebras B and C");
  }

  const Model<F>& model() const { return model_; }
  const SubalgebraPair<F>& pair() const { return model_.pair; }
  const AlgebraPtr<F>& algebra() const { return model_.algebra; }
  const std::vector<Polynomial<F>>& registered() const { return registered_; }
  std::uint64_t budget() const { return budget_; }

  /// Context with f added; throws InputError if f is not a semi-identity.
  SemiContext with(const Polynomial<F>& f) const;

 private:
  Model<F> model_;
  std::uint64_t budget_;
  std::vector<Polynomial<F>> registered_;
};

/// Whether f (X variables expanded to y + z) vanishes for all y-values in B
/// and z-values in C of matching degrees.
template <Field F>
bool is_semi_identity(const Polynomial<F>& f, const SubalgebraPair<F>& pair, std::uint64_t budget = kDefaultCellBudget) {
  if (!pair.b.homogeneous() || !pair.c.homogeneous())
    throw InputError("semi-identities need homogeneous subalgebras B and C");
  auto g = expand_x(f);
  CellMeter meter(budget);
  return !find_nonvanishing(g, VariableRanges<F>::semi(pair), meter);
}

template <Field F>
bool is_semi_identity(const Polynomial<F>& f, const SemiContext<F>& ctx) {
  return is_semi_identity(f, ctx.pair(), ctx.budget());
}

/// A semi-identity is trivial when it is already a graded identity of A,
/// i.e. y- and z-slots both range over all of A.
template <Field F>
bool is_trivial_semi(const Polynomial<F>& f, const AlgebraPtr<F>& a, std::uint64_t budget = kDefaultCellBudget) {
  auto g = expand_x(f);
  CellMeter meter(budget);
  return !find_nonvanishing(g, VariableRanges<F>::over(a), meter);
}

template <Field F>
bool is_trivial_semi(const Polynomial<F>& f, const SemiContext<F>& ctx) {
  return is_trivial_semi(f, ctx.algebra(), ctx.budget());
}

template <Field F>
SemiContext<F> SemiContext<F>::with(const Polynomial<F>& f) const {
  if (!is_semi_identity(f, model_.pair, budget_)) throw InputError("polynomial is not a semi-identity of this context");
  SemiContext next = *this;
  next.registered_.push_back(f);
  return next;
}

/// For each degree g: the (global) indices of the slots filled by y
/// variables. Slots not listed are z variables.
struct Pattern {
  std::vector<std::vector<std::uint32_t>> y_slots;

  std::size_t r(GroupElement g) const { return y_slots.at(g).size(); }
  friend auto operator<=>(const Pattern&, const Pattern&) = default;
};

namespace detail {

// Slot = (degree, index) of a Y/Z variable.
inline std::vector<std::pair<GroupElement, std::uint32_t>> slots_of_word(const Word& w) {
  std::vector<std::pair<GroupElement, std::uint32_t>> s;
  for (const auto& v : w) {
    if (v.family == Family::X) throw InputError("pattern split needs y/z variables only (expand x first)");
    s.emplace_back(v.degree, v.index);
  }
  std::sort(s.begin(), s.end());
  if (std::adjacent_find(s.begin(), s.end()) != s.end()) throw InputError("word repeats a slot");
  return s;
}

}  // namespace detail

inline Pattern pattern_of(const Word& w, std::size_t group_order) {
  Pattern p;
  p.y_slots.resize(group_order);
  for (const auto& v : w)
    if (v.family == Family::Y) p.y_slots[v.degree].push_back(v.index);
  for (auto& s : p.y_slots) std::sort(s.begin(), s.end());
  return p;
}

/// Splits a multilinear polynomial over Y ∪ Z into its pattern components.
template <Field F>
std::map<Pattern, Polynomial<F>> pattern_split(const Polynomial<F>& f) {
  std::map<Pattern, Polynomial<F>> out;
  std::optional<std::vector<std::pair<GroupElement, std::uint32_t>>> slots;
  for (const auto& [w, c] : f.terms()) {
    auto s = detail::slots_of_word(w);
    if (slots && *slots != s) throw InputError("pattern split needs a multilinear polynomial");
    slots = std::move(s);
    auto p = pattern_of(w, f.group().order());
    out.try_emplace(p, f.same_ring()).first->second.add_term(w, c);
  }
  return out;
}

/// Sum over S_d of alpha_sigma y_{sigma(1)}^{(g)} x_{d+1}^{(g^-1)} ... x_{2d-1}^{(g^-1)} y_{sigma(d)}^{(g)}.
/// alpha is indexed by permutations of S_d in lexicographic order (identity
/// first) and is normalized so the identity coefficient is 1.
template <Field F>
Polynomial<F> sp_d(std::uint32_t d, GroupElement g, const std::vector<typename F::value_type>& alpha,
                   std::shared_ptr<const GroupTable> group, F field = F{}) {
  using V = typename F::value_type;
  if (d == 0) throw InputError("d must be >= 1");
  if (!group->contains(g)) throw InputError("degree outside the group");
  std::vector<std::uint32_t> perm(d);
  std::iota(perm.begin(), perm.end(), 1u);
  std::size_t count = 0;
  do ++count;
  while (std::next_permutation(perm.begin(), perm.end()));
  if (alpha.size() != count) throw InputError("need one coefficient per permutation of S_d");
  if (field.is_zero(alpha[0])) throw InputError("coefficient of the identity permutation must be nonzero");
  V norm = field.one() / alpha[0];

  const auto ginv = group->inverse(g);
  Polynomial<F> out(group, field);
  std::size_t k = 0;
  do {
    Word w;
    for (std::uint32_t i = 0; i < d; ++i) {
      if (i > 0) w.push_back(xvar(d + i, ginv));
      w.push_back(yvar(perm[i], g));
    }
    out.add_term(std::move(w), V(alpha[k] * norm));
    ++k;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

/// Sp_d with alpha = identity only.
template <Field F>
Polynomial<F> sp_d(std::uint32_t d, GroupElement g, std::shared_ptr<const GroupTable> group, F field = F{}) {
  std::size_t count = 1;
  for (std::uint32_t i = 2; i <= d; ++i) count *= i;
  std::vector<typename F::value_type> alpha(count, field.zero());
  alpha[0] = field.one();
  return sp_d(d, g, alpha, std::move(group), std::move(field));
}

/// True iff f is supported on staircase words of Sp_d for (d, g) and has a
/// nonzero identity-permutation term.
template <Field F>
bool has_sp_d_shape(const Polynomial<F>& f, std::uint32_t d, GroupElement g) {
  auto full = sp_d(d, g, f.group_ptr(), f.field());
  std::size_t count = 1;
  for (std::uint32_t i = 2; i <= d; ++i) count *= i;
  auto every = sp_d(d, g, std::vector<typename F::value_type>(count, f.field().one()), f.group_ptr(), f.field());
  if (f.is_zero() || f.field().is_zero(f.coefficient(full.terms().begin()->first))) return false;
  for (const auto& [w, c] : f.terms())
    if (every.terms().find(w) == every.terms().end()) return false;
  return true;
}

/// Words of V_{n,0,...,0,r}: slots 1..n of degree g, y on 1..r and z on
/// r+1..n, every ordering, in lexicographic order of the slot permutation.
inline std::vector<Word> v_space_words(std::uint32_t n, std::uint32_t r, GroupElement g) {
  if (r > n) throw InputError("r must not exceed n");
  std::vector<Variable> vars;
  for (std::uint32_t i = 1; i <= n; ++i) vars.push_back(i <= r ? yvar(i, g) : zvar(i, g));
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::vector<Word> out;
  do {
    Word w;
    for (auto p : perm) w.push_back(vars[p]);
    out.push_back(std::move(w));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

/// The (2d-1)o(g)-y-good words of V_{n,0,...,0,r}.
inline std::vector<Word> good_monomials(std::uint32_t n, std::uint32_t r, std::uint32_t d, GroupElement g,
                                        const GroupTable& group) {
  if (d == 0) throw InputError("d must be >= 1");
  if (!group.contains(g)) throw InputError("degree outside the group");
  const std::int64_t threshold = static_cast<std::int64_t>(2 * d - 1) * group.element_order(g);
  std::vector<Word> out;
  for (auto& w : v_space_words(n, r, g))
    if (d_y_good_monomial(w, threshold)) out.push_back(std::move(w));
  return out;
}

inline constexpr std::uint32_t kMaxSpanningDegree = 3;

struct SpanningReport {
  bool spans = false;
  std::size_t quotient_dim = 0;  // dim V_{n,0..0,r} / (V ∩ Id^s)
  std::size_t good_count = 0;
  std::size_t good_rank = 0;     // dim of the good words' image
};

/// dim V_{n,0,...,0,r} modulo the kernel of the (B, C)-evaluation map.
template <Field F>
std::size_t quotient_dimension(const SubalgebraPair<F>& pair, std::uint32_t n, std::uint32_t r, GroupElement g,
                               std::uint64_t budget = kDefaultCellBudget) {
  CellMeter meter(budget);
  return evaluation_rank(v_space_words(n, r, g), VariableRanges<F>::semi(pair), meter, false).rank;
}

/// Rank test: the good words span V_{n,0,...,0,r} modulo the semi-identities.
/// Requires a registered semi-identity of Sp_d shape for (d, g).
template <Field F>
SpanningReport spanning_check(const SemiContext<F>& ctx, std::uint32_t n, std::uint32_t r, std::uint32_t d,
                              GroupElement g) {
  if (n > kMaxSpanningDegree) throw BudgetExceeded("spanning_check is limited to n <= 3");
  bool registered = std::any_of(ctx.registered().begin(), ctx.registered().end(),
                                [&](const auto& f) { return has_sp_d_shape(f, d, g); });
  if (!registered) throw InputError("no Sp_d semi-identity registered for this d and degree");

  const auto& group = ctx.algebra()->group();
  auto ranges = VariableRanges<F>::semi(ctx.pair());
  SpanningReport out;
  auto good = good_monomials(n, r, d, g, group);
  out.good_count = good.size();
  CellMeter meter(ctx.budget());
  out.quotient_dim = evaluation_rank(v_space_words(n, r, g), ranges, meter, false).rank;
  out.good_rank = good.empty() ? 0 : evaluation_rank(good, ranges, meter, false).rank;
  out.spans = out.good_rank == out.quotient_dim;
  return out;
}

/// Shape of a U-space: u alternating runs y^{p_1} z^{q_1} ... y^{p_u} z^{q_u}.
struct BlockShape {
  std::size_t u = 0;
  std::vector<std::size_t> p;
  std::vector<std::size_t> q;
  friend auto operator<=>(const BlockShape&, const BlockShape&) = default;
};

/// Block shape of a y/z layout (true = y).
inline BlockShape block_shape(const std::vector<bool>& is_y) {
  BlockShape s;
  std::size_t i = 0;
  const auto n = is_y.size();
  while (i < n || s.u == 0) {
    std::size_t p = 0, q = 0;
    while (i < n && is_y[i]) ++p, ++i;
    while (i < n && !is_y[i]) ++q, ++i;
    s.p.push_back(p);
    s.q.push_back(q);
    ++s.u;
    if (i >= n) break;
  }
  return s;
}

/// All block shapes for n slots with r of type y; one per y/z layout.
inline std::vector<BlockShape> block_shapes(std::size_t n, std::size_t r) {
  if (r > n) throw InputError("r must not exceed n");
  std::vector<bool> layout(n, false);
  std::fill(layout.begin(), layout.begin() + static_cast<std::ptrdiff_t>(r), true);
  std::vector<BlockShape> out;
  std::sort(layout.begin(), layout.end());
  do out.push_back(block_shape(layout));
  while (std::next_permutation(layout.begin(), layout.end()));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace grpi
