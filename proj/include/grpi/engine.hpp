#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "grpi/evaluate.hpp"
#include "grpi/linalg.hpp"
#include "grpi/models.hpp"

namespace grpi {

inline constexpr std::uint64_t kDefaultCellBudget = 10'000'000;

/// Caps the number of evaluation cells (assignment tuples times evaluated
/// monomials) a single computation may spend.
class CellMeter {
 public:
  explicit CellMeter(std::uint64_t budget = kDefaultCellBudget) : budget_(budget) {}

  void charge(std::uint64_t cells) {
    used_ += cells;
    if (used_ > budget_)
      throw BudgetExceeded("evaluation needs more than " + std::to_string(budget_) +
                           " cells; raise --budget or reduce the degree");
  }
  std::uint64_t used() const { return used_; }
  std::uint64_t budget() const { return budget_; }

 private:
  std::uint64_t budget_;
  std::uint64_t used_ = 0;
};

/// Calls visit(indices) over the product of [0, sizes[i]) in odometer order
/// (last position fastest) until visit returns false. Returns false iff
/// stopped early.
template <class Visit>
bool for_each_tuple(const std::vector<std::size_t>& sizes, Visit&& visit) {
  for (auto s : sizes)
    if (s == 0) return true;
  std::vector<std::size_t> idx(sizes.size(), 0);
  for (;;) {
    if (!visit(static_cast<const std::vector<std::size_t>&>(idx))) return false;
    std::size_t k = idx.size();
    while (k > 0) {
      --k;
      if (++idx[k] < sizes[k]) break;
      idx[k] = 0;
      if (k == 0) return true;
    }
    if (idx.empty()) return true;
  }
}

namespace detail {

template <Field F>
SparseVector<typename F::value_type> evaluate_with(const Polynomial<F>& f, const std::vector<Variable>& vars,
                                                   const std::vector<const SparseVector<typename F::value_type>*>& vals,
                                                   const GradedAlgebra<F>& a) {
  using V = typename F::value_type;
  auto lookup = [&](const Variable& v) -> const SparseVector<V>& {
    auto it = std::lower_bound(vars.begin(), vars.end(), v);
    return *vals[it - vars.begin()];
  };
  SparseAccumulator<F> acc(a.field());
  for (const auto& [w, c] : f.terms()) {
    if (w.empty()) throw InputError("constant term cannot be evaluated in a non-unital algebra");
    SparseVector<V> prod = lookup(w[0]);
    for (std::size_t i = 1; i < w.size() && !prod.empty(); ++i) prod = a.multiply(prod, lookup(w[i]));
    acc.add(prod, c);
  }
  return acc.take();
}

// Per-variable grid for a polynomial of degree <= d in that variable: the
// zero vector plus all sums of at most d basis vectors with coefficients in
// {1..d}. A coordinate polynomial of degree <= d in each coordinate whose
// monomials touch at most d coordinates vanishes iff it vanishes here.
template <Field F>
std::vector<SparseVector<typename F::value_type>> grid_points(const F& field,
                                                              const std::vector<SparseVector<typename F::value_type>>& basis,
                                                              std::size_t d, std::uint64_t cap) {
  using Vec = SparseVector<typename F::value_type>;
  std::vector<Vec> out{Vec{}};
  std::vector<std::size_t> chosen;
  std::function<void(std::size_t, const Vec&)> rec = [&](std::size_t start, const Vec& acc) {
    if (chosen.size() == d) return;
    for (std::size_t i = start; i < basis.size(); ++i) {
      chosen.push_back(i);
      for (std::size_t s = 1; s <= d; ++s) {
        auto next = add_scaled(field, acc, field.from_int(static_cast<long>(s)), basis[i]);
        out.push_back(next);
        if (out.size() > cap) throw BudgetExceeded("grid for a variable exceeds the cell budget");
        rec(i + 1, next);
      }
      chosen.pop_back();
    }
  };
  if (d > 0) rec(0, Vec{});
  return out;
}

// Enumerates value tuples from `grids` and returns the first with f != 0.
template <Field F>
std::optional<std::map<Variable, SparseVector<typename F::value_type>>> search_grid(
    const Polynomial<F>& f, const std::vector<Variable>& vars,
    const std::vector<std::vector<SparseVector<typename F::value_type>>>& grids, const GradedAlgebra<F>& a,
    CellMeter& meter) {
  using Vec = SparseVector<typename F::value_type>;
  std::vector<std::size_t> sizes;
  for (const auto& g : grids) sizes.push_back(g.size());
  std::optional<std::map<Variable, Vec>> witness;
  std::vector<const Vec*> vals(vars.size());
  for_each_tuple(sizes, [&](const std::vector<std::size_t>& idx) {
    meter.charge(std::max<std::size_t>(f.size(), 1));
    for (std::size_t i = 0; i < vars.size(); ++i) vals[i] = &grids[i][idx[i]];
    if (evaluate_with(f, vars, vals, a).empty()) return true;
    witness.emplace();
    for (std::size_t i = 0; i < vars.size(); ++i) witness->emplace(vars[i], *vals[i]);
    return false;
  });
  return witness;
}

template <Field F>
std::size_t max_multiplicity(const Polynomial<F>& f, const Variable& v) {
  std::size_t d = 0;
  for (const auto& [w, c] : f.terms())
    d = std::max<std::size_t>(d, static_cast<std::size_t>(std::count(w.begin(), w.end(), v)));
  return d;
}

}  // namespace detail

/// For multilinear f: an assignment of basis values on which f does not
/// vanish, or nullopt if f is an identity of the ranges.
template <Field F>
std::optional<std::map<Variable, SparseVector<typename F::value_type>>> find_nonvanishing_multilinear(
    const Polynomial<F>& f, const VariableRanges<F>& ranges, CellMeter& meter) {
  if (!is_multilinear(f)) throw InputError("polynomial is not multilinear");
  if (f.is_zero()) return std::nullopt;
  auto vs = f.variables();
  std::vector<Variable> vars(vs.begin(), vs.end());
  std::vector<std::vector<SparseVector<typename F::value_type>>> grids;
  for (const auto& v : vars) grids.push_back(ranges.candidates(v));
  return detail::search_grid(f, vars, grids, ranges.algebra(), meter);
}

/// True iff the multilinear f vanishes on every tuple of basis elements of
/// matching degrees (sufficient by multilinearity).
template <Field F>
bool check_identity_multilinear(const Polynomial<F>& f, const VariableRanges<F>& ranges,
                                std::uint64_t budget = kDefaultCellBudget) {
  CellMeter meter(budget);
  return !find_nonvanishing_multilinear(f, ranges, meter);
}

template <Field F>
bool check_identity_multilinear(const Polynomial<F>& f, const AlgebraPtr<F>& a,
                                std::uint64_t budget = kDefaultCellBudget) {
  return check_identity_multilinear(f, VariableRanges<F>::over(a), budget);
}

template <Field F>
bool check_identity_multilinear(const Polynomial<F>& f, const Subspace<F>& s,
                                std::uint64_t budget = kDefaultCellBudget) {
  return check_identity_multilinear(f, VariableRanges<F>::over(s), budget);
}

/// Identity test for arbitrary f by exact grid evaluation. Word-multilinear
/// inputs use the {0} ∪ basis grid, valid in every characteristic; higher
/// degrees need characteristic 0.
template <Field F>
std::optional<std::map<Variable, SparseVector<typename F::value_type>>> find_nonvanishing(
    const Polynomial<F>& f, const VariableRanges<F>& ranges, CellMeter& meter) {
  if (f.is_zero()) return std::nullopt;
  auto vs = f.variables();
  std::vector<Variable> vars(vs.begin(), vs.end());
  std::vector<std::vector<SparseVector<typename F::value_type>>> grids;
  for (const auto& v : vars) {
    auto d = detail::max_multiplicity(f, v);
    if (d > 1 && ranges.algebra().field().characteristic() != 0)
      throw InputError("general identity check requires the rational field");
    grids.push_back(detail::grid_points(ranges.algebra().field(), ranges.candidates(v), d, meter.budget()));
  }
  return detail::search_grid(f, vars, grids, ranges.algebra(), meter);
}

template <Field F>
bool check_identity_general(const Polynomial<F>& f, const VariableRanges<F>& ranges,
                            std::uint64_t budget = kDefaultCellBudget) {
  if (ranges.algebra().field().characteristic() != 0)
    throw InputError("general identity check requires the rational field");
  CellMeter meter(budget);
  return !find_nonvanishing(f, ranges, meter);
}

template <Field F>
bool check_identity_general(const Polynomial<F>& f, const AlgebraPtr<F>& a, std::uint64_t budget = kDefaultCellBudget) {
  return check_identity_general(f, VariableRanges<F>::over(a), budget);
}

/// Multilinear space spanned by `monomials` (words over a fixed variable
/// set) evaluated over `ranges`: its rank is the dimension of the space
/// modulo the polynomials in it that vanish on the ranges.
template <Field F>
struct EvaluationRank {
  std::size_t rank = 0;
  std::vector<SparseVector<typename F::value_type>> kernel;  // relations among the monomials
  std::uint64_t tuples = 0;
  bool stopped_at_full_rank = false;
};

template <Field F>
EvaluationRank<F> evaluation_rank(const std::vector<Word>& monomials, const VariableRanges<F>& ranges,
                                  CellMeter& meter, bool want_kernel = true) {
  using V = typename F::value_type;
  using Vec = SparseVector<V>;
  const auto& a = ranges.algebra();
  EvaluationRank<F> out;
  if (monomials.empty()) return out;

  std::vector<Variable> vars(monomials.front().begin(), monomials.front().end());
  std::sort(vars.begin(), vars.end());
  std::vector<std::vector<std::size_t>> slots;  // monomial -> position of each letter in vars
  for (const auto& m : monomials) {
    auto sorted = m;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != vars) throw InputError("monomials must share one multilinear variable set");
    std::vector<std::size_t> pos;
    for (const auto& v : m) pos.push_back(std::lower_bound(vars.begin(), vars.end(), v) - vars.begin());
    slots.push_back(std::move(pos));
  }

  std::vector<std::size_t> sizes;
  for (const auto& v : vars) sizes.push_back(ranges.candidates(v).size());

  const auto rows = monomials.size();
  EchelonBasis<F> columns(a.field());
  std::vector<const Vec*> vals(vars.size());
  for_each_tuple(sizes, [&](const std::vector<std::size_t>& idx) {
    meter.charge(rows);
    ++out.tuples;
    for (std::size_t i = 0; i < vars.size(); ++i) vals[i] = &ranges.candidates(vars[i])[idx[i]];
    std::map<std::size_t, std::vector<typename Vec::Entry>> by_coord;
    for (std::size_t r = 0; r < rows; ++r) {
      Vec prod;
      if (!vars.empty()) {
        prod = *vals[slots[r][0]];
        for (std::size_t i = 1; i < slots[r].size() && !prod.empty(); ++i) prod = a.multiply(prod, *vals[slots[r][i]]);
      }
      for (const auto& [k, c] : prod) by_coord[k].emplace_back(r, c);
    }
    for (auto& [k, entries] : by_coord) {
      columns.insert(Vec(std::move(entries)));
      if (columns.rank() == rows) return false;
    }
    return true;
  });
  out.rank = columns.rank();
  out.stopped_at_full_rank = out.rank == rows;
  if (want_kernel) out.kernel = columns.null_space(rows);
  return out;
}

/// All n! monomials of P for the signature: variables x_1..x_n numbered
/// consecutively by degree, in lexicographic order of permutations.
template <Field F>
std::vector<Word> multilinear_monomials(const Signature& signature, const GroupTable& group) {
  if (signature.size() > group.order()) throw InputError("signature longer than the group order");
  std::vector<Variable> vars;
  std::uint32_t next = 1;
  for (GroupElement g = 0; g < signature.size(); ++g)
    for (std::uint32_t i = 0; i < signature[g]; ++i) vars.push_back(xvar(next++, g));
  std::vector<std::size_t> perm(vars.size());
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::vector<Word> out;
  do {
    Word w;
    for (auto p : perm) w.push_back(vars[p]);
    out.push_back(std::move(w));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

template <Field F>
struct IdentityReport {
  Signature signature;
  std::size_t space_dim = 0;
  std::size_t codimension = 0;
  std::vector<Polynomial<F>> identities;
  std::string strategy;
  std::uint64_t tuples_evaluated = 0;
};

/// dim P/(P ∩ Id) for the multilinear space P of the signature, together
/// with a basis of the identities in P (distinct leading monomials).
template <Field F>
IdentityReport<F> codimension(const VariableRanges<F>& ranges, const Signature& signature,
                              std::uint64_t budget = kDefaultCellBudget) {
  const auto& group = ranges.algebra().group();
  if (signature_size(signature) == 0) throw InputError("signature must contain at least one variable");
  auto monomials = multilinear_monomials<F>(signature, group);
  CellMeter meter(budget);
  auto er = evaluation_rank(monomials, ranges, meter);

  IdentityReport<F> report;
  report.signature = signature;
  report.signature.resize(group.order(), 0);
  report.space_dim = monomials.size();
  report.codimension = er.rank;
  report.tuples_evaluated = er.tuples;
  report.strategy = er.stopped_at_full_rank ? "basis-tuples/full-rank-early-exit" : "basis-tuples/exhaustive";
  const auto& field = ranges.algebra().field();
  for (const auto& k : er.kernel) {
    Polynomial<F> p(ranges.algebra().group_ptr(), field);
    for (const auto& [i, c] : k) p.add_term(monomials[i], c);
    report.identities.push_back(std::move(p));
  }
  return report;
}

template <Field F>
IdentityReport<F> codimension(const AlgebraPtr<F>& a, const Signature& signature,
                              std::uint64_t budget = kDefaultCellBudget) {
  return codimension(VariableRanges<F>::over(a), signature, budget);
}

struct GenericRank {
  bool full_rank = false;
  std::size_t rank = 0;
  std::size_t monomials = 0;
};

/// Substitutes the generic matrices a_i = diag(u_i, v_i) (neutral) and
/// b_i = antidiag(w_i, t_i) (degree 1) into every multilinear monomial of
/// signature (n0, n1) in M_2(F<X>) and returns the rank of the results,
/// flattened over (matrix position, word).
inline GenericRank generic_no_identity_check(std::uint32_t n0, std::uint32_t n1) {
  using Letters = std::vector<std::uint32_t>;
  using Entry = std::map<Letters, Rational>;  // sparse element of F<X>
  using Matrix = std::array<Entry, 4>;        // row-major 2x2

  auto letter = [](std::uint32_t i, std::uint32_t which) { return 4 * (i - 1) + which; };  // u,v,w,t = 0..3
  auto mul = [](const Matrix& p, const Matrix& q) {
    Matrix r;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        for (int k = 0; k < 2; ++k)
          for (const auto& [w1, c1] : p[2 * i + k])
            for (const auto& [w2, c2] : q[2 * k + j]) {
              auto w = w1;
              w.insert(w.end(), w2.begin(), w2.end());
              Rational& slot = r[2 * i + j][w];
              slot += c1 * c2;
              if (slot == 0) r[2 * i + j].erase(w);
            }
    return r;
  };

  const std::uint32_t n = n0 + n1;
  std::vector<Matrix> gens;
  for (std::uint32_t i = 1; i <= n0; ++i) {
    Matrix a;
    a[0][{letter(i, 0)}] = 1;
    a[3][{letter(i, 1)}] = 1;
    gens.push_back(std::move(a));
  }
  for (std::uint32_t i = 1; i <= n1; ++i) {
    Matrix b;
    b[1][{letter(i, 2)}] = 1;
    b[2][{letter(i, 3)}] = 1;
    gens.push_back(std::move(b));
  }

  Matrix identity;
  identity[0][{}] = 1;
  identity[3][{}] = 1;

  std::map<std::pair<int, Letters>, std::size_t> column;
  EchelonBasis<RationalField> rows;
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  GenericRank out;
  do {
    Matrix m = identity;
    for (auto p : perm) m = mul(m, gens[p]);
    std::vector<SparseVector<Rational>::Entry> entries;
    for (int pos = 0; pos < 4; ++pos)
      for (const auto& [w, c] : m[pos]) {
        auto [it, inserted] = column.try_emplace({pos, w}, column.size());
        entries.emplace_back(it->second, c);
      }
    std::sort(entries.begin(), entries.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    rows.insert(SparseVector<Rational>(std::move(entries)));
    ++out.monomials;
  } while (std::next_permutation(perm.begin(), perm.end()));
  out.rank = rows.rank();
  out.full_rank = out.rank == out.monomials;
  return out;
}

/// f(x_1^{(h_1)} w, ..., x_n^{(h_n)} w) with h_i = g_i g^{-1}, computed in the
/// free graded algebra. The result is nonzero for every multilinear f != 0
/// and homogeneous w != 0; a zero result raises std::logic_error.
template <Field F>
Polynomial<F> left_ideal_witness(const Polynomial<F>& f, const Polynomial<F>& w) {
  f.check_compatible(w);
  if (!is_multilinear(f)) throw InputError("left_ideal_witness needs a multilinear f");
  if (w.is_zero()) throw InputError("left_ideal_witness needs a nonzero w");
  auto g = w.homogeneous_degree();
  if (!g) throw InputError("left_ideal_witness needs a homogeneous w");
  const auto& group = f.group();

  std::uint32_t offset = 0;
  for (const auto& v : w.variables())
    if (v.family == Family::X) offset = std::max(offset, v.index);

  std::map<Variable, Polynomial<F>> sigma;
  std::uint32_t next = 1;
  for (const auto& v : f.variables()) {
    auto h = group.mul(v.degree, group.inverse(*g));
    sigma.emplace(v, variable_poly(f, xvar(offset + next++, h)) * w);
  }
  auto out = substitute(f, sigma);
  if (f.is_zero() != out.is_zero()) throw std::logic_error("left ideal witness vanished");
  return out;
}

namespace detail {

inline std::uint32_t double_index(std::uint32_t i, std::uint32_t j, std::uint32_t inner_count) {
  std::uint32_t base = 10;
  while (base <= inner_count) base *= 10;
  return i * base + j;
}

// Variables of a multilinear polynomial in the order x_1, x_2, ... of their
// first appearance in the canonical first word's sorted set.
template <Field F>
std::vector<Variable> slots_of(const Polynomial<F>& p) {
  auto vs = p.variables();
  return {vs.begin(), vs.end()};
}

}  // namespace detail

/// f(g(x_{11}^{(g_1)},...,x_{1n}^{(g_n)}), ..., g(x_{m1}^{(g_1)},...,x_{mn}^{(g_n)}))
/// for an ordinary f (neutral variables) and a graded multilinear g.
template <Field F>
Polynomial<F> compose_outer_ordinary(const Polynomial<F>& f, const Polynomial<F>& g) {
  f.check_compatible(g);
  if (!is_multilinear(f) || !is_multilinear(g)) throw InputError("compose_outer_ordinary needs multilinear inputs");
  const auto e = f.group().identity();
  auto outer = detail::slots_of(f);
  auto inner = detail::slots_of(g);
  for (const auto& v : outer)
    if (v.degree != e) throw InputError("outer polynomial must be ordinary (neutral variables only)");
  if (!g.homogeneous_degree()) throw InputError("inner polynomial must be homogeneous");

  std::map<Variable, Polynomial<F>> sigma;
  for (std::size_t i = 0; i < outer.size(); ++i) {
    std::map<Variable, Polynomial<F>> rename;
    for (std::size_t j = 0; j < inner.size(); ++j) {
      auto idx = detail::double_index(static_cast<std::uint32_t>(i + 1), static_cast<std::uint32_t>(j + 1),
                                      static_cast<std::uint32_t>(inner.size()));
      rename.emplace(inner[j], variable_poly(g, xvar(idx, inner[j].degree)));
    }
    sigma.emplace(outer[i], detail::replace_variables(g, rename));
  }
  return detail::replace_variables(f, sigma);
}

/// f(g(x_{11}^{(g_1)}, x_{12}^{(1)}, ..., x_{1n}^{(1)}), ..., g(x_{m1}^{(g_m)}, ...))
/// for a graded multilinear f and an ordinary multilinear g.
template <Field F>
Polynomial<F> compose_outer_graded(const Polynomial<F>& f, const Polynomial<F>& g) {
  f.check_compatible(g);
  if (!is_multilinear(f) || !is_multilinear(g)) throw InputError("compose_outer_graded needs multilinear inputs");
  const auto e = f.group().identity();
  auto outer = detail::slots_of(f);
  auto inner = detail::slots_of(g);
  for (const auto& v : inner)
    if (v.degree != e) throw InputError("inner polynomial must be ordinary (neutral variables only)");
  if (inner.empty()) throw InputError("inner polynomial has no variables");

  std::map<Variable, Polynomial<F>> sigma;
  for (std::size_t i = 0; i < outer.size(); ++i) {
    std::map<Variable, Polynomial<F>> rename;
    for (std::size_t j = 0; j < inner.size(); ++j) {
      auto idx = detail::double_index(static_cast<std::uint32_t>(i + 1), static_cast<std::uint32_t>(j + 1),
                                      static_cast<std::uint32_t>(inner.size()));
      rename.emplace(inner[j], variable_poly(g, xvar(idx, j == 0 ? outer[i].degree : e)));
    }
    sigma.emplace(outer[i], detail::replace_variables(g, rename));
  }
  return substitute(f, sigma);
}

struct DegreeDecomposition {
  GroupElement degree = 0;
  std::size_t dim_a = 0;
  std::size_t dim_b = 0;
  std::size_t dim_c = 0;
  std::size_t dim_sum = 0;
  std::size_t dim_intersection = 0;
  bool holds = false;
};

/// Per degree g: dim(B_g + C_g) versus dim A_g.
template <Field F>
std::vector<DegreeDecomposition> check_sum_decomposition(const SubalgebraPair<F>& pair) {
  const auto& a = pair.b.parent();
  std::vector<DegreeDecomposition> out;
  for (GroupElement g = 0; g < a.group().order(); ++g) {
    auto bg = homogeneous_component(pair.b, g);
    auto cg = homogeneous_component(pair.c, g);
    DegreeDecomposition d;
    d.degree = g;
    d.dim_a = a.component(g).size();
    d.dim_b = bg.dim();
    d.dim_c = cg.dim();
    d.dim_sum = dim_sum(bg, cg);
    d.dim_intersection = d.dim_b + d.dim_c - d.dim_sum;
    d.holds = d.dim_sum == d.dim_a;
    out.push_back(d);
  }
  return out;
}

}  // namespace grpi
