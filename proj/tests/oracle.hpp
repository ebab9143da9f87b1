#pragma once

// Reference implementations used to cross-check the library. Nothing here
// includes grpi headers: algebras are dense structure tables, rank is plain
// Gaussian elimination over mpq_class.

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <vector>

namespace oracle {

using Q = mpq_class;
using Vec = std::vector<Q>;

struct DenseAlgebra {
  std::size_t dim = 0;
  std::vector<int> degree;                  // degree of each basis vector (group element index)
  std::vector<std::vector<Vec>> table;      // table[i][j] = e_i e_j

  Vec mul(const Vec& a, const Vec& b) const {
    Vec out(dim, 0);
    for (std::size_t i = 0; i < dim; ++i) {
      if (a[i] == 0) continue;
      for (std::size_t j = 0; j < dim; ++j) {
        if (b[j] == 0) continue;
        Q c = a[i] * b[j];
        for (std::size_t k = 0; k < dim; ++k) out[k] += c * table[i][j][k];
      }
    }
    return out;
  }

  Vec unit(std::size_t i) const {
    Vec v(dim, 0);
    v[i] = 1;
    return v;
  }
};

// Group algebra of Z_n, basis u_0..u_{n-1}.
inline DenseAlgebra cyclic_group_algebra(int n) {
  DenseAlgebra a;
  a.dim = static_cast<std::size_t>(n);
  for (int i = 0; i < n; ++i) a.degree.push_back(i);
  a.table.assign(a.dim, std::vector<Vec>(a.dim, Vec(a.dim, 0)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a.table[i][j][(i + j) % n] = 1;
  return a;
}

// M_2 with e11, e22 of degree 0 and e12, e21 of degree 1 (Z_2).
inline DenseAlgebra m2_elementary() {
  DenseAlgebra a;
  a.dim = 4;
  a.degree = {0, 1, 1, 0};  // e11 e12 e21 e22
  a.table.assign(4, std::vector<Vec>(4, Vec(4, 0)));
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k) a.table[2 * i + j][2 * j + k][2 * i + k] = 1;
  return a;
}

inline std::size_t rank(std::vector<Vec> rows) {
  std::size_t r = 0;
  if (rows.empty()) return 0;
  const std::size_t cols = rows[0].size();
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      Q f = rows[i][c] / rows[r][c];
      for (std::size_t k = c; k < cols; ++k) rows[i][k] -= f * rows[r][k];
    }
    ++r;
  }
  return r;
}

// Codimension of the multilinear space with counts[g] variables of degree g:
// one row per monomial, one column per (basis tuple, coordinate).
inline std::size_t codimension(const DenseAlgebra& a, const std::vector<int>& counts) {
  std::vector<int> var_degree;
  for (std::size_t g = 0; g < counts.size(); ++g)
    for (int i = 0; i < counts[g]; ++i) var_degree.push_back(static_cast<int>(g));
  const std::size_t n = var_degree.size();

  std::vector<std::vector<std::size_t>> choices(n);
  for (std::size_t v = 0; v < n; ++v)
    for (std::size_t i = 0; i < a.dim; ++i)
      if (a.degree[i] == var_degree[v]) choices[v].push_back(i);

  std::vector<std::vector<std::size_t>> tuples{{}};
  for (std::size_t v = 0; v < n; ++v) {
    std::vector<std::vector<std::size_t>> next;
    for (const auto& t : tuples)
      for (auto i : choices[v]) {
        auto u = t;
        u.push_back(i);
        next.push_back(u);
      }
    tuples = next;
  }

  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<Vec> rows;
  do {
    Vec row;
    for (const auto& t : tuples) {
      Vec prod = a.unit(t[perm[0]]);
      for (std::size_t k = 1; k < n; ++k) prod = a.mul(prod, a.unit(t[perm[k]]));
      row.insert(row.end(), prod.begin(), prod.end());
    }
    rows.push_back(row);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return rank(rows);
}

// C_0 = 1, C_{n+1} = sum C_i C_{n-i}.
inline std::vector<std::uint64_t> catalan(std::size_t upto) {
  std::vector<std::uint64_t> c(upto + 1, 0);
  c[0] = 1;
  for (std::size_t n = 0; n < upto; ++n)
    for (std::size_t i = 0; i <= n; ++i) c[n + 1] += c[i] * c[n - i];
  return c;
}

// Longest decreasing subsequence by O(n^2) dynamic programming.
template <class T>
inline std::size_t lds(const std::vector<T>& p) {
  std::vector<std::size_t> best(p.size(), 1);
  std::size_t out = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j)
      if (p[j] > p[i]) best[i] = std::max(best[i], best[j] + 1);
    out = std::max(out, best[i]);
  }
  return out;
}

// Order of an element by repeated multiplication in a Cayley table.
inline std::size_t element_order(const std::vector<std::vector<std::uint32_t>>& table, std::uint32_t identity,
                                 std::uint32_t a) {
  std::size_t k = 1;
  for (std::uint32_t p = a; p != identity; p = table[p][a]) ++k;
  return k;
}

}  // namespace oracle
