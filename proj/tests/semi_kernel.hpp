#pragma once

// Joint kernel of the (B, C)-evaluation map on all y/z words over a fixed
// slot set, computed on the {0} ∪ basis grid for every y_i and z_i at once.
// Random elements of it are multilinear semi-identities mixing patterns.

#include <random>

#include "grpi/evaluate.hpp"
#include "grpi/linalg.hpp"
#include "grpi/polynomial.hpp"

namespace semi_kernel {

using namespace grpi;
using Q = RationalField;
using Vec = SparseVector<Rational>;

struct Space {
  std::vector<Word> words;
  std::vector<Vec> kernel;
};

inline Space joint_kernel(const SubalgebraPair<Q>& pair, const std::vector<GroupElement>& slot_degrees) {
  const auto& a = pair.b.parent();
  const auto n = slot_degrees.size();
  Space out;

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  do {
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
      Word w;
      for (auto i : order) {
        auto idx = static_cast<std::uint32_t>(i + 1);
        w.push_back(mask >> i & 1 ? yvar(idx, slot_degrees[i]) : zvar(idx, slot_degrees[i]));
      }
      out.words.push_back(w);
    }
  } while (std::next_permutation(order.begin(), order.end()));

  // variable 2i is y_{i+1}, 2i+1 is z_{i+1}
  std::vector<std::vector<Vec>> grid(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    grid[2 * i] = {Vec()};
    grid[2 * i + 1] = {Vec()};
    for (auto& v : pair.b.component(slot_degrees[i])) grid[2 * i].push_back(v);
    for (auto& v : pair.c.component(slot_degrees[i])) grid[2 * i + 1].push_back(v);
  }
  auto slot = [](const Variable& v) { return 2 * (v.index - 1) + (v.family == Family::Z ? 1 : 0); };

  EchelonBasis<Q> columns;
  std::vector<std::size_t> idx(2 * n, 0);
  const auto rows = out.words.size();
  while (true) {
    std::map<std::size_t, std::vector<Vec::Entry>> by_coord;
    for (std::size_t r = 0; r < rows; ++r) {
      Vec prod;
      bool first = true;
      for (const auto& v : out.words[r]) {
        const auto& val = grid[slot(v)][idx[slot(v)]];
        prod = first ? val : a.multiply(prod, val);
        first = false;
        if (prod.empty()) break;
      }
      for (const auto& [k, c] : prod) by_coord[k].emplace_back(r, c);
    }
    for (auto& [k, e] : by_coord) columns.insert(Vec(std::move(e)));
    if (columns.rank() == rows) break;
    std::size_t p = 0;
    while (p < idx.size() && ++idx[p] == grid[p].size()) idx[p++] = 0;
    if (p == idx.size()) break;
  }
  out.kernel = columns.null_space(rows);
  return out;
}

inline Polynomial<Q> random_element(const Space& s, std::shared_ptr<const GroupTable> group, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coef(-3, 3);
  Polynomial<Q> f(group, Q{});
  for (const auto& k : s.kernel) {
    Rational c = coef(rng);
    if (c == 0) continue;
    for (const auto& [i, v] : k) f.add_term(s.words[i], c * v);
  }
  return f;
}

}  // namespace semi_kernel
