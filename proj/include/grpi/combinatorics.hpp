#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

#include "grpi/error.hpp"
#include "grpi/field.hpp"
#include "grpi/group.hpp"
#include "grpi/polynomial.hpp"

namespace grpi {

/// Permutation of {1..n} in one-line notation.
using Permutation = std::vector<std::uint32_t>;

inline bool is_permutation_of_n(const Permutation& p) {
  std::vector<bool> seen(p.size() + 1, false);
  for (auto v : p) {
    if (v == 0 || v > p.size() || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

/// Length of the longest strictly decreasing subsequence (patience sorting).
inline std::size_t longest_decreasing_subsequence(const Permutation& p) {
  if (!is_permutation_of_n(p)) throw InputError("not a permutation of 1..n");
  // Tails of decreasing runs, kept increasing when read as negated values.
  std::vector<std::int64_t> tails;
  for (auto v : p) {
    std::int64_t key = -static_cast<std::int64_t>(v);
    auto it = std::lower_bound(tails.begin(), tails.end(), key);
    if (it == tails.end())
      tails.push_back(key);
    else
      *it = key;
  }
  return tails.size();
}

/// No decreasing subsequence of length d. Every permutation of S_n is d-good
/// when d > n.
inline bool is_d_good(const Permutation& p, std::int64_t d) {
  if (d <= 0) throw InputError("d must be positive");
  if (static_cast<std::size_t>(d) > p.size()) {
    if (!is_permutation_of_n(p)) throw InputError("not a permutation of 1..n");
    return true;
  }
  return longest_decreasing_subsequence(p) < static_cast<std::size_t>(d);
}

inline constexpr std::size_t kMaxExhaustiveN = 10;

struct GoodCount {
  std::uint64_t count = 0;
  BigInt bound;  // (d-1)^{2n}
};

/// Exhaustive count of d-good permutations of S_n (n <= 10) and the bound
/// (d-1)^{2n}. Throws std::logic_error if the bound were violated.
inline GoodCount count_d_good(std::size_t n, std::int64_t d) {
  if (n > kMaxExhaustiveN) throw InputError("count_d_good is exhaustive; n must be <= 10");
  if (d <= 0) throw InputError("d must be positive");
  GoodCount out;
  mpz_ui_pow_ui(out.bound.get_mpz_t(), static_cast<unsigned long>(d - 1), 2 * n);
  Permutation p(n);
  std::iota(p.begin(), p.end(), 1u);
  do
    if (is_d_good(p, d)) ++out.count;
  while (std::next_permutation(p.begin(), p.end()));
  if (BigInt(static_cast<unsigned long>(out.count)) > out.bound && n > 0)
    throw std::logic_error("d-good count exceeds (d-1)^{2n}");
  return out;
}

/// Block boundaries i_0 < i_1 < ... < i_d over a sequence of |H|*d group
/// elements such that each block seq[i_{j-1}+1 .. i_j] (1-based) multiplies to
/// the identity. Blocks are returned as 1-based inclusive (start, end).
inline std::vector<std::pair<std::size_t, std::size_t>> trivial_blocks(const GroupTable& h,
                                                                        const std::vector<GroupElement>& seq,
                                                                        std::size_t d) {
  if (d == 0) throw InputError("d must be positive");
  if (seq.size() != h.order() * d) throw InputError("sequence length must equal |H| * d");
  for (auto s : seq)
    if (!h.contains(s)) throw InputError("sequence element outside the group");

  // prefix[i] = s_1 ... s_i; a block (a+1 .. b) is trivial iff prefix[a] == prefix[b].
  std::vector<std::vector<std::size_t>> seen(h.order());
  GroupElement prefix = h.identity();
  for (std::size_t i = 0; i <= seq.size(); ++i) {
    if (i > 0) prefix = h.mul(prefix, seq[i - 1]);
    auto& hits = seen[prefix];
    hits.push_back(i);
    if (hits.size() == d + 1) {
      std::vector<std::pair<std::size_t, std::size_t>> blocks;
      for (std::size_t j = 1; j <= d; ++j) blocks.emplace_back(hits[j - 1] + 1, hits[j]);
      return blocks;
    }
  }
  throw std::logic_error("pigeonhole failed: no repeated prefix product");
}

/// 2^{n-1} ordered compositions of n >= 1.
inline BigInt compositions_count(std::size_t n) {
  if (n == 0) throw InputError("n must be positive");
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, n - 1);
  return r;
}

/// All ordered compositions of n: first the single part, then by position
/// of the cuts.
inline std::vector<std::vector<std::size_t>> compositions(std::size_t n) {
  if (n == 0) throw InputError("n must be positive");
  if (n > 30) throw InputError("compositions enumerator limited to n <= 30");
  std::vector<std::vector<std::size_t>> out;
  // Cut masks ordered by number of parts, then lexicographically by parts.
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n - 1)); ++mask) {
    std::vector<std::size_t> parts;
    std::size_t run = 1;
    for (std::size_t i = 0; i + 1 < n; ++i) {
      if (mask & (std::uint64_t{1} << (n - 2 - i))) {
        parts.push_back(run);
        run = 1;
      } else {
        ++run;
      }
    }
    parts.push_back(run);
    out.push_back(std::move(parts));
  }
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

/// n! / (q_1! ... q_u!); the parts must sum to n.
inline BigInt multinomial(std::size_t n, const std::vector<std::size_t>& parts) {
  std::size_t total = 0;
  for (auto q : parts) total += q;
  if (total != n) throw InputError("multinomial parts must sum to n");
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  for (auto q : parts) {
    BigInt f;
    mpz_fac_ui(f.get_mpz_t(), q);
    r /= f;
  }
  return r;
}

/// multinomial(n - r; qs) <= (r + 1)^{n - r}, required when u = |qs| <= r + 1.
inline bool multinomial_bound_check(std::size_t n, std::size_t r, const std::vector<std::size_t>& qs) {
  if (r > n) throw InputError("r must not exceed n");
  if (qs.size() > r + 1) throw InputError("bound applies only for u <= r + 1 blocks");
  BigInt bound;
  mpz_ui_pow_ui(bound.get_mpz_t(), r + 1, n - r);
  return multinomial(n - r, qs) <= bound;
}

/// Rational lower bound for e: sum_{k<=terms} 1/k!.
inline Rational e_lower_bound(std::size_t terms) {
  Rational sum = 0, term = 1;
  for (std::size_t k = 0; k <= terms; ++k) {
    if (k > 0) term /= static_cast<unsigned long>(k);
    sum += term;
  }
  return sum;
}

/// Rational upper bound for e: the lower bound plus 2/(terms+1)!.
inline Rational e_upper_bound(std::size_t terms) {
  BigInt f;
  mpz_fac_ui(f.get_mpz_t(), terms + 1);
  return e_lower_bound(terms) + Rational(2, 1) / Rational(f);
}

/// Certifies (n/e)^n < n! using e > sum_{k<=K} 1/k!, refining K as needed.
inline bool stirling_check(std::size_t n) {
  if (n == 0) throw InputError("n must be positive");
  BigInt nn, fact;
  mpz_ui_pow_ui(nn.get_mpz_t(), n, n);
  mpz_fac_ui(fact.get_mpz_t(), n);
  for (std::size_t terms = 8; terms <= 4096; terms *= 2) {
    Rational e_lo = e_lower_bound(terms);
    Rational pow_e;
    mpz_pow_ui(pow_e.get_num_mpz_t(), e_lo.get_num_mpz_t(), n);
    mpz_pow_ui(pow_e.get_den_mpz_t(), e_lo.get_den_mpz_t(), n);
    pow_e.canonicalize();
    // n^n < n! e^n certifies the inequality since e^n > e_lo^n.
    if (Rational(nn) < Rational(fact) * pow_e) return true;
  }
  return false;
}

/// Y-indices of the word in order of occurrence, standardized to 1..l.
inline Permutation y_pattern(const Word& w) {
  std::vector<std::uint32_t> ys;
  for (const auto& v : w)
    if (v.family == Family::Y) ys.push_back(v.index);
  auto sorted = ys;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw InputError("word repeats a y variable");
  Permutation p;
  for (auto y : ys)
    p.push_back(static_cast<std::uint32_t>(std::lower_bound(sorted.begin(), sorted.end(), y) - sorted.begin() + 1));
  return p;
}

/// The permutation formed by the y variables of w is d-good.
inline bool d_y_good_monomial(const Word& w, std::int64_t d) { return is_d_good(y_pattern(w), d); }

}  // namespace grpi
