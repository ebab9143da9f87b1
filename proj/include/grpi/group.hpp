#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "grpi/error.hpp"

namespace grpi {

using GroupElement = std::uint32_t;

inline constexpr std::size_t kDefaultMaxGroupOrder = 64;

/// A finite group given extensionally by its Cayley table.
///
/// Elements are indices 0..order()-1. Construction verifies the group
/// axioms exhaustively, so a GroupTable value is always a group.
class GroupTable {
 public:
  static GroupTable from_table(std::vector<std::string> labels,
                               std::vector<std::vector<GroupElement>> table,
                               std::size_t max_order = kDefaultMaxGroupOrder) {
    const auto k = labels.size();
    if (k == 0) throw InputError("group must have at least one element");
    if (k > max_order)
      throw InputError("group order " + std::to_string(k) + " exceeds cap " + std::to_string(max_order));
    if (table.size() != k) throw InputError("Cayley table must have one row per label");
    for (std::size_t i = 0; i < k; ++i) {
      if (table[i].size() != k) throw InputError("Cayley table row " + std::to_string(i) + " has wrong length");
      for (auto v : table[i])
        if (v >= k) throw InputError("Cayley table entry out of range in row " + std::to_string(i));
    }
    {
      auto sorted = labels;
      std::sort(sorted.begin(), sorted.end());
      if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw InputError("duplicate element label");
    }

    GroupTable g;
    g.labels_ = std::move(labels);
    g.table_ = std::move(table);

    std::optional<GroupElement> identity;
    for (GroupElement e = 0; e < k && !identity; ++e) {
      bool neutral = true;
      for (GroupElement a = 0; a < k && neutral; ++a)
        neutral = g.table_[e][a] == a && g.table_[a][e] == a;
      if (neutral) identity = e;
    }
    if (!identity) throw InputError("no identity element");
    g.identity_ = *identity;

    g.inverse_.resize(k);
    for (GroupElement a = 0; a < k; ++a) {
      std::optional<GroupElement> inv;
      for (GroupElement b = 0; b < k && !inv; ++b)
        if (g.table_[a][b] == g.identity_ && g.table_[b][a] == g.identity_) inv = b;
      if (!inv) throw InputError("no inverse for " + g.labels_[a]);
      g.inverse_[a] = *inv;
    }

    for (GroupElement a = 0; a < k; ++a)
      for (GroupElement b = 0; b < k; ++b)
        for (GroupElement c = 0; c < k; ++c)
          if (g.table_[g.table_[a][b]][c] != g.table_[a][g.table_[b][c]])
            throw InputError("not associative at (" + g.labels_[a] + ", " + g.labels_[b] + ", " +
                             g.labels_[c] + ")");

    g.order_of_.resize(k);
    for (GroupElement a = 0; a < k; ++a) {
      std::uint32_t t = 1;
      for (GroupElement p = a; p != g.identity_; p = g.table_[p][a]) ++t;
      g.order_of_[a] = t;
    }
    return g;
  }

  std::size_t order() const { return labels_.size(); }
  GroupElement identity() const { return identity_; }
  GroupElement mul(GroupElement a, GroupElement b) const { return table_[a][b]; }
  GroupElement inverse(GroupElement a) const { return inverse_[a]; }
  std::uint32_t element_order(GroupElement a) const { return order_of_[a]; }
  const std::string& label(GroupElement a) const { return labels_[a]; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<std::vector<GroupElement>>& table() const { return table_; }
  bool contains(GroupElement a) const { return a < order(); }

  std::optional<GroupElement> find(std::string_view label) const {
    for (GroupElement a = 0; a < order(); ++a)
      if (labels_[a] == label) return a;
    return std::nullopt;
  }

  GroupElement power(GroupElement a, std::uint64_t t) const {
    GroupElement r = identity_;
    for (std::uint64_t i = 0; i < t % order_of_[a]; ++i) r = mul(r, a);
    return r;
  }

  friend bool operator==(const GroupTable& a, const GroupTable& b) {
    return a.labels_ == b.labels_ && a.table_ == b.table_;
  }

 private:
  GroupTable() = default;

  std::vector<std::string> labels_;
  std::vector<std::vector<GroupElement>> table_;
  GroupElement identity_ = 0;
  std::vector<GroupElement> inverse_;
  std::vector<std::uint32_t> order_of_;
};

/// Z_n with element i labeled "i".
inline GroupTable cyclic_group(std::size_t n) {
  if (n == 0) throw InputError("cyclic group order must be positive");
  std::vector<std::string> labels(n);
  std::vector<std::vector<GroupElement>> table(n, std::vector<GroupElement>(n));
  for (std::size_t i = 0; i < n; ++i) {
    labels[i] = std::to_string(i);
    for (std::size_t j = 0; j < n; ++j) table[i][j] = static_cast<GroupElement>((i + j) % n);
  }
  return GroupTable::from_table(std::move(labels), std::move(table), std::max(n, kDefaultMaxGroupOrder));
}

/// S_n (n <= 4) acting on {1..n}; elements in lexicographic order of their
/// one-line notation, labeled "e" for the identity and "g1", "g2", ... after.
/// Composition is (ab)(i) = a(b(i)).
inline GroupTable symmetric_group(std::size_t n) {
  if (n == 0 || n > 4) throw InputError("symmetric_group supports 1 <= n <= 4");
  std::vector<std::vector<int>> perms;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));

  const auto k = perms.size();
  std::vector<std::string> labels(k);
  std::vector<std::vector<GroupElement>> table(k, std::vector<GroupElement>(k));
  for (std::size_t a = 0; a < k; ++a) {
    labels[a] = a == 0 ? "e" : "g" + std::to_string(a);
    for (std::size_t b = 0; b < k; ++b) {
      std::vector<int> c(n);
      for (std::size_t i = 0; i < n; ++i) c[i] = perms[a][perms[b][i]];
      table[a][b] = static_cast<GroupElement>(std::find(perms.begin(), perms.end(), c) - perms.begin());
    }
  }
  return GroupTable::from_table(std::move(labels), std::move(table));
}

}  // namespace grpi
