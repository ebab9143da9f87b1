#include <gtest/gtest.h>

#include <random>

#include "grpi/linalg.hpp"
#include "oracle.hpp"

using namespace grpi;
using Vec = SparseVector<Rational>;

namespace {

Vec sparse(const oracle::Vec& d) {
  std::vector<Vec::Entry> e;
  for (std::size_t i = 0; i < d.size(); ++i)
    if (d[i] != 0) e.emplace_back(i, d[i]);
  return Vec(std::move(e));
}

}  // namespace

TEST(Linalg, RankMatchesDenseOracle) {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<int> val(-2, 2), size(1, 8);
  for (int trial = 0; trial < 300; ++trial) {
    std::size_t rows = size(rng), cols = size(rng);
    std::vector<oracle::Vec> dense;
    std::vector<Vec> vs;
    for (std::size_t r = 0; r < rows; ++r) {
      oracle::Vec row(cols);
      for (auto& x : row) x = val(rng) * (val(rng) == 0 ? 0 : 1);
      dense.push_back(row);
      vs.push_back(sparse(row));
    }
    EXPECT_EQ(rank_of(RationalField{}, vs), oracle::rank(dense));
  }
}

TEST(Linalg, NullSpaceAnnihilatesAndIsReduced) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> val(-3, 3);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 6;
    EchelonBasis<RationalField> cols;
    std::vector<oracle::Vec> dense;
    for (int c = 0; c < 3; ++c) {
      oracle::Vec col(n);
      for (auto& x : col) x = val(rng);
      dense.push_back(col);
      cols.insert(sparse(col));
    }
    auto ker = cols.null_space(n);
    EXPECT_EQ(ker.size(), n - cols.rank());
    std::set<std::size_t> leads;
    for (const auto& k : ker) {
      leads.insert(k.begin()->first);
      for (const auto& col : dense) {
        Rational dot = 0;
        for (const auto& [i, c] : k) dot += c * col[i];
        EXPECT_EQ(dot, 0);
      }
    }
    EXPECT_EQ(leads.size(), ker.size());
  }
}

TEST(Linalg, PrimeFieldRankDropsModP) {
  PrimeField f(3);
  std::vector<SparseVector<Zp>> vs = {SparseVector<Zp>({{0, f.one()}, {1, f.from_int(1)}}),
                                      SparseVector<Zp>({{0, f.one()}, {1, f.from_int(4)}})};
  EXPECT_EQ(rank_of(f, vs), 1u);
  std::vector<Vec> qs = {Vec({{0, 1}, {1, 1}}), Vec({{0, 1}, {1, 4}})};
  EXPECT_EQ(rank_of(RationalField{}, qs), 2u);
}
