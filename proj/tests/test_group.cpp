#include <gtest/gtest.h>

#include "grpi/group.hpp"
#include "oracle.hpp"

using namespace grpi;

TEST(Group, CyclicOrdersMatchBruteForce) {
  for (std::size_t n = 1; n <= 12; ++n) {
    auto g = cyclic_group(n);
    for (GroupElement a = 0; a < n; ++a) {
      EXPECT_EQ(g.element_order(a), oracle::element_order(g.table(), g.identity(), a));
      EXPECT_EQ(g.element_order(a), n / std::gcd(n, static_cast<std::size_t>(a)));
      EXPECT_EQ(g.mul(a, g.inverse(a)), g.identity());
    }
  }
}

TEST(Group, SymmetricGroups) {
  std::size_t fact = 1;
  for (std::size_t n = 1; n <= 4; ++n) {
    fact *= n;
    auto g = symmetric_group(n);
    EXPECT_EQ(g.order(), fact);
    EXPECT_EQ(g.label(g.identity()), "e");
    for (GroupElement a = 0; a < g.order(); ++a)
      EXPECT_EQ(g.element_order(a), oracle::element_order(g.table(), g.identity(), a));
  }
  auto s3 = symmetric_group(3);
  std::size_t involutions = 0;
  for (GroupElement a = 0; a < 6; ++a) involutions += s3.element_order(a) == 2;
  EXPECT_EQ(involutions, 3u);
  EXPECT_THROW(symmetric_group(5), InputError);
}

TEST(Group, FromTableDiagnostics) {
  try {
    GroupTable::from_table({"a", "b"}, {{0, 0}, {0, 0}});
    FAIL();
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("identity"), std::string::npos);
  }
  // identity a, but not associative
  std::vector<std::vector<GroupElement>> t = {{0, 1, 2}, {1, 0, 0}, {2, 2, 0}};
  EXPECT_THROW(GroupTable::from_table({"a", "b", "c"}, t), InputError);
  EXPECT_THROW(GroupTable::from_table({"a", "a"}, {{0, 1}, {1, 0}}), InputError);
  EXPECT_THROW(GroupTable::from_table({"a", "b"}, {{0, 1}, {1, 5}}), InputError);
  auto z2 = GroupTable::from_table({"1", "s"}, {{0, 1}, {1, 0}});
  EXPECT_EQ(z2.table(), cyclic_group(2).table());
  EXPECT_EQ(z2.find("s"), std::optional<GroupElement>(1));
}

TEST(Group, Power) {
  auto g = cyclic_group(5);
  EXPECT_EQ(g.power(2, 3), 1u);
  EXPECT_EQ(g.power(4, 0), g.identity());
}
