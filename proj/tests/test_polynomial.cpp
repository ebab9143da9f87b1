#include <gtest/gtest.h>

#include <random>

#include "grpi/parse.hpp"

using namespace grpi;

namespace {
auto z2 = std::make_shared<const GroupTable>(cyclic_group(2));
Polynomial<RationalField> P(std::string_view s) { return parse_poly<RationalField>(s, z2); }
}  // namespace

TEST(Parse, RoundTripNormalizes) {
  EXPECT_EQ(print_poly(P("x2{1}*x1{0} + 2*x1{0}*x2{1} - x2{1}*x1{0}")), "2*x1{0}*x2{1}");
  EXPECT_EQ(print_poly(P("x1{0} - x1{0}")), "0");
  EXPECT_EQ(print_poly(P("-1/2*y1{1}*z2{0}")), "-1/2*y1{1}*z2{0}");
  for (auto s : {"x1{1}*x2{1} - x2{1}*x1{1}", "3*y1{0} + z2{1}*x3{0}", "x1{0}"}) {
    auto p = P(s);
    EXPECT_EQ(P(print_poly(p)), p) << s;
  }
}

TEST(Parse, RandomRoundTrip) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> coef(-5, 5), len(1, 3), idx(1, 3), deg(0, 1), fam(0, 2);
  for (int trial = 0; trial < 200; ++trial) {
    Polynomial<RationalField> p(z2, RationalField{});
    for (int t = 0; t < 4; ++t) {
      Word w;
      for (int k = len(rng); k > 0; --k)
        w.push_back({static_cast<Family>(fam(rng)), static_cast<std::uint32_t>(idx(rng)),
                     static_cast<GroupElement>(deg(rng))});
      Rational c(coef(rng), 1 + std::abs(coef(rng)));
      c.canonicalize();
      p.add_term(w, c);
    }
    EXPECT_EQ(P(print_poly(p)), p) << print_poly(p) << " vs " << print_poly(P(print_poly(p)));
  }
}

TEST(Parse, Errors) {
  try {
    P("x1{0} + * x2{1}");
    FAIL();
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("position 8"), std::string::npos) << e.what();
  }
  try {
    P("x1{7}");
    FAIL();
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("unknown degree label '7'"), std::string::npos) << e.what();
  }
  EXPECT_THROW(P("x0{0}"), InputError);
  EXPECT_THROW(P("x1{0"), InputError);
}

TEST(Parse, LieBrackets) {
  auto p = parse_lie<RationalField>("[x1{1},x2{1}]", z2);
  EXPECT_EQ(p, P("x1{1}*x2{1} - x2{1}*x1{1}"));
  auto q = parse_lie<RationalField>("[[x1{0},x2{0}],x3{1}]", z2);
  EXPECT_EQ(q.size(), 4u);
}

TEST(Polynomial, ArithmeticAndDegree) {
  auto a = P("x1{1}"), b = P("x2{1} + x3{0}");
  EXPECT_EQ(a * b, P("x1{1}*x2{1} + x1{1}*x3{0}"));
  EXPECT_FALSE((a * b).homogeneous_degree());
  EXPECT_EQ(P("x1{1}*x2{1}").homogeneous_degree(), std::optional<GroupElement>(0));
  EXPECT_EQ(P("0").homogeneous_degree(), std::optional<GroupElement>(0));
  auto z3 = std::make_shared<const GroupTable>(cyclic_group(3));
  EXPECT_THROW(a + parse_poly<RationalField>("x1{1}", z3), InputError);
}

TEST(Polynomial, Substitution) {
  auto f = P("x1{1}*x2{0}");
  std::map<Variable, Polynomial<RationalField>> s{{xvar(1, 1), P("y1{1} + z1{1}")}};
  EXPECT_EQ(substitute(f, s), P("y1{1}*x2{0} + z1{1}*x2{0}"));
  std::map<Variable, Polynomial<RationalField>> bad{{xvar(1, 1), P("y1{0}")}};
  EXPECT_THROW(substitute(f, bad), InputError);
  EXPECT_EQ(expand_x(P("x1{1}*x2{0}")).size(), 4u);
}

TEST(Polynomial, Multilinearity) {
  EXPECT_TRUE(is_multilinear(P("x1{0}*x2{1} - x2{1}*x1{0}")));
  EXPECT_FALSE(is_multilinear(P("x1{0}*x1{0}")));
  EXPECT_FALSE(is_multilinear(P("x1{0}*x2{0} + x1{0}")));
  EXPECT_TRUE(is_multilinear(P("x1{0}*x2{1} + x2{1}*x1{0}"), Signature{1, 1}));
  EXPECT_FALSE(is_multilinear(P("x1{0}*x2{1}"), Signature{2, 0}));
  EXPECT_EQ(signature_of(P("x1{1}*x2{1}*x3{0}")), (Signature{1, 2}));
}
