#include <gtest/gtest.h>

#include <mpfr.h>

#include "grpi/bounds.hpp"

using namespace grpi;

namespace {

// alpha * log10(alpha) at a fixed high precision, round to nearest.
double log10_degree(unsigned long coefficient) {
  mpfr_t a, l;
  mpfr_inits2(400, a, l, static_cast<mpfr_ptr>(nullptr));
  mpfr_set_ui(a, 1, MPFR_RNDN);
  mpfr_exp(a, a, MPFR_RNDN);
  mpfr_mul_ui(a, a, coefficient, MPFR_RNDN);
  mpfr_log10(l, a, MPFR_RNDN);
  mpfr_mul(l, l, a, MPFR_RNDN);
  double out = mpfr_get_d(l, MPFR_RNDN);
  mpfr_clears(a, l, static_cast<mpfr_ptr>(nullptr));
  return out;
}

// Truncated series for e with the tail bound 1/(k! k).
std::pair<Rational, Rational> e_bracket() {
  Rational sum = 0, term = 1;
  for (int k = 0; k <= 25; ++k) {
    sum += term;
    term /= k + 1;
  }
  return {sum, sum + term * 2};
}

}  // namespace

TEST(Bounds, IntegerBounds) {
  EXPECT_EQ(riley_bound(2, 2, 3), 729);
  EXPECT_EQ(lemma10_bound(2, 1, 1, 1, 2, 2), 8);
  EXPECT_EQ(lemma10_bound(3, 0, 2, 2, 2, 2), BigInt(8) * BigInt(3 * 3 * 3 * 3 * 3 * 3));
  EXPECT_THROW(riley_bound(0, 2, 3), InputError);
  EXPECT_THROW(lemma10_bound(2, 3, 1, 1, 1, 1), InputError);
  EXPECT_EQ(dim_v(3), 48);
  EXPECT_EQ(l8_threshold(4), Rational(3, 2));
  EXPECT_TRUE(l8_check({0, 1}, 4));
  EXPECT_FALSE(l8_check({2}, 4));
}

TEST(Bounds, TheoremDegreeEnclosure) {
  auto r = theorem_degree(2, 2, 2, 2);
  EXPECT_EQ(r.coefficient, 1800);
  auto [lo, hi] = e_bracket();
  EXPECT_LE(r.alpha_lo, Rational(lo * 1800).get_d() + 1e-9);
  EXPECT_GE(r.alpha_hi, Rational(hi * 1800).get_d() - 1e-9);
  EXPECT_LE(r.alpha_hi - r.alpha_lo, 1e-6);
  double l = log10_degree(1800);
  EXPECT_LE(r.log10_lo, l);
  EXPECT_GE(r.log10_hi, l);
  EXPECT_LE(r.log10_hi - r.log10_lo, 1e-3);
}

TEST(Bounds, ExactDegreeForSmallAlpha) {
  TheoremDegreeOptions opt;
  opt.exact = true;
  auto r = theorem_degree(1, 1, 2, 2, opt);  // alpha = 8e
  ASSERT_TRUE(r.n);
  EXPECT_EQ(r.coefficient, 8);
  mpfr_t a, p, q;
  mpfr_inits2(1000, a, p, q, static_cast<mpfr_ptr>(nullptr));
  mpfr_set_ui(a, 1, MPFR_RNDN);
  mpfr_exp(a, a, MPFR_RNDN);
  mpfr_mul_ui(a, a, 8, MPFR_RNDN);
  mpfr_pow(p, a, a, MPFR_RNDN);
  mpfr_set_z(q, r.n->get_mpz_t(), MPFR_RNDN);
  EXPECT_GE(mpfr_cmp(q, p), 0);
  mpfr_sub_ui(q, q, 1, MPFR_RNDN);
  EXPECT_LT(mpfr_cmp(q, p), 0);
  mpfr_clears(a, p, q, static_cast<mpfr_ptr>(nullptr));
}

TEST(Bounds, Degenerate) {
  EXPECT_THROW(theorem_degree(1, 1, 1, 2), DegenerateParameters);
  EXPECT_THROW(theorem_degree(2, 1, 3, 1), DegenerateParameters);
  TheoremDegreeOptions opt;
  opt.exact = true;
  opt.digit_cap = 100;
  EXPECT_THROW(theorem_degree(2, 2, 2, 2, opt), InputError);
}
