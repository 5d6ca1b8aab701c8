#include <gtest/gtest.h>

#include <random>

#include "akschur/factor_product.hpp"

using namespace akschur;

namespace {

LaurentPoly random_factor(std::mt19937& rng, int arity) {
  std::uniform_int_distribution<int> nterms(1, 3), expo(-4, 4), coeff(-5, 5);
  std::vector<LaurentPoly::Term> terms;
  for (int i = nterms(rng); i > 0; --i) {
    MonomialKey k(arity);
    for (std::size_t v = 0; v < k.vars(); ++v) k.exp(v) = expo(rng);
    terms.emplace_back(k, coeff(rng));
  }
  return LaurentPoly::from_terms(arity, std::move(terms));
}

}  // namespace

TEST(FactorProduct, MatchesPlainProductOnRandomFactors) {
  std::mt19937 rng(2718);
  std::uniform_int_distribution<int> arity(0, 3), count(0, 8), expo(-3, 3);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = arity(rng);
    FactorProduct acc(n);
    RationalFn plain(LaurentPoly::constant(n, 1));
    for (int i = count(rng); i > 0; --i) {
      LaurentPoly f = random_factor(rng, n);
      const int e = expo(rng);
      if (f.is_zero() && e < 0) continue;
      acc.multiply(f, e);
      plain = e >= 0 ? plain * RationalFn(f.pow(e)) : plain * RationalFn(LaurentPoly::constant(n, 1), f.pow(-e));
    }
    ASSERT_TRUE(rf_equal(acc.to_rational_fn(), plain)) << "trial " << trial;
  }
}

TEST(FactorProduct, CancelsAssociates) {
  // (q − 1), (1 − q) and q^3 (q − 1) all normalize to the same factor.
  LaurentPoly q = q_var(1), one = LaurentPoly::constant(1, 1);
  FactorProduct acc(1);
  acc.multiply(q - one);
  acc.multiply(one - q, -1);
  EXPECT_EQ(acc.distinct_factors(), 0u);
  acc.multiply(q.pow(3) * (q - one), 2);
  acc.multiply(q - one, -2);
  EXPECT_EQ(acc.distinct_factors(), 0u);
  RationalFn out = acc.to_rational_fn();
  EXPECT_TRUE(rf_equal(out, RationalFn(-q.pow(6))));
  EXPECT_TRUE(out.den().is_constant(1));
}

TEST(FactorProduct, KeepsDistinctFactors) {
  LaurentPoly q = q_var(1), one = LaurentPoly::constant(1, 1);
  FactorProduct acc(1);
  acc.multiply(q - one);
  acc.multiply(q + one, -1);
  EXPECT_EQ(acc.distinct_factors(), 2u);
}

TEST(FactorProduct, ZeroFactor) {
  FactorProduct acc(2);
  acc.multiply(LaurentPoly(2));
  acc.multiply(q_var(2) + LaurentPoly::constant(2, 1), -3);
  EXPECT_TRUE(acc.to_rational_fn().num().is_zero());
  EXPECT_THROW(FactorProduct(1).multiply(LaurentPoly(1), -1), std::domain_error);
  FactorProduct z(1);
  z.multiply_constant(0);
  EXPECT_TRUE(z.to_rational_fn().num().is_zero());
}

TEST(FactorProduct, RationalConstantsAndMonomials) {
  FactorProduct acc(1);
  acc.multiply_constant(Rational(3, 4));
  acc.multiply(LaurentPoly::monomial(2, MonomialKey(5, {0})), -1);
  EXPECT_TRUE(rf_equal(acc.to_rational_fn(),
                       RationalFn(LaurentPoly::constant(1, 3), LaurentPoly::monomial(8, MonomialKey(5, {0})))));
}

TEST(FactorProduct, ArityMismatch) {
  FactorProduct acc(2);
  EXPECT_THROW(acc.multiply(q_var(1)), std::invalid_argument);
  EXPECT_THROW(acc.multiply(FactorProduct(3)), std::invalid_argument);
}
