#include <gtest/gtest.h>

#include "oracles/oracle.hpp"
#include "polyeuler/classical.hpp"
#include "polyeuler/errors.hpp"
#include "polyeuler/polyfamily.hpp"

using polyeuler::Rational;

TEST(PolyBernoulli, Examples) {
  const auto k1 = polyeuler::poly_bernoulli(1, 0, 8);
  EXPECT_EQ(k1[1], Rational(1, 2));
  const auto k2 = polyeuler::poly_bernoulli(2, 0, 8);
  EXPECT_EQ(k2[0], Rational(1));
  EXPECT_EQ(k2[1], Rational(1, 4));
  const auto km1 = polyeuler::poly_bernoulli(-1, 0, 8);
  for (std::size_t n = 0; n <= 8; ++n) EXPECT_EQ(km1[n], Rational(2).pow(static_cast<long>(n)));
}

TEST(PolyBernoulli, FrozenValues) {
  EXPECT_EQ(polyeuler::poly_bernoulli(2, 0, 8),
            oracle::values({"1", "1/4", "-1/36", "-1/24", "7/450", "1/40", "-38/2205", "-5/168", "11/350"}));
  EXPECT_EQ(polyeuler::poly_bernoulli(-2, 0, 8),
            oracle::values({"1", "4", "14", "46", "146", "454", "1394", "4246", "12866"}));
  EXPECT_EQ(polyeuler::poly_bernoulli(2, Rational(1, 3), 8),
            oracle::values({"1", "7/12", "1/4", "11/216", "-37/4050", "1/72", "5399/178605", "-1105/122472",
                            "-11701/255150"}));
}

TEST(PolyBernoulli, KOneIsBernoulliWithPositiveB1) {
  auto b = polyeuler::bernoulli_numbers(12);
  b[1] = Rational(1, 2);
  EXPECT_EQ(polyeuler::poly_bernoulli(1, 0, 12), b);
}

TEST(PolyBernoulli, PolynomialEvaluatesLikeSequence) {
  for (int k : {-2, 1, 3}) {
    const Rational x(-5, 7);
    const auto seq = polyeuler::poly_bernoulli(k, x, 7);
    for (std::size_t n = 0; n <= 7; ++n) {
      EXPECT_EQ(polyeuler::evaluate(polyeuler::poly_bernoulli_polynomial(k, n), x), seq[n]);
    }
  }
}

TEST(PolyBernoulli, BridgeToBernoulliPolynomials) {
  // (-1)^n B_n^{(1)}(-x) = B_n(x)
  for (std::size_t n = 0; n <= 12; ++n) {
    const auto lhs = polyeuler::poly_bernoulli_polynomial(1, n);
    const auto rhs = polyeuler::bernoulli_polynomial(n);
    for (std::size_t j = 0; j <= n; ++j) EXPECT_EQ((n + j) % 2 == 0 ? lhs[j] : -lhs[j], rhs[j]);
  }
}

TEST(PolyEuler, Examples) {
  for (int k = -3; k <= 3; ++k) EXPECT_TRUE(polyeuler::poly_euler(k, 0, 4)[0].is_zero()) << k;
  const auto e = polyeuler::poly_euler(1, 0, 4);
  EXPECT_EQ(e[1], Rational(1));
  EXPECT_EQ(e[2], Rational(-1));
  EXPECT_EQ(polyeuler::poly_euler(1, 1, 3)[1], Rational(1));
}

TEST(PolyEuler, FrozenValues) {
  EXPECT_EQ(polyeuler::poly_euler(2, Rational(1, 2), 8),
            oracle::values({"0", "1", "-1/2", "-7/12", "3/4", "89/80", "-75/32", "-31249/6720", "427/32"}));
  EXPECT_EQ(polyeuler::poly_euler(-1, 0, 8), oracle::values({"0", "1", "2", "5/2", "2", "1", "2", "25/4", "2"}));
}

TEST(PolyEulerSasaki, Examples) {
  for (int k = -2; k <= 3; ++k) EXPECT_EQ(polyeuler::poly_euler_sasaki(k, 3)[0], Rational(1)) << k;
  const auto e1 = polyeuler::poly_euler_sasaki(1, 12);
  EXPECT_EQ(e1, polyeuler::euler_numbers(12, polyeuler::EulerConvention::SecantType));
  EXPECT_EQ(e1[1], Rational(0));
  EXPECT_EQ(e1[2], Rational(-1));
}

TEST(PolyEulerSasaki, FrozenValues) {
  EXPECT_EQ(polyeuler::poly_euler_sasaki(2, 8),
            oracle::values({"1", "-1", "-1/9", "3", "-51/25", "-25", "33221/735", "427", "-1288391/945"}));
}

TEST(Lonesum, Examples) {
  EXPECT_EQ(polyeuler::lonesum_count(1, 1), 2u);
  EXPECT_EQ(polyeuler::lonesum_count(2, 2), 14u);
  EXPECT_EQ(polyeuler::lonesum_count(1, 3), 8u);
  EXPECT_EQ(polyeuler::lonesum_count(3, 3), 230u);
}

TEST(Lonesum, Guard) {
  EXPECT_THROW(polyeuler::lonesum_count(3, 7), polyeuler::TooLarge);
  EXPECT_NO_THROW(polyeuler::lonesum_count(1, 20));
}

TEST(Lonesum, MatchesNegativeIndexPolyBernoulliAndIsSymmetric) {
  for (unsigned n = 1; n <= 3; ++n) {
    for (unsigned k = 1; k <= 3; ++k) {
      const auto count = polyeuler::lonesum_count(n, k);
      EXPECT_EQ(count, polyeuler::lonesum_count(k, n));
      EXPECT_EQ(Rational(count), polyeuler::poly_bernoulli(-static_cast<int>(k), 0, n)[n]) << n << "x" << k;
      EXPECT_EQ(polyeuler::poly_bernoulli(-static_cast<int>(k), 0, n)[n],
                polyeuler::poly_bernoulli(-static_cast<int>(n), 0, k)[k]);
    }
  }
}
