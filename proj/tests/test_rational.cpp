#include <gtest/gtest.h>

#include "oracles/oracle.hpp"
#include "polyeuler/errors.hpp"
#include "polyeuler/rational.hpp"

using polyeuler::Rational;

TEST(Rational, ParsesCanonicalText) {
  EXPECT_EQ(Rational::parse("-3/4"), Rational(-3, 4));
  EXPECT_EQ(Rational::parse("5"), Rational(5));
  EXPECT_EQ(Rational::parse("0"), Rational(0));
  EXPECT_EQ(Rational::parse("6/8").str(), "3/4");
  EXPECT_EQ(Rational::parse("\xE2\x88\x92" "1/2"), Rational(-1, 2));
}

TEST(Rational, FormatsCanonicalText) {
  EXPECT_EQ(Rational(-3, 4).str(), "-3/4");
  EXPECT_EQ(Rational(10, -4).str(), "-5/2");
  EXPECT_EQ(Rational(4, 2).str(), "2");
  EXPECT_EQ(Rational(0, 7).str(), "0");
}

TEST(Rational, RejectsMalformedText) {
  for (const char* bad : {"", "-", "1/", "/2", "1/0", "1.5", "+3", "3/-4", "1 /2", "abc", "--1"}) {
    EXPECT_THROW(Rational::parse(bad), polyeuler::ParseError) << bad;
  }
}

TEST(Rational, ZeroDenominatorAndDivision) {
  EXPECT_THROW(Rational(1, 0), polyeuler::InvalidArgument);
  EXPECT_THROW(Rational(1) / Rational(0), polyeuler::InvalidArgument);
  EXPECT_THROW(Rational(0).pow(-1), polyeuler::InvalidArgument);
}

TEST(Rational, Powers) {
  EXPECT_EQ(Rational(0).pow(0), Rational(1));
  EXPECT_EQ(Rational(-2, 3).pow(3), Rational(-8, 27));
  EXPECT_EQ(Rational(-2, 3).pow(-2), Rational(9, 4));
  EXPECT_EQ(Rational(5).pow(-1), Rational(1, 5));
}

TEST(Rational, Binomials) {
  EXPECT_EQ(polyeuler::binomial(5, 2), 10);
  EXPECT_EQ(polyeuler::binomial(2, 5), 0);
  EXPECT_EQ(polyeuler::factorial(0), 1);
  EXPECT_EQ(polyeuler::factorial(6), 720);
}

TEST(RationalProperty, ArithmeticStaysCanonicalAndRoundTrips) {
  // Property: every result has a positive denominator coprime to its numerator,
  // and its text form parses back to the same value.
  oracle::RandomRational gen(2024);
  for (int i = 0; i < 500; ++i) {
    const Rational a = gen(50), b = gen(50);
    std::vector<Rational> results = {a + b, a - b, a * b, -a};
    if (!b.is_zero()) results.push_back(a / b);
    for (const auto& r : results) {
      EXPECT_GT(r.denominator(), 0);
      polyeuler::BigInt g;
      mpz_gcd(g.get_mpz_t(), r.numerator().get_mpz_t(), r.denominator().get_mpz_t());
      EXPECT_EQ(g, 1) << r;
      EXPECT_EQ(Rational::parse(r.str()), r);
    }
  }
}
