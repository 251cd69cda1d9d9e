#include <gtest/gtest.h>

#include "oracles/oracle.hpp"
#include "polyeuler/egf.hpp"
#include "polyeuler/errors.hpp"

using polyeuler::Egf;
using polyeuler::PowerSeries;
using polyeuler::Rational;

namespace {

Egf egf(std::vector<Rational> c) { return Egf(std::move(c)); }

Egf random_egf(oracle::RandomRational& gen, std::size_t order, bool zero_constant = false) {
  std::vector<Rational> c(order + 1);
  for (auto& x : c) x = gen(6);
  if (zero_constant) c[0] = 0;
  return Egf(std::move(c));
}

}  // namespace

TEST(EgfAdd, Examples) {
  const Egf one = Egf::constant(1, 4);
  EXPECT_EQ(one + Egf::zero(4), one);
  const Egf two_t = Egf::variable(4) + Egf::variable(4);
  EXPECT_EQ(two_t[1], Rational(2));
  const Egf e = Egf::exp_linear(1, 6);
  EXPECT_TRUE((e + (-e)).is_zero());
}

TEST(EgfAdd, MixedOrdersTruncateToMinimum) {
  const Egf sum = Egf::exp_linear(1, 7) + Egf::exp_linear(2, 3);
  EXPECT_EQ(sum.order(), 3u);
  EXPECT_EQ(sum[3], Rational(9));
  EXPECT_EQ((Egf::exp_linear(1, 7) * Egf::exp_linear(1, 2)).order(), 2u);
}

TEST(EgfMul, Examples) {
  const Egf sq = Egf::exp_linear(1, 8) * Egf::exp_linear(1, 8);
  for (std::size_t n = 0; n <= 8; ++n) EXPECT_EQ(sq[n], Rational(2).pow(static_cast<long>(n)));
  const Egf f = egf({3, Rational(-1, 2), 7, 0, 1});
  EXPECT_EQ(f * Egf::constant(1, 4), f);
  // t * t = t^2 = 2 * t^2/2!
  const Egf tt = Egf::variable(4) * Egf::variable(4);
  EXPECT_EQ(tt, egf({0, 0, 2, 0, 0}));
}

TEST(EgfDiv, Examples) {
  EXPECT_THROW(polyeuler::divide(Egf::variable(4), Egf::exp_linear(1, 4) - Egf::constant(1, 4)),
               polyeuler::DivisionByNonUnit);
  const Egf inv = polyeuler::divide(Egf::constant(1, 6), Egf::exp_linear(1, 6));
  for (std::size_t n = 0; n <= 6; ++n) EXPECT_EQ(inv[n], Rational(n % 2 == 0 ? 1 : -1));
  // 2/(1+e^t), triangular solve by hand to order 3.
  const Egf g = polyeuler::divide(Egf::constant(2, 3), Egf::constant(1, 3) + Egf::exp_linear(1, 3));
  EXPECT_EQ(g, egf({1, Rational(-1, 2), 0, Rational(1, 4)}));
}

TEST(EgfDivShifted, Examples) {
  const Egf t = Egf::variable(4);
  const Egf em1 = Egf::exp_linear(1, 4) - Egf::constant(1, 4);
  const Egf b = polyeuler::divide_shifted(t, em1, 1);
  EXPECT_EQ(b.order(), 3u);
  EXPECT_EQ(b[0], Rational(1));
  EXPECT_EQ(b[1], Rational(-1, 2));
  EXPECT_EQ(b[2], Rational(1, 6));
  EXPECT_EQ(polyeuler::divide_shifted(t, t, 1), Egf::constant(1, 3));
  // t^2 / (e^t - 1) = t * (t/(e^t-1))
  const Egf t2 = egf({0, 0, 2, 0, 0});
  EXPECT_EQ(polyeuler::divide_shifted(t2, em1, 1), (t * b).truncated(3));
}

TEST(EgfDivShifted, RejectsInsufficientVanishing) {
  const Egf e = Egf::exp_linear(1, 4);
  const Egf t = Egf::variable(4);
  EXPECT_THROW(polyeuler::divide_shifted(e, t, 1), polyeuler::InsufficientVanishing);
  EXPECT_THROW(polyeuler::divide_shifted(t, e, 1), polyeuler::InsufficientVanishing);
  EXPECT_THROW(polyeuler::divide_shifted(t, t * t, 1), polyeuler::InsufficientVanishing);
  EXPECT_THROW(polyeuler::divide_shifted(Egf::zero(1), Egf::zero(1), 2), polyeuler::InsufficientVanishing);
}

TEST(EgfCompose, Examples) {
  const Egf e = Egf::exp_linear(1, 6);
  EXPECT_EQ(polyeuler::compose(e, Egf::variable(6)), e);
  const Egf f = egf({5, 1, 2, 3});
  EXPECT_EQ(polyeuler::compose(f, Egf::zero(3)), Egf::constant(5, 3));
  // -ln(1-z) at z = 1 - e^{-t} is exactly t.
  std::vector<Rational> log_coeffs(9);
  for (std::size_t m = 1; m <= 8; ++m) log_coeffs[m] = Rational(1, static_cast<long>(m));
  const Egf inner = Egf::constant(1, 8) - Egf::exp_linear(-1, 8);
  EXPECT_EQ(polyeuler::compose(PowerSeries(log_coeffs), inner), Egf::variable(8));
  EXPECT_THROW(polyeuler::compose(f, Egf::constant(1, 3)), polyeuler::NonNilpotentInner);
}

TEST(EgfExpLinear, Examples) {
  EXPECT_EQ(Egf::exp_linear(0, 4), Egf::constant(1, 4));
  EXPECT_EQ(Egf::exp_linear(1, 3), egf({1, 1, 1, 1}));
  EXPECT_EQ(Egf::exp_linear(Rational(-1, 2), 2), egf({1, Rational(-1, 2), Rational(1, 4)}));
}

TEST(EgfPow, Examples) {
  const Egf f = egf({3, 1, 4, 1});
  EXPECT_EQ(polyeuler::pow(f, 0), Egf::constant(1, 3));
  const Egf cube = polyeuler::pow(Egf::exp_linear(1, 5), 3);
  for (std::size_t n = 0; n <= 5; ++n) EXPECT_EQ(cube[n], Rational(3).pow(static_cast<long>(n)));
  const Egf sq = polyeuler::pow(Egf::constant(1, 2) + Egf::exp_linear(1, 2), 2);
  EXPECT_EQ(sq, egf({4, 4, 6}));
}

TEST(EgfProperty, RingAxiomsAtFixedOrder) {
  oracle::RandomRational gen(7);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t order = gen.raw() % 13;
    const Egf f = random_egf(gen, order), g = random_egf(gen, order), h = random_egf(gen, order);
    EXPECT_EQ(f + g, g + f);
    EXPECT_EQ(f * g, g * f);
    EXPECT_EQ((f + g) + h, f + (g + h));
    EXPECT_EQ((f * g) * h, f * (g * h));
    EXPECT_EQ(f * (g + h), f * g + f * h);
  }
}

TEST(EgfProperty, MulMatchesOrdinaryConvolution) {
  oracle::RandomRational gen(11);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t order = gen.raw() % 12;
    const Egf f = random_egf(gen, order), g = random_egf(gen, order);
    const auto expected = oracle::to_egf(oracle::mul(oracle::from_egf({f.coeffs().begin(), f.coeffs().end()}),
                                                     oracle::from_egf({g.coeffs().begin(), g.coeffs().end()})));
    const Egf product = f * g;
    EXPECT_EQ(std::vector<Rational>(product.coeffs().begin(), product.coeffs().end()), expected);
  }
}

TEST(EgfProperty, DivisionInvertsMultiplication) {
  oracle::RandomRational gen(13);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t order = gen.raw() % 12;
    const Egf f = random_egf(gen, order);
    Egf g = random_egf(gen, order);
    if (g[0].is_zero()) g = g + Egf::constant(1, order);
    EXPECT_EQ(polyeuler::divide(f, g) * g, f);
  }
}

TEST(EgfProperty, ComposeMatchesBruteForceSubstitution) {
  oracle::RandomRational gen(17);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t order = gen.raw() % 9;
    const Egf f = random_egf(gen, order);
    const Egf g = random_egf(gen, order, /*zero_constant=*/true);
    const auto expected = oracle::to_egf(oracle::substitute(oracle::from_egf({f.coeffs().begin(), f.coeffs().end()}),
                                                            oracle::from_egf({g.coeffs().begin(), g.coeffs().end()})));
    const Egf composed = polyeuler::compose(f, g);
    EXPECT_EQ(std::vector<Rational>(composed.coeffs().begin(), composed.coeffs().end()), expected);
  }
}
