#include "polyeuler/classical.hpp"

#include "polyeuler/egf.hpp"
#include "polyeuler/errors.hpp"
#include "polyeuler/matrix.hpp"

namespace polyeuler {

Rational evaluate(const Polynomial& p, const Rational& x) {
  Rational acc;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::vector<Rational> bernoulli_numbers(std::size_t order) {
  const std::size_t n = order + 1;
  const Egf t = Egf::variable(n);
  const Egf denom = Egf::exp_linear(1, n) - Egf::constant(1, n);
  const Egf b = divide_shifted(t, denom, 1);
  return {b.coeffs().begin(), b.coeffs().end()};
}

Polynomial bernoulli_polynomial(std::size_t n) {
  const auto b = bernoulli_numbers(n);
  Polynomial p(n + 1);
  for (std::size_t j = 0; j <= n; ++j) p[j] = Rational(binomial(n, j)) * b[n - j];
  return p;
}

BigInt power_sum(unsigned m, unsigned n) {
  BigInt sum = 0;
  for (unsigned k = 1; k <= n; ++k) {
    BigInt term;
    mpz_ui_pow_ui(term.get_mpz_t(), k, m);
    sum += term;
  }
  return sum;
}

Rational power_sum_closed(unsigned m, unsigned n, B1Sign b1_sign) {
  auto b = bernoulli_numbers(m);
  if (m >= 1) b[1] = b1_sign == B1Sign::Plus ? Rational(1, 2) : Rational(-1, 2);
  Rational sum;
  for (unsigned k = 0; k <= m; ++k) {
    sum += Rational(binomial(m + 1, k)) * b[k] * Rational(n).pow(m + 1 - k);
  }
  return sum / Rational(m + 1);
}

BigInt alternating_sum(unsigned n, unsigned m) {
  BigInt sum = 0;
  for (unsigned k = 1; k <= m; ++k) {
    BigInt term;
    mpz_ui_pow_ui(term.get_mpz_t(), k, n);
    if ((m - k) % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  return sum;
}

std::vector<Rational> euler_numbers(std::size_t order, EulerConvention conv) {
  const Egf two = Egf::constant(2, order);
  const Egf denom = conv == EulerConvention::GenocchiType
                        ? Egf::constant(1, order) + Egf::exp_linear(1, order)
                        : Egf::exp_linear(1, order) + Egf::exp_linear(-1, order);
  const Egf e = divide(two, denom);
  return {e.coeffs().begin(), e.coeffs().end()};
}

Rational bernoulli_det(unsigned n) {
  if (n == 0) throw InvalidArgument("bernoulli_det needs n >= 1");
  RationalMatrix m(n, n);
  // 1-based column j occupies index j-1.
  for (unsigned j = 1; j <= n; ++j) m(0, j - 1) = Rational(1, j + 1);
  for (unsigned r = 2; r <= n; ++r) {
    for (unsigned j = r - 1; j <= n; ++j) m(r - 1, j - 1) = Rational(binomial(j, r - 2));
  }
  const Rational sign = n % 2 == 0 ? 1 : -1;
  return sign / Rational(factorial(n - 1)) * det(std::move(m));
}

Rational euler_det(unsigned n) {
  if (n == 0) throw InvalidArgument("euler_det needs n >= 1");
  RationalMatrix m(n, n);
  for (unsigned i = 0; i < n; ++i) {
    for (unsigned j = 0; j <= i; ++j) m(i, j) = Rational(1) / Rational(factorial(2 * (i - j) + 2));
    if (i + 1 < n) m(i, i + 1) = 1;
  }
  const Rational sign = n % 2 == 0 ? 1 : -1;
  return sign * Rational(factorial(2 * n)) * det(std::move(m));
}

}  // namespace polyeuler
