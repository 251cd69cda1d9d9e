#pragma once

#include <cstdint>
#include <vector>

#include "polyeuler/rational.hpp"

namespace polyeuler {

/// Polynomial in x as ascending coefficients: p[j] multiplies x^j.
using Polynomial = std::vector<Rational>;

Rational evaluate(const Polynomial& p, const Rational& x);

/// Which generating function defines the Euler numbers.
enum class EulerConvention {
  /// 2 / (e^t + 1): E_1 = -1/2, odd indices nonzero.
  GenocchiType,
  /// 1 / cosh t: secant numbers 1, -1, 5, -61, ... at even indices.
  SecantType,
};

enum class B1Sign { Plus, Minus };

/// B_0..B_N from t / (e^t - 1), so B_1 = -1/2.
std::vector<Rational> bernoulli_numbers(std::size_t order);

/// B_n(x) = sum_j C(n,j) B_{n-j} x^j, the t^n/n! coefficient of t e^{xt} / (e^t - 1).
Polynomial bernoulli_polynomial(std::size_t n);

/// 1^m + 2^m + ... + n^m by direct summation.
BigInt power_sum(unsigned m, unsigned n);

/// (1/(m+1)) sum_{k=0}^{m} C(m+1,k) B_k n^{m+1-k}, with B_1 = +1/2 or -1/2.
Rational power_sum_closed(unsigned m, unsigned n, B1Sign b1_sign);

/// sum_{k=1}^{m} (-1)^{m-k} k^n by direct summation.
BigInt alternating_sum(unsigned n, unsigned m);

/// E_0..E_N under the chosen convention.
std::vector<Rational> euler_numbers(std::size_t order, EulerConvention conv);

/// B_n as ((-1)^n / (n-1)!) times the determinant of the n x n matrix
/// whose first row is 1/2, 1/3, ..., 1/(n+1) and whose row r >= 2 holds
/// C(j, r-2) in column j >= r-1. Requires n >= 1.
Rational bernoulli_det(unsigned n);

/// E_{2n} (secant convention) as (-1)^n (2n)! times the determinant of the
/// lower Hessenberg matrix with 1/(2(i-j)+2)! on and below the diagonal and
/// 1 on the superdiagonal. Requires n >= 1.
Rational euler_det(unsigned n);

}  // namespace polyeuler
