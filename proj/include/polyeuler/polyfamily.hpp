#pragma once

#include <cstdint>
#include <vector>

#include "polyeuler/classical.hpp"
#include "polyeuler/rational.hpp"

namespace polyeuler {

/// B_n^{(k)}(x), n = 0..order, from Li_k(1-e^{-t}) / (1-e^{-t}) * e^{xt}.
std::vector<Rational> poly_bernoulli(int k, const Rational& x, std::size_t order);

/// B_n^{(k)}(x) as a polynomial in x: sum_j C(n,j) B_{n-j}^{(k)} x^j.
Polynomial poly_bernoulli_polynomial(int k, std::size_t n);

/// Poly-Euler polynomials from 2 Li_k(1-e^{-t}) / (1+e^t) * e^{xt}.
std::vector<Rational> poly_euler(int k, const Rational& x, std::size_t order);

/// Sasaki's poly-Euler numbers from Li_k(1-e^{-4t}) / (4t cosh t).
std::vector<Rational> poly_euler_sasaki(int k, std::size_t order);

/// Largest rows*cols accepted by lonesum_count.
inline constexpr unsigned kLonesumCellLimit = 20;

/// Number of rows x cols (0,1)-matrices that are the only matrix with their
/// row-sum and column-sum vectors, by exhaustive enumeration.
/// Throws TooLarge when rows*cols exceeds kLonesumCellLimit.
std::uint64_t lonesum_count(unsigned rows, unsigned cols);

}  // namespace polyeuler
