#include "polyeuler/polyfamily.hpp"

#include <string>
#include <unordered_map>

#include "polyeuler/egf.hpp"
#include "polyeuler/errors.hpp"
#include "polyeuler/polylog.hpp"

namespace polyeuler {

namespace {

std::vector<Rational> to_vector(const Egf& f) { return {f.coeffs().begin(), f.coeffs().end()}; }

}  // namespace

std::vector<Rational> poly_bernoulli(int k, const Rational& x, std::size_t order) {
  // Both Li_k(1-e^{-t}) and 1-e^{-t} vanish to order exactly 1; one extra
  // coefficient is consumed by the shift.
  const std::size_t n = order + 1;
  const Egf inner = one_minus_exp(1, n);
  const Egf ratio = divide_shifted(li_of_inner(KVector{k}, inner, n), inner, 1);
  return to_vector(ratio * Egf::exp_linear(x, order));
}

Polynomial poly_bernoulli_polynomial(int k, std::size_t n) {
  const auto b = poly_bernoulli(k, 0, n);
  Polynomial p(n + 1);
  for (std::size_t j = 0; j <= n; ++j) p[j] = Rational(binomial(n, j)) * b[n - j];
  return p;
}

std::vector<Rational> poly_euler(int k, const Rational& x, std::size_t order) {
  const Egf numer = li_of_inner(KVector{k}, one_minus_exp(1, order), order) * Rational(2);
  const Egf denom = Egf::constant(1, order) + Egf::exp_linear(1, order);
  return to_vector(divide(numer, denom) * Egf::exp_linear(x, order));
}

std::vector<Rational> poly_euler_sasaki(int k, std::size_t order) {
  const std::size_t n = order + 1;
  const Egf numer = li_of_inner(KVector{k}, one_minus_exp(4, n), n);
  const Egf four_cosh = (Egf::exp_linear(1, n) + Egf::exp_linear(-1, n)) * Rational(2);
  return to_vector(divide_shifted(numer, Egf::variable(n) * four_cosh, 1));
}

std::uint64_t lonesum_count(unsigned rows, unsigned cols) {
  if (rows * cols > kLonesumCellLimit) {
    throw TooLarge("lonesum enumeration of " + std::to_string(rows) + "x" + std::to_string(cols) +
                   " exceeds " + std::to_string(kLonesumCellLimit) + " cells");
  }
  const unsigned cells = rows * cols;
  // Mixed-radix key: row sums in base cols+1, then column sums in base rows+1.
  // (cols+1)^rows * (rows+1)^cols stays far below 2^64 under the cell limit.
  auto key_of = [&](std::uint32_t bits) {
    std::uint64_t key = 0;
    for (unsigned r = 0; r < rows; ++r) {
      unsigned sum = 0;
      for (unsigned c = 0; c < cols; ++c) sum += (bits >> (r * cols + c)) & 1u;
      key = key * (cols + 1) + sum;
    }
    for (unsigned c = 0; c < cols; ++c) {
      unsigned sum = 0;
      for (unsigned r = 0; r < rows; ++r) sum += (bits >> (r * cols + c)) & 1u;
      key = key * (rows + 1) + sum;
    }
    return key;
  };
  std::unordered_map<std::uint64_t, std::uint32_t> classes;
  const std::uint64_t total = std::uint64_t{1} << cells;
  for (std::uint64_t bits = 0; bits < total; ++bits) ++classes[key_of(static_cast<std::uint32_t>(bits))];
  std::uint64_t unique = 0;
  for (const auto& [key, size] : classes) unique += size == 1 ? 1 : 0;
  return unique;
}

}  // namespace polyeuler
