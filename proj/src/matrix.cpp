#include "polyeuler/matrix.hpp"

#include <string>
#include <utility>

#include "polyeuler/errors.hpp"

namespace polyeuler {

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows * cols) {
    throw InvalidArgument("expected " + std::to_string(rows * cols) + " entries, got " +
                          std::to_string(entries_.size()));
  }
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Rational det(RationalMatrix m) {
  if (m.rows() != m.cols()) {
    throw NotSquare("determinant of a " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) + " matrix");
  }
  const std::size_t n = m.rows();
  Rational result = 1;
  for (std::size_t k = 0; k < n; ++k) {
    // Full pivot search over the trailing block; any nonzero entry is exact.
    std::size_t pr = n, pc = n;
    for (std::size_t r = k; r < n && pr == n; ++r) {
      for (std::size_t c = k; c < n; ++c) {
        if (!m(r, c).is_zero()) {
          pr = r;
          pc = c;
          break;
        }
      }
    }
    if (pr == n) return 0;
    if (pr != k) {
      for (std::size_t c = 0; c < n; ++c) std::swap(m(k, c), m(pr, c));
      result = -result;
    }
    if (pc != k) {
      for (std::size_t r = 0; r < n; ++r) std::swap(m(r, k), m(r, pc));
      result = -result;
    }
    const Rational pivot = m(k, k);
    result *= pivot;
    for (std::size_t r = k + 1; r < n; ++r) {
      if (m(r, k).is_zero()) continue;
      const Rational factor = m(r, k) / pivot;
      for (std::size_t c = k; c < n; ++c) m(r, c) -= factor * m(k, c);
    }
  }
  return result;
}

}  // namespace polyeuler
