#pragma once

#include <cstddef>
#include <vector>

#include "polyeuler/rational.hpp"

namespace polyeuler {

/// Dense row-major matrix of exact rationals.
class RationalMatrix {
 public:
  RationalMatrix(std::size_t rows, std::size_t cols);
  /// Throws InvalidArgument unless entries.size() == rows * cols.
  RationalMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);

  static RationalMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Rational> entries_;
};

/// Exact determinant by Gaussian elimination with full pivoting.
/// Throws NotSquare for non-square input. The 0x0 determinant is 1.
Rational det(RationalMatrix m);

}  // namespace polyeuler
