#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "polyeuler/rational.hpp"

namespace polyeuler {

/// Truncated exponential generating function  sum_{n=0}^{N} c_n t^n / n!.
///
/// Index n stores c_n, the coefficient of t^n/n!. Binary operations
/// truncate to the smaller of the two orders, so a result never claims
/// more precision than its inputs carry.
class Egf {
 public:
  /// Takes ownership of c_0..c_N; throws InvalidArgument when empty.
  explicit Egf(std::vector<Rational> coeffs);

  static Egf zero(std::size_t order);
  static Egf constant(const Rational& value, std::size_t order);
  /// The series t (c_1 = 1).
  static Egf variable(std::size_t order);
  /// e^{lambda t}: c_n = lambda^n.
  static Egf exp_linear(const Rational& lambda, std::size_t order);

  std::size_t order() const { return coeffs_.size() - 1; }
  const Rational& operator[](std::size_t n) const { return coeffs_[n]; }
  std::span<const Rational> coeffs() const { return coeffs_; }

  /// Keeps c_0..c_order; throws InvalidArgument if order exceeds the current one.
  Egf truncated(std::size_t order) const;

  /// Ordinary coefficient of t^n, i.e. c_n / n!.
  Rational ordinary(std::size_t n) const;

  bool is_zero() const;

  Egf& operator+=(const Egf& o);
  Egf& operator-=(const Egf& o);
  Egf& operator*=(const Rational& s);

  friend Egf operator+(Egf a, const Egf& b) { return a += b; }
  friend Egf operator-(Egf a, const Egf& b) { return a -= b; }
  friend Egf operator-(Egf a) { return a *= Rational(-1); }
  friend Egf operator*(Egf a, const Rational& s) { return a *= s; }
  friend Egf operator*(const Rational& s, Egf a) { return a *= s; }
  /// Binomial convolution c_n = sum_i C(n,i) a_i b_{n-i}.
  friend Egf operator*(const Egf& a, const Egf& b);

  friend bool operator==(const Egf&, const Egf&) = default;

 private:
  std::vector<Rational> coeffs_;
};

/// Truncated ordinary power series  sum_{m=0}^{N} a_m z^m; the outer
/// function of a composition (polylogarithms live here).
class PowerSeries {
 public:
  explicit PowerSeries(std::vector<Rational> coeffs);

  std::size_t order() const { return coeffs_.size() - 1; }
  const Rational& operator[](std::size_t m) const { return coeffs_[m]; }
  std::span<const Rational> coeffs() const { return coeffs_; }

  /// Degree of the first nonzero coefficient, or order()+1 for the zero series.
  std::size_t valuation() const;

  friend bool operator==(const PowerSeries&, const PowerSeries&) = default;

 private:
  std::vector<Rational> coeffs_;
};

/// h with h * g = f. Throws DivisionByNonUnit when g has zero constant term.
Egf divide(const Egf& f, const Egf& g);

/// Cancels t^shift from both f and g, then divides. Both operands must
/// vanish to ordinary order >= shift and g's ordinary t^shift coefficient
/// must be nonzero, otherwise InsufficientVanishing. Result order is
/// min(f.order, g.order) - shift.
Egf divide_shifted(const Egf& f, const Egf& g, std::size_t shift);

/// outer(inner(t)) with outer read as an exponential generating function.
/// Throws NonNilpotentInner when inner has a nonzero constant term.
Egf compose(const Egf& outer, const Egf& inner);

/// outer(inner(t)) with outer read as an ordinary series in z.
Egf compose(const PowerSeries& outer, const Egf& inner);

/// f^r by repeated multiplication; f^0 = 1.
Egf pow(const Egf& f, unsigned r);

}  // namespace polyeuler
