#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "polyeuler/egf.hpp"

namespace polyeuler {

/// Polylogarithm indices (k_1, ..., k_r), r >= 1. Entries may be any integer.
class KVector {
 public:
  /// Throws InvalidArgument when empty.
  explicit KVector(std::vector<int> ks);
  KVector(std::initializer_list<int> ks) : KVector(std::vector<int>(ks)) {}

  /// Comma-separated integers, e.g. "2,1,-1". Throws ParseError.
  static KVector parse(std::string_view text);

  std::size_t depth() const { return ks_.size(); }
  int operator[](std::size_t i) const { return ks_[i]; }
  const std::vector<int>& values() const { return ks_; }

  /// "(2,1,-1)"
  std::string str() const;

  friend bool operator==(const KVector&, const KVector&) = default;

 private:
  std::vector<int> ks_;
};

/// 1 / m^k as an exact rational for m >= 1 (k may be negative).
Rational inverse_power(unsigned long m, int k);

/// Li_k(z) = sum_{m>=1} z^m / m^k, truncated at z^order.
PowerSeries li_series(int k, std::size_t order);

/// Li_{(k_1..k_r)}(z) = sum over 1 <= m_1 < ... < m_r of
/// z^{m_r} / (m_1^{k_1} ... m_r^{k_r}), truncated at z^order.
PowerSeries multi_li_series(const KVector& ks, std::size_t order);

/// Li_{(k)}(inner(t)) as an exponential generating function of the given order.
/// Throws NonNilpotentInner when inner has a nonzero constant term.
Egf li_of_inner(const KVector& ks, const Egf& inner, std::size_t order);

/// The inner series 1 - e^{-lambda t} used by every family in this library.
Egf one_minus_exp(const Rational& lambda, std::size_t order);

}  // namespace polyeuler
