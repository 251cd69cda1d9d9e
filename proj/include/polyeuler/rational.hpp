#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <ostream>
#include <string>
#include <string_view>

namespace polyeuler {

using BigInt = mpz_class;

/// Exact rational number, always kept in lowest terms with a positive
/// denominator.
class Rational {
 public:
  Rational() = default;

  template <std::integral T>
  Rational(T value) : value_(static_cast<long>(value)) {}  // NOLINT(google-explicit-constructor)

  Rational(const BigInt& value) : value_(value) {}  // NOLINT(google-explicit-constructor)

  /// Throws InvalidArgument when `den` is zero.
  Rational(const BigInt& num, const BigInt& den);

  /// Accepts `[-]digits[/digits]`; the minus may also be U+2212.
  static Rational parse(std::string_view text);

  /// Canonical text form, e.g. "-3/4" or "5".
  std::string str() const;

  BigInt numerator() const { return value_.get_num(); }
  BigInt denominator() const { return value_.get_den(); }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  /// Integer power; negative exponents invert (throws on 0^negative).
  /// 0^0 is 1.
  Rational pow(long exponent) const;

  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) {
    Rational r;
    r.value_ = -a.value_;
    return r;
  }

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.value_, b.value_) == 0; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    return cmp(a.value_, b.value_) <=> 0;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

  const mpq_class& raw() const { return value_; }

 private:
  mpq_class value_;
};

/// C(n, k) as an exact integer; zero when k > n.
BigInt binomial(unsigned long n, unsigned long k);

BigInt factorial(unsigned long n);

}  // namespace polyeuler
