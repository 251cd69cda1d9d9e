#include "polyeuler/rational.hpp"

#include <cctype>

#include "polyeuler/errors.hpp"

namespace polyeuler {

namespace {

constexpr std::string_view kUnicodeMinus = "\xE2\x88\x92";

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw InvalidArgument("rational with zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (body.starts_with('-')) {
    negative = true;
    body.remove_prefix(1);
  } else if (body.starts_with(kUnicodeMinus)) {
    negative = true;
    body.remove_prefix(kUnicodeMinus.size());
  }
  std::string_view num_text = body;
  std::string_view den_text = "1";
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    num_text = body.substr(0, slash);
    den_text = body.substr(slash + 1);
  }
  if (!all_digits(num_text) || !all_digits(den_text)) {
    throw ParseError("malformed rational '" + std::string(text) + "'");
  }
  BigInt num(std::string(num_text), 10);
  BigInt den(std::string(den_text), 10);
  if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  if (negative) num = -num;
  return Rational(num, den);
}

std::string Rational::str() const { return value_.get_str(10); }

Rational Rational::pow(long exponent) const {
  if (exponent < 0) {
    if (is_zero()) throw InvalidArgument("zero raised to a negative power");
    return Rational(1) / pow(-exponent);
  }
  Rational result;
  mpz_pow_ui(result.value_.get_num_mpz_t(), value_.get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(result.value_.get_den_mpz_t(), value_.get_den_mpz_t(), static_cast<unsigned long>(exponent));
  return result;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw InvalidArgument("division by zero");
  value_ /= o.value_;
  return *this;
}

BigInt binomial(unsigned long n, unsigned long k) {
  if (k > n) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

BigInt factorial(unsigned long n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

}  // namespace polyeuler
