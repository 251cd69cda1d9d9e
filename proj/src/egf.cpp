#include "polyeuler/egf.hpp"

#include <algorithm>
#include <string>

#include "polyeuler/errors.hpp"

namespace polyeuler {

Egf::Egf(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw InvalidArgument("series needs at least one coefficient");
}

Egf Egf::zero(std::size_t order) { return Egf(std::vector<Rational>(order + 1)); }

Egf Egf::constant(const Rational& value, std::size_t order) {
  std::vector<Rational> c(order + 1);
  c[0] = value;
  return Egf(std::move(c));
}

Egf Egf::variable(std::size_t order) {
  std::vector<Rational> c(order + 1);
  if (order >= 1) c[1] = 1;
  return Egf(std::move(c));
}

Egf Egf::exp_linear(const Rational& lambda, std::size_t order) {
  std::vector<Rational> c(order + 1);
  c[0] = 1;
  for (std::size_t n = 1; n <= order; ++n) c[n] = c[n - 1] * lambda;
  return Egf(std::move(c));
}

Egf Egf::truncated(std::size_t order) const {
  if (order > this->order()) {
    throw InvalidArgument("cannot extend a series from order " + std::to_string(this->order()) + " to " +
                          std::to_string(order));
  }
  return Egf(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(order) + 1));
}

Rational Egf::ordinary(std::size_t n) const { return coeffs_[n] / Rational(factorial(n)); }

bool Egf::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c.is_zero(); });
}

Egf& Egf::operator+=(const Egf& o) {
  coeffs_.resize(std::min(coeffs_.size(), o.coeffs_.size()));
  for (std::size_t n = 0; n < coeffs_.size(); ++n) coeffs_[n] += o.coeffs_[n];
  return *this;
}

Egf& Egf::operator-=(const Egf& o) {
  coeffs_.resize(std::min(coeffs_.size(), o.coeffs_.size()));
  for (std::size_t n = 0; n < coeffs_.size(); ++n) coeffs_[n] -= o.coeffs_[n];
  return *this;
}

Egf& Egf::operator*=(const Rational& s) {
  for (auto& c : coeffs_) c *= s;
  return *this;
}

Egf operator*(const Egf& a, const Egf& b) {
  const std::size_t order = std::min(a.order(), b.order());
  std::vector<Rational> c(order + 1);
  for (std::size_t n = 0; n <= order; ++n) {
    Rational sum;
    for (std::size_t i = 0; i <= n; ++i) {
      if (a[i].is_zero() || b[n - i].is_zero()) continue;
      sum += Rational(binomial(n, i)) * a[i] * b[n - i];
    }
    c[n] = std::move(sum);
  }
  return Egf(std::move(c));
}

PowerSeries::PowerSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw InvalidArgument("series needs at least one coefficient");
}

std::size_t PowerSeries::valuation() const {
  for (std::size_t m = 0; m < coeffs_.size(); ++m) {
    if (!coeffs_[m].is_zero()) return m;
  }
  return coeffs_.size();
}

Egf divide(const Egf& f, const Egf& g) {
  if (g[0].is_zero()) throw DivisionByNonUnit("divisor has zero constant term");
  const std::size_t order = std::min(f.order(), g.order());
  std::vector<Rational> h(order + 1);
  for (std::size_t n = 0; n <= order; ++n) {
    Rational acc = f[n];
    for (std::size_t i = 0; i < n; ++i) {
      if (g[n - i].is_zero() || h[i].is_zero()) continue;
      acc -= Rational(binomial(n, i)) * h[i] * g[n - i];
    }
    h[n] = acc / g[0];
  }
  return Egf(std::move(h));
}

namespace {

// Egf of f / t^shift. Requires c_j(f) = 0 for j < shift.
Egf drop_leading(const Egf& f, std::size_t order, std::size_t shift) {
  std::vector<Rational> c(order + 1);
  for (std::size_t n = 0; n <= order; ++n) {
    // n! / (n+shift)!  =  1 / ((n+1)(n+2)...(n+shift))
    BigInt rising = 1;
    for (std::size_t j = 1; j <= shift; ++j) rising *= static_cast<unsigned long>(n + j);
    c[n] = f[n + shift] / Rational(rising);
  }
  return Egf(std::move(c));
}

}  // namespace

Egf divide_shifted(const Egf& f, const Egf& g, std::size_t shift) {
  const std::size_t common = std::min(f.order(), g.order());
  if (common < shift) {
    throw InsufficientVanishing("order " + std::to_string(common) + " is below the shift " + std::to_string(shift));
  }
  for (std::size_t j = 0; j < shift; ++j) {
    if (!f[j].is_zero() || !g[j].is_zero()) {
      throw InsufficientVanishing("coefficient " + std::to_string(j) + " does not vanish before shift " +
                                  std::to_string(shift));
    }
  }
  if (g[shift].is_zero()) {
    throw InsufficientVanishing("divisor vanishes beyond the shift " + std::to_string(shift));
  }
  const std::size_t order = common - shift;
  return divide(drop_leading(f, order, shift), drop_leading(g, order, shift));
}

Egf compose(const PowerSeries& outer, const Egf& inner) {
  if (!inner[0].is_zero()) throw NonNilpotentInner("inner series has a nonzero constant term");
  const std::size_t order = std::min(outer.order(), inner.order());
  const Egf g = inner.truncated(order);
  // Horner from the top: terms a_m g^m with m > order vanish to order > order.
  Egf acc = Egf::constant(outer[order], order);
  for (std::size_t m = order; m-- > 0;) {
    acc = acc * g;
    acc = acc + Egf::constant(outer[m], order);
  }
  return acc;
}

Egf compose(const Egf& outer, const Egf& inner) {
  std::vector<Rational> ordinary(outer.order() + 1);
  for (std::size_t m = 0; m <= outer.order(); ++m) ordinary[m] = outer.ordinary(m);
  return compose(PowerSeries(std::move(ordinary)), inner);
}

Egf pow(const Egf& f, unsigned r) {
  Egf result = Egf::constant(1, f.order());
  for (unsigned i = 0; i < r; ++i) result = result * f;
  return result;
}

}  // namespace polyeuler
