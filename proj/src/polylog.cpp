#include "polyeuler/polylog.hpp"

#include <charconv>
#include <sstream>
#include <string>

#include "polyeuler/errors.hpp"

namespace polyeuler {

KVector::KVector(std::vector<int> ks) : ks_(std::move(ks)) {
  if (ks_.empty()) throw InvalidArgument("index vector needs at least one entry");
}

KVector KVector::parse(std::string_view text) {
  std::vector<int> ks;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = std::min(text.find(',', start), text.size());
    std::string_view item = text.substr(start, comma - start);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    int value = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (item.empty() || ec != std::errc() || ptr != item.data() + item.size()) {
      throw ParseError("malformed index list '" + std::string(text) + "'");
    }
    ks.push_back(value);
    start = comma + 1;
  }
  return KVector(std::move(ks));
}

std::string KVector::str() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < ks_.size(); ++i) os << (i ? "," : "") << ks_[i];
  os << ')';
  return os.str();
}

Rational inverse_power(unsigned long m, int k) { return Rational(m).pow(-static_cast<long>(k)); }

PowerSeries li_series(int k, std::size_t order) { return multi_li_series(KVector{k}, order); }

PowerSeries multi_li_series(const KVector& ks, std::size_t order) {
  // level[m] holds the partial nested sum whose last index equals m.
  std::vector<Rational> level(order + 1);
  for (std::size_t m = 1; m <= order; ++m) level[m] = inverse_power(m, ks[0]);
  for (std::size_t d = 1; d < ks.depth(); ++d) {
    std::vector<Rational> next(order + 1);
    Rational prefix;  // sum of level[m'] over m' < m
    for (std::size_t m = 1; m <= order; ++m) {
      if (!prefix.is_zero()) next[m] = prefix * inverse_power(m, ks[d]);
      prefix += level[m];
    }
    level = std::move(next);
  }
  return PowerSeries(std::move(level));
}

Egf li_of_inner(const KVector& ks, const Egf& inner, std::size_t order) {
  if (!inner[0].is_zero()) throw NonNilpotentInner("inner series has a nonzero constant term");
  return compose(multi_li_series(ks, order), inner);
}

Egf one_minus_exp(const Rational& lambda, std::size_t order) {
  return Egf::constant(1, order) - Egf::exp_linear(-lambda, order);
}

}  // namespace polyeuler
