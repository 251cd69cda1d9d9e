#include "polyeuler/multifamily.hpp"

#include <functional>

#include "polyeuler/egf.hpp"
#include "polyeuler/errors.hpp"

namespace polyeuler {

namespace {

std::vector<Rational> to_vector(const Egf& f) { return {f.coeffs().begin(), f.coeffs().end()}; }

const Rational& require_gamma(const LogParams& params) {
  if (!params.gamma) throw InvalidArgument("gamma (ln c) is required");
  return *params.gamma;
}

// 2 Li_{(k)}(1-e^{-(alpha+beta)t}) / (e^{-alpha t} + e^{beta t})^r, the common core
// of every Euler-type family. alpha = 0, beta = 1 gives the undeformed one.
Egf euler_core(const KVector& ks, const Rational& alpha, const Rational& beta, std::size_t order) {
  const Egf numer = li_of_inner(ks, one_minus_exp(alpha + beta, order), order) * Rational(2);
  const Egf base = Egf::exp_linear(-alpha, order) + Egf::exp_linear(beta, order);
  return divide(numer, pow(base, static_cast<unsigned>(ks.depth())));
}

}  // namespace

std::vector<Rational> multi_poly_bernoulli(const KVector& ks, std::size_t order) {
  const std::size_t r = ks.depth();
  const std::size_t n = order + r;
  const Egf inner = one_minus_exp(1, n);
  return to_vector(divide_shifted(li_of_inner(ks, inner, n), pow(inner, static_cast<unsigned>(r)), r));
}

std::vector<Rational> multi_poly_euler(const KVector& ks, const Rational& x, std::size_t order) {
  const Rational r(ks.depth());
  return to_vector(euler_core(ks, 0, 1, order) * Egf::exp_linear(r * x, order));
}

std::vector<Rational> multi_poly_euler_ab(const KVector& ks, const LogParams& params, std::size_t order) {
  return multi_poly_euler_xab(ks, 0, params, order);
}

std::vector<Rational> multi_poly_euler_xab(const KVector& ks, const Rational& x, const LogParams& params,
                                           std::size_t order) {
  const Rational r(ks.depth());
  return to_vector(euler_core(ks, params.alpha, params.beta, order) * Egf::exp_linear(r * x, order));
}

std::vector<Rational> poly_euler_abc(int k, const Rational& x, const LogParams& params, std::size_t order) {
  const Rational& gamma = require_gamma(params);
  return to_vector(euler_core(KVector{k}, params.alpha, params.beta, order) * Egf::exp_linear(gamma * x, order));
}

std::vector<Rational> scaled_argument_form(const KVector& ks, const LogParams& params, std::size_t order) {
  const Rational s = params.log_ab();
  if (s.is_zero()) throw DegenerateParams("ln a + ln b = 0");
  auto e = multi_poly_euler(ks, params.alpha / s, order);
  for (std::size_t n = 0; n <= order; ++n) e[n] *= s.pow(static_cast<long>(n));
  return e;
}

std::vector<Rational> binomial_number_form(const KVector& ks, const LogParams& params, std::size_t order) {
  const auto e = multi_poly_euler(ks, 0, order);
  const Rational r(ks.depth());
  const Rational s = params.log_ab();
  std::vector<Rational> out(order + 1);
  for (std::size_t n = 0; n <= order; ++n) {
    for (std::size_t i = 0; i <= n; ++i) {
      const long rest = static_cast<long>(n - i);
      out[n] += r.pow(rest) * s.pow(static_cast<long>(i)) * params.alpha.pow(rest) * Rational(binomial(n, i)) * e[i];
    }
  }
  return out;
}

std::vector<Rational> shift_expansion_form(const KVector& ks, const Rational& x, const LogParams& params,
                                           std::size_t order) {
  const auto e = multi_poly_euler_ab(ks, params, order);
  const Rational r(ks.depth());
  std::vector<Rational> out(order + 1);
  for (std::size_t n = 0; n <= order; ++n) {
    for (std::size_t i = 0; i <= n; ++i) {
      const long rest = static_cast<long>(n - i);
      out[n] += Rational(binomial(n, i)) * r.pow(rest) * e[i] * x.pow(rest);
    }
  }
  return out;
}

std::vector<Rational> double_sum_form(const KVector& ks, const Rational& x, const LogParams& params,
                                      std::size_t order, RPower power) {
  const auto e = multi_poly_euler(ks, 0, order);
  const Rational r(ks.depth());
  const Rational s = params.log_ab();
  std::vector<Rational> out(order + 1);
  for (std::size_t n = 0; n <= order; ++n) {
    for (std::size_t k = 0; k <= n; ++k) {
      const long outer_rest = static_cast<long>(n - k);
      const Rational outer = Rational(binomial(n, k)) * x.pow(outer_rest);
      for (std::size_t j = 0; j <= k; ++j) {
        const long r_exp = power == RPower::NMinusK ? outer_rest : static_cast<long>(n - j);
        out[n] += outer * r.pow(r_exp) * Rational(binomial(k, j)) * params.alpha.pow(static_cast<long>(k - j)) *
                  s.pow(static_cast<long>(j)) * e[j];
      }
    }
  }
  return out;
}

std::vector<Rational> addition_form(const KVector& ks, const Rational& x, const Rational& y,
                                    const LogParams& params, std::size_t order) {
  const auto e = multi_poly_euler_xab(ks, x, params, order);
  const Rational r(ks.depth());
  std::vector<Rational> out(order + 1);
  for (std::size_t n = 0; n <= order; ++n) {
    for (std::size_t k = 0; k <= n; ++k) {
      const long rest = static_cast<long>(n - k);
      out[n] += Rational(binomial(n, k)) * r.pow(rest) * e[k] * y.pow(rest);
    }
  }
  return out;
}

namespace {

// Visits every weak composition (c_1..c_P) of `total`, passing its weight
// sum j c_j and the multinomial total! / prod c_j!.
void for_each_composition(unsigned total, unsigned parts,
                          const std::function<void(unsigned long weight, const BigInt& multinomial)>& visit) {
  std::function<void(unsigned, unsigned, unsigned long, BigInt)> rec =
      [&](unsigned part, unsigned left, unsigned long weight, BigInt denom) {
        if (part == parts) {
          if (left == 0) visit(weight, factorial(total) / denom);
          return;
        }
        const unsigned index = part + 1;
        // The last part takes whatever remains.
        if (part + 1 == parts) {
          rec(parts, 0, weight + static_cast<unsigned long>(index) * left, denom * factorial(left));
          return;
        }
        for (unsigned c = 0; c <= left; ++c) {
          rec(part + 1, left - c, weight + static_cast<unsigned long>(index) * c, denom * factorial(c));
        }
      };
  if (parts == 0) {
    if (total == 0) visit(0, 1);
    return;
  }
  rec(0, total, 0, 1);
}

// Visits every tuple 0 <= m_1 <= ... <= m_r <= cap.
void for_each_index_tuple(std::size_t r, unsigned cap, const std::function<void(const std::vector<unsigned>&)>& visit) {
  std::vector<unsigned> m(r);
  std::function<void(std::size_t, unsigned)> rec = [&](std::size_t pos, unsigned lo) {
    if (pos == r) {
      visit(m);
      return;
    }
    for (unsigned v = lo; v <= cap; ++v) {
      m[pos] = v;
      rec(pos + 1, v);
    }
  };
  rec(0, 0);
}

}  // namespace

Rational composition_factor(unsigned r, unsigned part_cap, unsigned i) {
  Rational sum;
  for_each_composition(r, part_cap, [&](unsigned long weight, const BigInt& multinomial) {
    const Rational sign = weight % 2 == 0 ? 1 : -1;
    sum += sign * Rational(multinomial) * Rational(weight).pow(i);
  });
  return sum;
}

ExplicitSum multi_poly_euler_explicit(const KVector& ks, const Rational& x, unsigned n, unsigned m_cap,
                                      unsigned part_cap) {
  const std::size_t r = ks.depth();
  const Rational rx = Rational(r) * x;

  // The summand factors into a composition part depending on i and an index
  // part depending on n - i, so the quadruple sum is a sum of products.
  std::vector<Rational> index_part(n + 1);
  std::uint64_t index_terms = 0;
  std::uint64_t index_skipped = 0;
  for_each_index_tuple(r, m_cap, [&](const std::vector<unsigned>& m) {
    const unsigned top = m.back();
    bool degenerate = false;
    Rational weight = 1;
    for (std::size_t l = 0; l < r; ++l) {
      if (m[l] == 0) {
        if (ks[l] > 0) {
          degenerate = true;
          break;
        }
        // 1/0^k is 0^{-k}: 1 for k = 0, 0 for k < 0.
        if (ks[l] < 0) weight = 0;
      } else {
        weight *= inverse_power(m[l], ks[l]);
      }
    }
    index_terms += top + 1;
    if (degenerate) {
      index_skipped += top + 1;
      return;
    }
    if (weight.is_zero()) return;
    for (unsigned j = 0; j <= top; ++j) {
      const Rational coeff = (j % 2 == 0 ? weight : -weight) * Rational(binomial(top, j));
      const Rational base = rx - Rational(j);
      Rational power = 1;
      for (unsigned p = 0; p <= n; ++p) {
        index_part[p] += coeff * power;
        power *= base;
      }
    }
  });

  std::uint64_t compositions = 0;
  for_each_composition(static_cast<unsigned>(r), part_cap, [&](unsigned long, const BigInt&) { ++compositions; });

  ExplicitSum out;
  for (unsigned i = 0; i <= n; ++i) {
    out.value += Rational(binomial(n, i)) * composition_factor(static_cast<unsigned>(r), part_cap, i) *
                 index_part[n - i];
  }
  out.value *= Rational(2);
  out.terms = static_cast<std::uint64_t>(n + 1) * compositions * index_terms;
  out.skipped = static_cast<std::uint64_t>(n + 1) * compositions * index_skipped;
  return out;
}

ExplicitSum poly_euler_abc_explicit(int k, const Rational& x, const LogParams& params, unsigned n,
                                    LnBShift shift) {
  const Rational& gamma = require_gamma(params);
  const unsigned delta = shift == LnBShift::One ? 1 : 0;
  ExplicitSum out;
  for (unsigned m = 0; m <= n; ++m) {
    for (unsigned j = 0; j <= m; ++j) {
      for (unsigned i = 0; i <= j; ++i) {
        ++out.terms;
        Rational weight;
        if (j == 0) {
          if (k > 0) {
            ++out.skipped;
            continue;
          }
          weight = k == 0 ? 1 : 0;
        } else {
          weight = inverse_power(j, k);
        }
        const unsigned e = m - j + i;
        const Rational base = x * gamma - Rational(e + 1) * params.alpha - Rational(e + delta) * params.beta;
        const Rational sign = e % 2 == 0 ? 2 : -2;
        out.value += sign * weight * Rational(binomial(j, i)) * base.pow(n);
      }
    }
  }
  return out;
}

}  // namespace polyeuler
