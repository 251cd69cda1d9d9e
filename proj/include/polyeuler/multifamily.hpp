#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "polyeuler/polylog.hpp"
#include "polyeuler/rational.hpp"

namespace polyeuler {

/// The a, b, c deformation parameters carried by their logarithms
/// alpha = ln a, beta = ln b, gamma = ln c. Every family here depends on
/// a, b, c only through these, so exact rationals suffice.
struct LogParams {
  Rational alpha;
  Rational beta;
  std::optional<Rational> gamma;

  /// ln(ab)
  Rational log_ab() const { return alpha + beta; }
};

/// Multi poly-Bernoulli numbers from Li_{(k)}(1-e^{-t}) / (1-e^{-t})^r.
std::vector<Rational> multi_poly_bernoulli(const KVector& ks, std::size_t order);

/// Multi poly-Euler polynomials from 2 Li_{(k)}(1-e^{-t}) / (1+e^t)^r * e^{rxt}.
/// At x = 0 these are the multi poly-Euler numbers.
std::vector<Rational> multi_poly_euler(const KVector& ks, const Rational& x, std::size_t order);

/// (a,b)-numbers: 2 Li_{(k)}(1-(ab)^{-t}) / (a^{-t}+b^t)^r. Zero sequence when alpha+beta = 0.
std::vector<Rational> multi_poly_euler_ab(const KVector& ks, const LogParams& params, std::size_t order);

/// (x;a,b)-polynomials: the (a,b) generating function times e^{rxt}.
std::vector<Rational> multi_poly_euler_xab(const KVector& ks, const Rational& x, const LogParams& params,
                                           std::size_t order);

/// 2 Li_k(1-(ab)^{-t}) / (a^{-t}+b^t) * c^{xt}. Throws InvalidArgument when gamma is absent.
std::vector<Rational> poly_euler_abc(int k, const Rational& x, const LogParams& params, std::size_t order);

// Right-hand sides of the relations between the (a,b) family and the plain
// multi poly-Euler numbers/polynomials. Each is computed only from
// multi_poly_euler / multi_poly_euler_ab / multi_poly_euler_xab values, never
// from the generating function it is compared against.

/// E_n^{(k)}(alpha/(alpha+beta)) (alpha+beta)^n. Throws DegenerateParams when alpha+beta = 0.
std::vector<Rational> scaled_argument_form(const KVector& ks, const LogParams& params, std::size_t order);

/// sum_i r^{n-i} (alpha+beta)^i alpha^{n-i} C(n,i) E_i^{(k)}.
std::vector<Rational> binomial_number_form(const KVector& ks, const LogParams& params, std::size_t order);

/// sum_i C(n,i) r^{n-i} E_i^{(k)}(a,b) x^{n-i}.
std::vector<Rational> shift_expansion_form(const KVector& ks, const Rational& x, const LogParams& params,
                                           std::size_t order);

/// Power of r in the double sum: r^{n-k} as written, or r^{n-j}, which is
/// what substituting the binomial number form into the shift expansion gives.
/// The two agree only for r = 1 or alpha = 0.
enum class RPower { NMinusK, NMinusJ };

/// sum_k sum_j r^{...} C(n,k) C(k,j) alpha^{k-j} (alpha+beta)^j E_j^{(k)} x^{n-k}.
std::vector<Rational> double_sum_form(const KVector& ks, const Rational& x, const LogParams& params,
                                      std::size_t order, RPower power = RPower::NMinusK);

/// sum_k C(n,k) r^{n-k} E_k^{(k)}(x;a,b) y^{n-k}.
std::vector<Rational> addition_form(const KVector& ks, const Rational& x, const Rational& y,
                                    const LogParams& params, std::size_t order);

/// Value of a finite explicit sum together with its term bookkeeping.
struct ExplicitSum {
  Rational value;
  std::uint64_t terms = 0;
  /// Terms dropped because a zero index met a positive exponent (1/0^k).
  std::uint64_t skipped = 0;
};

/// sum over weak compositions (c_1..c_P), P = part_cap, of r with weight
/// w = c_1 + 2c_2 + ... + P c_P of  r! / (c_1! ... c_P!) (-1)^w w^i.
Rational composition_factor(unsigned r, unsigned part_cap, unsigned i);

/// The quadruple-sum explicit formula for multi poly-Euler polynomials,
/// evaluated exactly as written with index tuples 0 <= m_1 <= ... <= m_r <= m_cap
/// and compositions capped at part_cap parts. The underlying expansion of
/// (1+e^t)^{-r} does not converge, so the value depends on both caps.
ExplicitSum multi_poly_euler_explicit(const KVector& ks, const Rational& x, unsigned n, unsigned m_cap,
                                      unsigned part_cap);

/// Multiplier of ln b in the explicit (a,b,c) sum: (m-j+i+1) or (m-j+i).
enum class LnBShift { One, Zero };

/// sum_{m=0}^{n} sum_{j=0}^{m} sum_{i=0}^{j} 2(-1)^{m-j+i} / j^k C(j,i)
///   (x gamma - (m-j+i+1) alpha - (m-j+i+shift) beta)^n.
/// j = 0 terms are skipped when k > 0. Throws InvalidArgument when gamma is absent.
ExplicitSum poly_euler_abc_explicit(int k, const Rational& x, const LogParams& params, unsigned n,
                                    LnBShift shift);

}  // namespace polyeuler
