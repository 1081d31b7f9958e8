#pragma once

/**
 * Truncated formal power series in t with Polynomial (in x) coefficients,
 * used as the independent generating-function oracle for every sequence
 * family. Everything here is assembled from series primitives; nothing in
 * this header calls a closed-form family formula.
 *
 * A Series carries its truncation order N and coefficients of t^0 .. t^N.
 * Binary operations truncate to the smaller operand's order. egf_coeff
 * reads value_n = n! * [t^n], the exponential-generating-function view.
 */

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "changhee/family.hpp"
#include "changhee/polynomial.hpp"
#include "changhee/rational.hpp"

namespace changhee {

class Series {
 public:
  explicit Series(std::size_t trunc)
      : coeffs_(trunc + 1, Polynomial::zero()) {}
  Series(std::size_t trunc, std::vector<Polynomial> coeffs)
      : coeffs_(std::move(coeffs)) {
    coeffs_.resize(trunc + 1, Polynomial::zero());
  }

  std::size_t trunc() const { return coeffs_.size() - 1; }

  const Polynomial& coeff(std::size_t n) const {
    if (n >= coeffs_.size())
      throw std::out_of_range("Series: coefficient beyond truncation");
    return coeffs_[n];
  }
  Polynomial& coeff(std::size_t n) {
    if (n >= coeffs_.size())
      throw std::out_of_range("Series: coefficient beyond truncation");
    return coeffs_[n];
  }

  static Series one(std::size_t trunc) {
    Series s(trunc);
    s.coeffs_[0] = Polynomial::one();
    return s;
  }

  // Restrict to a smaller truncation order.
  Series truncated(std::size_t n) const {
    if (n >= coeffs_.size()) return *this;
    return Series(n, std::vector<Polynomial>(coeffs_.begin(),
                                             coeffs_.begin() + n + 1));
  }

  friend bool operator==(const Series& a, const Series& b) {
    return a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const Series& a, const Series& b) {
    return !(a == b);
  }

 private:
  std::vector<Polynomial> coeffs_;
};

inline Series series_add(const Series& a, const Series& b) {
  std::size_t n = std::min(a.trunc(), b.trunc());
  Series out(n);
  for (std::size_t i = 0; i <= n; ++i) out.coeff(i) = a.coeff(i) + b.coeff(i);
  return out;
}

inline Series series_sub(const Series& a, const Series& b) {
  std::size_t n = std::min(a.trunc(), b.trunc());
  Series out(n);
  for (std::size_t i = 0; i <= n; ++i) out.coeff(i) = a.coeff(i) - b.coeff(i);
  return out;
}

// Cauchy product, truncated to the smaller operand order.
inline Series series_mul(const Series& a, const Series& b) {
  std::size_t n = std::min(a.trunc(), b.trunc());
  Series out(n);
  for (std::size_t i = 0; i <= n; ++i) {
    if (a.coeff(i).is_zero()) continue;
    for (std::size_t j = 0; i + j <= n; ++j) {
      if (b.coeff(j).is_zero()) continue;
      out.coeff(i + j) += a.coeff(i) * b.coeff(j);
    }
  }
  return out;
}

// Multiplicative inverse; requires a unit (nonzero constant) leading term.
inline Series series_inv(const Series& a) {
  const Polynomial& a0 = a.coeff(0);
  if (a0.is_zero() || !a0.is_constant())
    throw std::domain_error(
        "series_inv: constant term must be a nonzero rational");
  Rational inv0 = Rational(1) / a0.constant_term();
  Series out(a.trunc());
  out.coeff(0) = Polynomial(inv0);
  for (std::size_t n = 1; n <= a.trunc(); ++n) {
    Polynomial acc;
    for (std::size_t i = 1; i <= n; ++i) acc += a.coeff(i) * out.coeff(n - i);
    out.coeff(n) = -(acc * inv0);
  }
  return out;
}

// exp(a) for a series with zero constant term: sum_m a^m / m!.
// Since ord(a) >= 1, a^m only feeds t^m and beyond, so the loop is finite.
inline Series series_exp(const Series& a) {
  if (!a.coeff(0).is_zero())
    throw std::domain_error("series_exp: constant term must be zero");
  std::size_t n = a.trunc();
  Series out = Series::one(n);
  Series term = Series::one(n);
  for (std::size_t m = 1; m <= n; ++m) {
    term = series_mul(term, a);
    Rational inv_m = Rational(1) / Rational((long long)m);
    for (std::size_t i = m; i <= n; ++i) term.coeff(i) *= inv_m;
    out = series_add(out, term);
  }
  return out;
}

// log(1+t) = t - t^2/2 + t^3/3 - ...
inline Series series_log1p(std::size_t trunc) {
  Series s(trunc);
  for (std::size_t m = 1; m <= trunc; ++m) {
    Rational c = Rational(1) / Rational((long long)m);
    s.coeff(m) = Polynomial(m % 2 == 0 ? -c : c);
  }
  return s;
}

// Integer powers; negative exponents go through series_inv.
inline Series series_ipow(const Series& a, long long e) {
  if (e < 0) return series_ipow(series_inv(a), -e);
  Series acc = Series::one(a.trunc());
  Series base = a;
  auto ue = static_cast<unsigned long long>(e);
  while (ue != 0) {
    if (ue & 1) acc = series_mul(acc, base);
    base = series_mul(base, base);
    ue >>= 1;
  }
  return acc;
}

// Multiply every coefficient by one polynomial (scalar in the series ring).
inline Series series_scale(const Series& a, const Polynomial& p) {
  Series out(a.trunc());
  for (std::size_t i = 0; i <= a.trunc(); ++i) out.coeff(i) = a.coeff(i) * p;
  return out;
}

// n! * [t^n], the EGF reading of a coefficient.
inline Polynomial egf_coeff(const Series& a, std::size_t n) {
  if (n > a.trunc())
    throw std::out_of_range("egf_coeff: index beyond truncation");
  return a.coeff(n) * factorial(static_cast<unsigned>(n));
}

namespace detail {

// (1+t)^p = exp(p * log(1+t)) for a polynomial exponent p.
inline Series pow_one_plus_t(const Polynomial& p, std::size_t n) {
  return series_exp(series_scale(series_log1p(n), p));
}

// exp(p * t)
inline Series exp_t_times(const Polynomial& p, std::size_t n) {
  Series s(n);
  if (n >= 1) s.coeff(1) = p;
  return series_exp(s);
}

// (e^t - 1)/t = sum_m t^m / (m+1)!
inline Series expm1_over_t(std::size_t n) {
  Series s(n);
  for (std::size_t m = 0; m <= n; ++m)
    s.coeff(m) = Polynomial(Rational(1) / factorial(static_cast<unsigned>(m) + 1));
  return s;
}

// (e^t + 1)/2 = 1 + sum_{m>=1} t^m / (2 m!)
inline Series half_exp_plus_one(std::size_t n) {
  Series s(n);
  s.coeff(0) = Polynomial::one();
  for (std::size_t m = 1; m <= n; ++m)
    s.coeff(m) =
        Polynomial(Rational(1) / (Rational(2) * factorial(static_cast<unsigned>(m))));
  return s;
}

// log(1+t)/t = sum_m (-1)^m t^m / (m+1)
inline Series log1p_over_t(std::size_t n) {
  Series s(n);
  for (std::size_t m = 0; m <= n; ++m) {
    Rational c = Rational(1) / Rational((long long)m + 1);
    s.coeff(m) = Polynomial(m % 2 == 1 ? -c : c);
  }
  return s;
}

// (1 - e^{-t})/t = sum_m (-1)^m t^m / (m+1)!
inline Series one_minus_exp_neg_over_t(std::size_t n) {
  Series s(n);
  for (std::size_t m = 0; m <= n; ++m) {
    Rational c = Rational(1) / factorial(static_cast<unsigned>(m) + 1);
    s.coeff(m) = Polynomial(m % 2 == 1 ? -c : c);
  }
  return s;
}

// 1 + t/2
inline Series one_plus_half_t(std::size_t n) {
  Series s(n);
  s.coeff(0) = Polynomial::one();
  if (n >= 1) s.coeff(1) = Polynomial(Rational(1, 2));
  return s;
}

}  // namespace detail

/**
 * The defining generating function of one family, truncated at order N.
 * with_x selects the polynomial form; otherwise x = 0. The order-k factor
 * is raised via exact series powers, so order 0 degenerates to the
 * x-only factor (or the constant series 1).
 *
 *   bernoulli:  (t/(e^t-1))^k           * e^{x t}
 *   euler:      (2/(e^t+1))^k           * e^{x t}
 *   daehee:     (log(1+t)/t)^k          * (1+t)^x
 *   changhee1:  (2/(2+t))^k             * (1+t)^x
 *   changhee2:  (2/(2+t))^k             * (1+t)^{x+k}
 *   norlund2:   (1-e^{-t})/t                     (order and x do not apply)
 */
inline Series family_gf(Family family, unsigned order, bool with_x,
                        std::size_t n) {
  const Polynomial xp = with_x ? Polynomial::x() : Polynomial::zero();
  const long long k = order;
  switch (family) {
    case Family::bernoulli:
      return series_mul(series_ipow(detail::expm1_over_t(n), -k),
                        detail::exp_t_times(xp, n));
    case Family::euler:
      return series_mul(series_ipow(detail::half_exp_plus_one(n), -k),
                        detail::exp_t_times(xp, n));
    case Family::daehee:
      return series_mul(series_ipow(detail::log1p_over_t(n), k),
                        detail::pow_one_plus_t(xp, n));
    case Family::changhee1:
      return series_mul(series_ipow(detail::one_plus_half_t(n), -k),
                        detail::pow_one_plus_t(xp, n));
    case Family::changhee2:
      return series_mul(
          series_ipow(detail::one_plus_half_t(n), -k),
          detail::pow_one_plus_t(xp + Polynomial(Rational(k)), n));
    case Family::norlund2:
      return detail::one_minus_exp_neg_over_t(n);
  }
  throw std::invalid_argument("family_gf: bad enum value");
}

}  // namespace changhee
