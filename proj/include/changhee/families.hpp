#pragma once

/**
 * Closed-form definitions of the six sequence families. None of these
 * routines touch the series oracle; the two sides stay independent so the
 * oracle-equivalence suite actually proves something.
 *
 * Order-0 conventions follow the generating functions: an order-0 factor
 * is the constant series 1, hence changhee1(n, 0) is the falling-factorial
 * polynomial (x)_n, euler(n, 0) = x^n, and daehee(n, 0) = [n == 0]. Each
 * formula below realizes this on its own; no special-casing is needed.
 */

#include <stdexcept>
#include <vector>

#include "changhee/combinatorics.hpp"
#include "changhee/family.hpp"
#include "changhee/polynomial.hpp"
#include "changhee/rational.hpp"

namespace changhee {

namespace detail {

// Classical first-order Bernoulli numbers B_0..B_n via the defining
// recurrence sum_{j<=m} C(m+1, j) B_j = [m == 0].
inline std::vector<Rational> bernoulli_row_order1(unsigned n) {
  std::vector<Rational> b(n + 1);
  b[0] = Rational(1);
  for (unsigned m = 1; m <= n; ++m) {
    Rational acc(0);
    for (unsigned j = 0; j < m; ++j)
      acc += binomial(Rational(m + 1), j) * b[j];
    b[m] = -acc / Rational(m + 1);
  }
  return b;
}

// Higher-order Bernoulli numbers as the order-fold binomial convolution of
// the order-1 row; order 0 is the convolution identity delta_{n,0}.
inline std::vector<Rational> bernoulli_row(unsigned n, unsigned order) {
  std::vector<Rational> row(n + 1, Rational(0));
  row[0] = Rational(1);
  if (order == 0) return row;
  const std::vector<Rational> b1 = bernoulli_row_order1(n);
  row = b1;
  for (unsigned a = 2; a <= order; ++a) {
    std::vector<Rational> next(n + 1, Rational(0));
    for (unsigned i = 0; i <= n; ++i)
      for (unsigned j = 0; j <= i; ++j)
        next[i] += binomial(Rational(i), j) * row[j] * b1[i - j];
    row = std::move(next);
  }
  return row;
}

// Euler numbers of order `order`: value at 0 of the degree-i polynomial,
// e_i = sum_j (-1/2)^j j! C(order+j-1, j) s2(i, j).
inline std::vector<Rational> euler_row(unsigned n, unsigned order) {
  std::vector<Rational> e(n + 1, Rational(0));
  const Rational minus_half(-1, 2);
  for (unsigned i = 0; i <= n; ++i) {
    Rational acc(0);
    for (unsigned j = 0; j <= i; ++j) {
      BigInt s = stirling2(i, j);
      if (s == 0) continue;
      acc += rational_pow(minus_half, j) * factorial(j) *
             binomial(Rational((long long)order + j - 1), j) * Rational(s);
    }
    e[i] = acc;
  }
  return e;
}

// Appell lift: p_n(x) = sum_i C(n,i) a_i x^{n-i} from the number row a.
inline Polynomial appell_from_numbers(const std::vector<Rational>& a,
                                      unsigned n) {
  std::vector<Rational> coeffs(n + 1, Rational(0));
  for (unsigned i = 0; i <= n; ++i)
    coeffs[n - i] = binomial(Rational(n), i) * a[i];
  return Polynomial(std::move(coeffs));
}

}  // namespace detail

// Euler polynomial E_n^{(order)}(x).
inline Polynomial euler(unsigned n, unsigned order) {
  return detail::appell_from_numbers(detail::euler_row(n, order), n);
}

// Bernoulli polynomial B_n^{(order)}(x).
inline Polynomial bernoulli(unsigned n, unsigned order) {
  return detail::appell_from_numbers(detail::bernoulli_row(n, order), n);
}

// First-kind Changhee polynomial of order k,
// Ch_n^{(k)}(x) = sum_i (-1)^i (n!/2^i) C(k+i-1, i) C(x, n-i).
// Degree n, monic.
inline Polynomial changhee1(unsigned n, unsigned k) {
  Polynomial acc;
  const Rational n_fact = factorial(n);
  Rational scale = n_fact;  // n! / 2^i with alternating sign
  for (unsigned i = 0; i <= n; ++i) {
    Rational c = scale * binomial(Rational((long long)k + i - 1), i);
    if (!c.is_zero()) acc += poly_binom(n - i) * c;
    scale /= Rational(-2);
  }
  return acc;
}

// First-kind Changhee numbers (order 1) by their two-term recurrence
// 2 Ch_n + n Ch_{n-1} = 0, Ch_0 = 1.
inline Rational changhee1_number_recurrence(unsigned n) {
  Rational ch(1);
  for (unsigned m = 1; m <= n; ++m) ch *= Rational(-(long long)m, 2);
  return ch;
}

// Second-kind Changhee polynomial of order k via the signed Stirling
// transform of Euler polynomials at a reflected argument:
// Ch2_n^{(k)}(x) = sum_l (-1)^l s1(n, l) E_l^{(k)}(-x).
inline Polynomial changhee2(unsigned n, unsigned k) {
  Polynomial acc;
  for (unsigned l = 0; l <= n; ++l) {
    BigInt s = stirling1(n, l);
    if (s == 0) continue;
    Rational c = l % 2 == 0 ? Rational(s) : Rational(-s);
    acc += euler(l, k).reflect_arg() * c;
  }
  return acc;
}

// Second-kind Changhee numbers, explicit double-factor form:
// Ch2_n^{(k)} = n! sum_i (-1/2)^i C(k+i-1, i) C(k, n-i).
// Redundant with changhee2(n,k) at x = 0; kept as an alternate route.
inline Rational changhee2_number_explicit(unsigned n, unsigned k) {
  Rational acc(0);
  const Rational minus_half(-1, 2);
  for (unsigned i = 0; i <= n; ++i)
    acc += rational_pow(minus_half, i) *
           binomial(Rational((long long)k + i - 1), i) *
           binomial(Rational(k), n - i);
  return acc * factorial(n);
}

// Daehee number of order k, D_n^{(k)} = s1(n+k, k) / C(n+k, k).
inline Rational daehee(unsigned n, unsigned k) {
  return Rational(stirling1(n + k, k)) / binomial(Rational(n + k), k);
}

// Daehee polynomial of order k,
// D_n^{(k)}(x) = sum_i C(n, i) D_i^{(k)} (x)_{n-i}.
inline Polynomial daehee_poly(unsigned n, unsigned k) {
  Polynomial acc;
  for (unsigned i = 0; i <= n; ++i) {
    Rational c = binomial(Rational(n), i) * daehee(i, k);
    if (!c.is_zero()) acc += falling_factorial_poly(n - i) * c;
  }
  return acc;
}

// Norlund numbers of the second kind, b_n^{(-1)} = (-1)^n / (n+1).
inline Rational norlund2(unsigned n) {
  Rational v(1, (long long)n + 1);
  return n % 2 == 0 ? v : -v;
}

// The polynomial value of one family at (n, k). norlund2 has no order or
// x-dependence, so k is ignored there; daehee dispatches to its polynomial
// form (whose value at 0 is the Daehee number).
inline Polynomial family_poly(Family family, unsigned n, unsigned k) {
  switch (family) {
    case Family::bernoulli: return bernoulli(n, k);
    case Family::euler: return euler(n, k);
    case Family::daehee: return daehee_poly(n, k);
    case Family::changhee1: return changhee1(n, k);
    case Family::changhee2: return changhee2(n, k);
    case Family::norlund2: return Polynomial(norlund2(n));
  }
  throw std::invalid_argument("family_poly: bad enum value");
}

// The number value (x = 0) of one family at (n, k).
inline Rational family_number(Family family, unsigned n, unsigned k) {
  return family_poly(family, n, k).constant_term();
}

}  // namespace changhee
