#pragma once

/**
 * The identity catalog and its verifier.
 *
 * Each registered identity carries a stable id (I-* scalar, M-* matrix,
 * P-* cross-route property), an ASCII statement of the formula, a domain
 * predicate over the (n, k) grid, and two independent evaluators. The
 * verifier compares sides by exact polynomial equality and reports every
 * in-domain mismatch, sorted by (n, k).
 *
 * expected_status records how a formula behaves: `pass` identities must
 * hold everywhere on their domain, `flagged` ones are transcribed with a
 * known defect and must keep producing their counterexamples. Each flagged
 * entry has a corrected twin registered right after it.
 *
 * Matrix identities are evaluated as genuine matrix products over the full
 * grid, and the suite cross-checks each matrix outcome against its scalar
 * counterpart on the same grid.
 */

#include <atomic>
#include <chrono>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "changhee/combinatorics.hpp"
#include "changhee/families.hpp"
#include "changhee/family.hpp"
#include "changhee/matrix.hpp"
#include "changhee/polynomial.hpp"
#include "changhee/rational.hpp"
#include "changhee/series.hpp"

namespace changhee {

enum class ExpectedStatus { pass, flagged };

inline const char* expected_status_name(ExpectedStatus s) {
  return s == ExpectedStatus::pass ? "pass" : "flagged";
}

enum class MatrixVariant { numbers, polynomials, at_negative_x, at_shifted_x };

inline const char* matrix_variant_name(MatrixVariant v) {
  switch (v) {
    case MatrixVariant::numbers: return "numbers";
    case MatrixVariant::polynomials: return "polynomials";
    case MatrixVariant::at_negative_x: return "at-negative-x";
    case MatrixVariant::at_shifted_x: return "at-shifted-x";
  }
  throw std::invalid_argument("matrix_variant_name: bad enum value");
}

inline MatrixVariant matrix_variant_from_string(const std::string& s) {
  if (s == "numbers") return MatrixVariant::numbers;
  if (s == "polynomials") return MatrixVariant::polynomials;
  if (s == "at-negative-x") return MatrixVariant::at_negative_x;
  if (s == "at-shifted-x") return MatrixVariant::at_shifted_x;
  throw std::invalid_argument("unknown matrix variant '" + s + "'");
}

/**
 * Named matrices. Structural matrices (the variant does not apply):
 *   S1        signed Stirling numbers of the first kind, s1(i, j)
 *   S2        Stirling numbers of the second kind, s2(i, j)
 *   SIGN_DIAG diagonal (-1)^i
 *   FACT_DIAG diagonal (-1)^i / i!
 *   CFRAC     C(i-1, i-j)/j! below row 0; row 0 is identically zero
 * Family matrices (CH1, CH2, EULER, BERNOULLI, DAEHEE) place the family
 * value at row n, column k, shaped by the variant: numbers (x = 0),
 * polynomials, at-negative-x (x -> -x), at-shifted-x (x -> x + k).
 */
inline Mat build_matrix(const std::string& name, std::size_t rows,
                        std::size_t cols, MatrixVariant variant) {
  Mat m(rows, cols);
  if (name == "S1" || name == "S2") {
    const bool first = name == "S1";
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) {
        BigInt v = first ? stirling1(static_cast<unsigned>(i),
                                     static_cast<unsigned>(j))
                         : stirling2(static_cast<unsigned>(i),
                                     static_cast<unsigned>(j));
        if (v != 0) m.at(i, j) = Polynomial(Rational(std::move(v)));
      }
    return m;
  }
  if (name == "SIGN_DIAG" || name == "FACT_DIAG") {
    for (std::size_t i = 0; i < rows && i < cols; ++i) {
      Rational v = i % 2 == 0 ? Rational(1) : Rational(-1);
      if (name == "FACT_DIAG") v /= factorial(static_cast<unsigned>(i));
      m.at(i, i) = Polynomial(v);
    }
    return m;
  }
  if (name == "CFRAC") {
    for (std::size_t i = 1; i < rows; ++i)
      for (std::size_t j = 0; j < cols && j <= i; ++j) {
        Rational v = binomial(Rational((long long)i - 1),
                              static_cast<unsigned>(i - j)) /
                     factorial(static_cast<unsigned>(j));
        if (!v.is_zero()) m.at(i, j) = Polynomial(v);
      }
    return m;
  }

  Family family;
  if (name == "CH1") family = Family::changhee1;
  else if (name == "CH2") family = Family::changhee2;
  else if (name == "EULER") family = Family::euler;
  else if (name == "BERNOULLI") family = Family::bernoulli;
  else if (name == "DAEHEE") family = Family::daehee;
  else throw std::invalid_argument("unknown matrix name '" + name + "'");

  for (std::size_t n = 0; n < rows; ++n)
    for (std::size_t k = 0; k < cols; ++k) {
      Polynomial p = family_poly(family, static_cast<unsigned>(n),
                                 static_cast<unsigned>(k));
      switch (variant) {
        case MatrixVariant::numbers:
          p = Polynomial(p.constant_term());
          break;
        case MatrixVariant::polynomials:
          break;
        case MatrixVariant::at_negative_x:
          p = p.reflect_arg();
          break;
        case MatrixVariant::at_shifted_x:
          p = p.shift_arg(Rational((long long)k));
          break;
      }
      m.at(n, k) = std::move(p);
    }
  return m;
}

struct Counterexample {
  unsigned n;
  unsigned k;
  std::string lhs;
  std::string rhs;
};

struct IdentityDescriptor {
  using Domain = std::function<bool(unsigned, unsigned)>;
  using Eval = std::function<Polynomial(unsigned, unsigned)>;
  using MatBuild = std::function<Mat(unsigned, unsigned)>;

  std::string id;
  std::string anchor;  // ASCII statement of the formula
  ExpectedStatus expected = ExpectedStatus::pass;
  Domain domain;
  Eval lhs, rhs;          // scalar form
  MatBuild mat_lhs, mat_rhs;  // matrix form (lhs/rhs above unused)
  std::string scalar_peer;    // matrix identities: the I-* with equal outcome

  bool is_matrix() const { return static_cast<bool>(mat_lhs); }
};

struct IdentityReport {
  std::string id;
  ExpectedStatus expected = ExpectedStatus::pass;
  unsigned n_max = 0;
  unsigned k_max = 0;
  bool vacuous = false;  // no grid point satisfied the domain
  bool passed = false;   // no counterexamples found
  std::vector<Counterexample> counterexamples;  // sorted by (n, k)
  std::chrono::microseconds elapsed{0};  // in-memory only, never serialized

  // A report behaves when its outcome matches the recorded expectation;
  // vacuous runs cannot witness either way and count as behaved.
  bool behaved() const {
    if (vacuous) return true;
    return expected == ExpectedStatus::pass ? passed : !passed;
  }
};

struct SuiteReport {
  unsigned n_max = 0;
  unsigned k_max = 0;
  std::vector<IdentityReport> reports;  // registry order
  // Matrix identities whose outcome disagreed with their scalar peer.
  std::vector<std::pair<std::string, std::string>> cross_mismatches;
  unsigned cross_pairs_checked = 0;

  bool all_behaved() const {
    for (const auto& r : reports)
      if (!r.behaved()) return false;
    return true;
  }
  bool ok() const { return all_behaved() && cross_mismatches.empty(); }
  unsigned deviations() const {
    unsigned d = 0;
    for (const auto& r : reports)
      if (!r.behaved()) ++d;
    return d;
  }
};

namespace detail {

inline Rational sign_pow(unsigned n) {
  return n % 2 == 0 ? Rational(1) : Rational(-1);
}

inline Rational pow2(unsigned n) { return rational_pow(Rational(2), n); }

inline Rational stirling1_r(unsigned n, unsigned l) {
  return Rational(stirling1(n, l));
}
inline Rational stirling2_r(unsigned n, unsigned l) {
  return Rational(stirling2(n, l));
}

// Oracle side: n! * [t^n] of the family's generating function.
inline Polynomial oracle_value(Family f, unsigned n, unsigned k, bool with_x) {
  return egf_coeff(family_gf(f, k, with_x, n), n);
}

inline std::vector<IdentityDescriptor> make_registry() {
  using D = IdentityDescriptor;
  std::vector<D> reg;
  reg.reserve(48);

  const D::Domain everywhere = [](unsigned, unsigned) { return true; };
  const D::Domain order_one = [](unsigned, unsigned k) { return k == 1; };
  const D::Domain k_positive = [](unsigned, unsigned k) { return k >= 1; };
  const D::Domain n_positive = [](unsigned n, unsigned) { return n >= 1; };

  auto add_scalar = [&reg](std::string id, std::string anchor,
                           ExpectedStatus expected, D::Domain domain,
                           D::Eval lhs, D::Eval rhs) {
    D d;
    d.id = std::move(id);
    d.anchor = std::move(anchor);
    d.expected = expected;
    d.domain = std::move(domain);
    d.lhs = std::move(lhs);
    d.rhs = std::move(rhs);
    reg.push_back(std::move(d));
  };
  auto add_matrix = [&reg](std::string id, std::string anchor,
                           D::Domain domain, D::MatBuild lhs, D::MatBuild rhs,
                           std::string peer) {
    D d;
    d.id = std::move(id);
    d.anchor = std::move(anchor);
    d.expected = ExpectedStatus::pass;
    d.domain = std::move(domain);
    d.mat_lhs = std::move(lhs);
    d.mat_rhs = std::move(rhs);
    d.scalar_peer = std::move(peer);
    reg.push_back(std::move(d));
  };

  add_scalar(
      "I-2.1", "2^n Ch_n^(k) = (-1)^n (k+n-1)_n", ExpectedStatus::pass,
      everywhere,
      [](unsigned n, unsigned k) {
        return Polynomial(pow2(n) * changhee1(n, k).constant_term());
      },
      [](unsigned n, unsigned k) {
        return Polynomial(sign_pow(n) * falling_factorial(
                                            Rational((long long)k + n - 1), n));
      });

  add_scalar(
      "I-2.2", "D_n^(k) = s1(n+k, k) / C(n+k, k)", ExpectedStatus::pass,
      everywhere,
      [](unsigned n, unsigned k) {
        return oracle_value(Family::daehee, n, k, false);
      },
      [](unsigned n, unsigned k) { return Polynomial(daehee(n, k)); });

  add_scalar(
      "I-2.3-asprinted",
      "2^n Ch_n^(k) = (-1)^n sum_{l<=n} C(n,l) n^l D_{n-l}^(l)",
      ExpectedStatus::flagged, everywhere,
      [](unsigned n, unsigned k) {
        return Polynomial(pow2(n) * changhee1(n, k).constant_term());
      },
      [](unsigned n, unsigned) {
        Rational acc(0);
        for (unsigned l = 0; l <= n; ++l)
          acc += binomial(Rational(n), l) *
                 rational_pow(Rational((long long)n), l) * daehee(n - l, l);
        return Polynomial(sign_pow(n) * acc);
      });

  add_scalar(
      "I-2.3-corrected",
      "2^n Ch_n^(k) = (-1)^n sum_{l<=n} C(n,l) (k+n-1)^l D_{n-l}^(l)",
      ExpectedStatus::pass, everywhere,
      [](unsigned n, unsigned k) {
        return Polynomial(pow2(n) * changhee1(n, k).constant_term());
      },
      [](unsigned n, unsigned k) {
        Rational acc(0);
        for (unsigned l = 0; l <= n; ++l)
          acc += binomial(Rational(n), l) *
                 rational_pow(Rational((long long)k + n - 1), l) *
                 daehee(n - l, l);
        return Polynomial(sign_pow(n) * acc);
      });

  add_scalar(
      "I-2.4", "Ch_n = (-1)^n n! / 2^n", ExpectedStatus::pass, order_one,
      [](unsigned n, unsigned) {
        return Polynomial(changhee1(n, 1).constant_term());
      },
      [](unsigned n, unsigned) {
        return Polynomial(sign_pow(n) * factorial(n) / pow2(n));
      });

  add_scalar(
      "I-2.5", "D_n = (2^n / (n+1)) Ch_n", ExpectedStatus::pass, order_one,
      [](unsigned n, unsigned) { return Polynomial(daehee(n, 1)); },
      [](unsigned n, unsigned) {
        return Polynomial(pow2(n) / Rational((long long)n + 1) *
                          changhee1_number_recurrence(n));
      });

  add_scalar(
      "I-2.6", "2 Ch_n + n Ch_{n-1} = 0", ExpectedStatus::pass,
      [](unsigned n, unsigned k) { return k == 1 && n >= 1; },
      [](unsigned n, unsigned) {
        Rational acc = Rational(2) * changhee1(n, 1).constant_term() +
                       Rational((long long)n) *
                           changhee1(n - 1, 1).constant_term();
        return Polynomial(acc);
      },
      [](unsigned, unsigned) { return Polynomial(); });

  add_scalar(
      "I-2.7", "b_n^(-1) = (-1)^n / (n+1)", ExpectedStatus::pass, order_one,
      [](unsigned n, unsigned) {
        return oracle_value(Family::norlund2, n, 0, false);
      },
      [](unsigned n, unsigned) { return Polynomial(norlund2(n)); });

  add_scalar(
      "I-2.8", "Ch_n = ((n+1)! / 2^n) b_n^(-1)", ExpectedStatus::pass,
      order_one,
      [](unsigned n, unsigned) {
        return Polynomial(changhee1(n, 1).constant_term());
      },
      [](unsigned n, unsigned) {
        return Polynomial(factorial(n + 1) / pow2(n) * norlund2(n));
      });

  add_scalar(
      "I-2.9", "Ch_n^(k) = sum_l s1(n,l) E_l^(k)", ExpectedStatus::pass,
      everywhere,
      [](unsigned n, unsigned k) {
        return Polynomial(changhee1(n, k).constant_term());
      },
      [](unsigned n, unsigned k) {
        Rational acc(0);
        for (unsigned l = 0; l <= n; ++l)
          acc += stirling1_r(n, l) * euler(l, k).constant_term();
        return Polynomial(acc);
      });

  add_scalar(
      "I-2.11-asprinted", "E_m^(k) = sum_{n<=m} Ch_n^(k) s2(n,m)",
      ExpectedStatus::flagged, everywhere,
      [](unsigned m, unsigned k) {
        return Polynomial(euler(m, k).constant_term());
      },
      [](unsigned m, unsigned k) {
        Rational acc(0);
        for (unsigned n = 0; n <= m; ++n)
          acc += changhee1(n, k).constant_term() * stirling2_r(n, m);
        return Polynomial(acc);
      });

  add_scalar(
      "I-2.11-corrected", "E_m^(k) = sum_{n<=m} s2(m,n) Ch_n^(k)",
      ExpectedStatus::pass, everywhere,
      [](unsigned m, unsigned k) {
        return Polynomial(euler(m, k).constant_term());
      },
      [](unsigned m, unsigned k) {
        Rational acc(0);
        for (unsigned n = 0; n <= m; ++n)
          acc += stirling2_r(m, n) * changhee1(n, k).constant_term();
        return Polynomial(acc);
      });

  add_scalar(
      "I-2.14", "Ch_n(x) = sum_i (-1)^i (n!/2^i) C(x, n-i)",
      ExpectedStatus::pass, order_one,
      [](unsigned n, unsigned) {
        return oracle_value(Family::changhee1, n, 1, true);
      },
      [](unsigned n, unsigned) {
        Polynomial acc;
        Rational c = factorial(n);
        for (unsigned i = 0; i <= n; ++i) {
          acc += poly_binom(n - i) * c;
          c /= Rational(-2);
        }
        return acc;
      });

  add_scalar(
      "I-2.17", "Ch_n^(k)(x) = sum_i (-1)^i (n!/2^i) C(k+i-1,i) C(x, n-i)",
      ExpectedStatus::pass, everywhere,
      [](unsigned n, unsigned k) {
        return oracle_value(Family::changhee1, n, k, true);
      },
      [](unsigned n, unsigned k) { return changhee1(n, k); });

  add_scalar(
      "I-2.20", "Ch_n^(k)(x) = sum_l s1(n,l) E_l^(k)(x)", ExpectedStatus::pass,
      everywhere,
      [](unsigned n, unsigned k) { return changhee1(n, k); },
      [](unsigned n, unsigned k) {
        Polynomial acc;
        for (unsigned l = 0; l <= n; ++l) {
          Rational c = stirling1_r(n, l);
          if (!c.is_zero()) acc += euler(l, k) * c;
        }
        return acc;
      });

  add_scalar(
      "I-2.22", "E_m^(k)(x) = sum_n s2(m,n) Ch_n^(k)(x)", ExpectedStatus::pass,
      everywhere,
      [](unsigned m, unsigned k) { return euler(m, k); },
      [](unsigned m, unsigned k) {
        Polynomial acc;
        for (unsigned n = 0; n <= m; ++n) {
          Rational c = stirling2_r(m, n);
          if (!c.is_zero()) acc += changhee1(n, k) * c;
        }
        return acc;
      });

  add_scalar(
      "I-2.24-asprinted", "(x)_n = sum_l C(n,l) D_{n-k}^(l) x^l",
      ExpectedStatus::flagged,
      [](unsigned n, unsigned k) { return n >= k; },
      [](unsigned n, unsigned) { return falling_factorial_poly(n); },
      [](unsigned n, unsigned k) {
        Polynomial acc;
        for (unsigned l = 0; l <= n; ++l) {
          Rational c = binomial(Rational(n), l) * daehee(n - k, l);
          acc += Polynomial::monomial(c, l);
        }
        return acc;
      });

  add_scalar(
      "I-2.24-corrected", "(x)_n = sum_l C(n,l) D_{n-l}^(l) x^l",
      ExpectedStatus::pass, everywhere,
      [](unsigned n, unsigned) { return falling_factorial_poly(n); },
      [](unsigned n, unsigned) {
        Polynomial acc;
        for (unsigned l = 0; l <= n; ++l) {
          Rational c = binomial(Rational(n), l) * daehee(n - l, l);
          acc += Polynomial::monomial(c, l);
        }
        return acc;
      });

  add_scalar(
      "I-2.25", "Ch_n^(k)(x) = sum_l C(n,l) D_{n-l}^(l) E_l^(k)(x)",
      ExpectedStatus::pass, everywhere,
      [](unsigned n, unsigned k) { return changhee1(n, k); },
      [](unsigned n, unsigned k) {
        Polynomial acc;
        for (unsigned l = 0; l <= n; ++l) {
          Rational c = binomial(Rational(n), l) * daehee(n - l, l);
          if (!c.is_zero()) acc += euler(l, k) * c;
        }
        return acc;
      });

  add_scalar(
      "I-2.26", "D_{n-k}^(k) = sum_m s1(n-k,m) B_m^(k)", ExpectedStatus::pass,
      [](unsigned n, unsigned k) { return n >= k; },
      [](unsigned n, unsigned k) { return Polynomial(daehee(n - k, k)); },
      [](unsigned n, unsigned k) {
        Rational acc(0);
        for (unsigned m = 0; m <= n - k; ++m)
          acc += stirling1_r(n - k, m) * bernoulli(m, k).constant_term();
        return Polynomial(acc);
      });

  add_scalar(
      "I-2.27",
      "Ch_n^(k)(x) = sum_l sum_m C(n,l) s1(n-l,m) B_m^(l) E_l^(k)(x)",
      ExpectedStatus::pass, everywhere,
      [](unsigned n, unsigned k) { return changhee1(n, k); },
      [](unsigned n, unsigned k) {
        Polynomial acc;
        for (unsigned l = 0; l <= n; ++l) {
          Rational inner(0);
          for (unsigned m = 0; m <= n - l; ++m) {
            Rational c = stirling1_r(n - l, m);
            if (!c.is_zero()) inner += c * bernoulli(m, l).constant_term();
          }
          Rational c = binomial(Rational(n), l) * inner;
          if (!c.is_zero()) acc += euler(l, k) * c;
        }
        return acc;
      });

  add_scalar(
      "I-3.2", "Ch2_n^(k) = sum_l (-1)^l s1(n,l) E_l^(k)",
      ExpectedStatus::pass, everywhere,
      [](unsigned n, unsigned k) {
        return oracle_value(Family::changhee2, n, k, false);
      },
      [](unsigned n, unsigned k) {
        Rational acc(0);
        for (unsigned l = 0; l <= n; ++l)
          acc += sign_pow(l) * stirling1_r(n, l) * euler(l, k).constant_term();
        return Polynomial(acc);
      });

  add_scalar(
      "I-3.5", "Ch2_n^(k) = n! sum_i (-1/2)^i C(k+i-1,i) C(k, n-i)",
      ExpectedStatus::pass, everywhere,
      [](unsigned n, unsigned k) {
        return Polynomial(changhee2(n, k).constant_term());
      },
      [](unsigned n, unsigned k) {
        return Polynomial(changhee2_number_explicit(n, k));
      });

  add_scalar(
      "I-3.6", "E_m^(k)(k) = sum_n s2(m,n) Ch2_n^(k)", ExpectedStatus::pass,
      everywhere,
      [](unsigned m, unsigned k) {
        return Polynomial(euler(m, k).eval(Rational((long long)k)));
      },
      [](unsigned m, unsigned k) {
        Rational acc(0);
        for (unsigned n = 0; n <= m; ++n)
          acc += stirling2_r(m, n) * changhee2(n, k).constant_term();
        return Polynomial(acc);
      });

  add_scalar(
      "I-3.9", "Ch2_n^(k)(x) = sum_l (-1)^l s1(n,l) E_l^(k)(-x)",
      ExpectedStatus::pass, everywhere,
      [](unsigned n, unsigned k) {
        return oracle_value(Family::changhee2, n, k, true);
      },
      [](unsigned n, unsigned k) { return changhee2(n, k); });

  add_scalar(
      "I-3.11", "E_m^(k)(x+k) = sum_n s2(m,n) Ch2_n^(k)(x)",
      ExpectedStatus::pass, everywhere,
      [](unsigned m, unsigned k) {
        return euler(m, k).shift_arg(Rational((long long)k));
      },
      [](unsigned m, unsigned k) {
        Polynomial acc;
        for (unsigned n = 0; n <= m; ++n) {
          Rational c = stirling2_r(m, n);
          if (!c.is_zero()) acc += changhee2(n, k) * c;
        }
        return acc;
      });

  add_scalar(
      "I-3.13",
      "((-1)^n/n!) Ch2_n^(k)(x) = sum_{m=1}^n (C(n-1,n-m)/m!) Ch_m^(k)(-x)",
      ExpectedStatus::pass, n_positive,
      [](unsigned n, unsigned k) {
        return changhee2(n, k) * (sign_pow(n) / factorial(n));
      },
      [](unsigned n, unsigned k) {
        Polynomial acc;
        for (unsigned m = 1; m <= n; ++m) {
          Rational c = binomial(Rational((long long)n - 1), n - m) /
                       factorial(m);
          if (!c.is_zero()) acc += changhee1(m, k).reflect_arg() * c;
        }
        return acc;
      });

  add_scalar(
      "I-3.15",
      "((-1)^n/n!) Ch_n^(k)(x) = sum_{m=1}^n (C(n-1,n-m)/m!) Ch2_m^(k)(-x)",
      ExpectedStatus::pass, n_positive,
      [](unsigned n, unsigned k) {
        return changhee1(n, k) * (sign_pow(n) / factorial(n));
      },
      [](unsigned n, unsigned k) {
        Polynomial acc;
        for (unsigned m = 1; m <= n; ++m) {
          Rational c = binomial(Rational((long long)n - 1), n - m) /
                       factorial(m);
          if (!c.is_zero()) acc += changhee2(m, k).reflect_arg() * c;
        }
        return acc;
      });

  add_scalar(
      "I-3.18", "Ch2_j^(k)(x) = sum_n C(j,n) (k)_{j-n} Ch_n^(k)(x)",
      ExpectedStatus::pass, everywhere,
      [](unsigned j, unsigned k) { return changhee2(j, k); },
      [](unsigned j, unsigned k) {
        Polynomial acc;
        for (unsigned n = 0; n <= j; ++n) {
          Rational c = binomial(Rational(j), n) *
                       falling_factorial(Rational((long long)k), j - n);
          if (!c.is_zero()) acc += changhee1(n, k) * c;
        }
        return acc;
      });

  add_scalar(
      "I-3.20", "Ch2_j^(k) = sum_n C(j,n) (k)_{j-n} Ch_n^(k)",
      ExpectedStatus::pass, everywhere,
      [](unsigned j, unsigned k) {
        return Polynomial(changhee2(j, k).constant_term());
      },
      [](unsigned j, unsigned k) {
        Rational acc(0);
        for (unsigned n = 0; n <= j; ++n)
          acc += binomial(Rational(j), n) *
                 falling_factorial(Rational((long long)k), j - n) *
                 changhee1(n, k).constant_term();
        return Polynomial(acc);
      });

  add_scalar(
      "I-3.21", "Ch2_m(x) = sum_n C(m,n) (1)_{m-n} Ch_n(x)",
      ExpectedStatus::pass, order_one,
      [](unsigned m, unsigned) { return changhee2(m, 1); },
      [](unsigned m, unsigned) {
        Polynomial acc;
        for (unsigned n = 0; n <= m; ++n) {
          Rational c = binomial(Rational(m), n) *
                       falling_factorial(Rational(1), m - n);
          if (!c.is_zero()) acc += changhee1(n, 1) * c;
        }
        return acc;
      });

  add_scalar(
      "I-3.23",
      "Ch_m^(k)(x) = sum_n (-1)^(m-n) C(m,n) (k+m-n-1)_{m-n} Ch2_n^(k)(x)",
      ExpectedStatus::pass, k_positive,
      [](unsigned m, unsigned k) { return changhee1(m, k); },
      [](unsigned m, unsigned k) {
        Polynomial acc;
        for (unsigned n = 0; n <= m; ++n) {
          Rational c =
              sign_pow(m - n) * binomial(Rational(m), n) *
              falling_factorial(Rational((long long)k + m - n - 1), m - n);
          if (!c.is_zero()) acc += changhee2(n, k) * c;
        }
        return acc;
      });

  add_scalar(
      "I-3.25", "Ch_m^(k) = sum_n (-1)^(m-n) C(m,n) (k+m-n-1)_{m-n} Ch2_n^(k)",
      ExpectedStatus::pass, k_positive,
      [](unsigned m, unsigned k) {
        return Polynomial(changhee1(m, k).constant_term());
      },
      [](unsigned m, unsigned k) {
        Rational acc(0);
        for (unsigned n = 0; n <= m; ++n)
          acc += sign_pow(m - n) * binomial(Rational(m), n) *
                 falling_factorial(Rational((long long)k + m - n - 1), m - n) *
                 changhee2(n, k).constant_term();
        return Polynomial(acc);
      });

  add_scalar(
      "I-3.26", "Ch_m = sum_n (-1)^(m-n) (m!/n!) Ch2_n", ExpectedStatus::pass,
      order_one,
      [](unsigned m, unsigned) {
        return Polynomial(changhee1(m, 1).constant_term());
      },
      [](unsigned m, unsigned) {
        Rational acc(0);
        for (unsigned n = 0; n <= m; ++n)
          acc += sign_pow(m - n) * factorial(m) / factorial(n) *
                 changhee2(n, 1).constant_term();
        return Polynomial(acc);
      });

  add_scalar(
      "I-3.27", "Ch2_n^(k)(x) = sum_l (-1)^l C(n,l) D_{n-l}^(l) E_l^(k)(-x)",
      ExpectedStatus::pass, everywhere,
      [](unsigned n, unsigned k) { return changhee2(n, k); },
      [](unsigned n, unsigned k) {
        Polynomial acc;
        for (unsigned l = 0; l <= n; ++l) {
          Rational c =
              sign_pow(l) * binomial(Rational(n), l) * daehee(n - l, l);
          if (!c.is_zero()) acc += euler(l, k).reflect_arg() * c;
        }
        return acc;
      });

  add_scalar(
      "I-3.28",
      "Ch2_n^(k)(x) = sum_l sum_m (-1)^l C(n,l) s1(n-l,m) B_m^(l) E_l^(k)(-x)",
      ExpectedStatus::pass, everywhere,
      [](unsigned n, unsigned k) { return changhee2(n, k); },
      [](unsigned n, unsigned k) {
        Polynomial acc;
        for (unsigned l = 0; l <= n; ++l) {
          Rational inner(0);
          for (unsigned m = 0; m <= n - l; ++m) {
            Rational c = stirling1_r(n - l, m);
            if (!c.is_zero()) inner += c * bernoulli(m, l).constant_term();
          }
          Rational c = sign_pow(l) * binomial(Rational(n), l) * inner;
          if (!c.is_zero()) acc += euler(l, k).reflect_arg() * c;
        }
        return acc;
      });

  add_scalar(
      "P-SHIFT", "Ch2_n^(k)(x) = Ch_n^(k)(x+k)", ExpectedStatus::pass,
      everywhere,
      [](unsigned n, unsigned k) { return changhee2(n, k); },
      [](unsigned n, unsigned k) {
        return changhee1(n, k).shift_arg(Rational((long long)k));
      });

  // Matrix forms. Family matrices span the full grid; the square Stirling
  // and diagonal factors act on rows.
  const D::Domain rows_all = [](unsigned, unsigned) { return true; };
  const D::Domain rows_positive = [](unsigned i, unsigned) { return i >= 1; };
  auto fam = [](const char* name, MatrixVariant v) {
    return [name, v](unsigned n_max, unsigned k_max) {
      return build_matrix(name, n_max + 1, k_max + 1, v);
    };
  };
  auto square_times = [](std::vector<const char*> names, const char* fam_name,
                         MatrixVariant v) {
    return [names, fam_name, v](unsigned n_max, unsigned k_max) {
      Mat acc = build_matrix(names[0], n_max + 1, n_max + 1,
                             MatrixVariant::numbers);
      for (std::size_t i = 1; i < names.size(); ++i)
        acc = mat_mul(acc, build_matrix(names[i], n_max + 1, n_max + 1,
                                        MatrixVariant::numbers));
      return mat_mul(acc, build_matrix(fam_name, n_max + 1, k_max + 1, v));
    };
  };

  add_matrix("M-2.10", "Ch = S1 E  (number matrices)", rows_all,
             fam("CH1", MatrixVariant::numbers),
             square_times({"S1"}, "EULER", MatrixVariant::numbers), "I-2.9");
  add_matrix("M-2.12", "E = S2 Ch  (number matrices)", rows_all,
             fam("EULER", MatrixVariant::numbers),
             square_times({"S2"}, "CH1", MatrixVariant::numbers),
             "I-2.11-corrected");
  add_matrix("M-2.21", "Ch(x) = S1 E(x)", rows_all,
             fam("CH1", MatrixVariant::polynomials),
             square_times({"S1"}, "EULER", MatrixVariant::polynomials),
             "I-2.20");
  add_matrix("M-2.23", "E(x) = S2 Ch(x)", rows_all,
             fam("EULER", MatrixVariant::polynomials),
             square_times({"S2"}, "CH1", MatrixVariant::polynomials),
             "I-2.22");
  add_matrix("M-3.3", "Ch2 = S1 SIGN_DIAG E  (number matrices)", rows_all,
             fam("CH2", MatrixVariant::numbers),
             square_times({"S1", "SIGN_DIAG"}, "EULER",
                          MatrixVariant::numbers),
             "I-3.2");
  add_matrix("M-3.7", "E(k) = S2 Ch2  (number matrices)", rows_all,
             [](unsigned n_max, unsigned k_max) {
               return mat_eval(build_matrix("EULER", n_max + 1, k_max + 1,
                                            MatrixVariant::at_shifted_x),
                               Rational(0));
             },
             square_times({"S2"}, "CH2", MatrixVariant::numbers), "I-3.6");
  add_matrix("M-3.10", "Ch2(x) = S1 SIGN_DIAG E(-x)", rows_all,
             fam("CH2", MatrixVariant::polynomials),
             square_times({"S1", "SIGN_DIAG"}, "EULER",
                          MatrixVariant::at_negative_x),
             "I-3.9");
  add_matrix("M-3.12", "E(x+k) = S2 Ch2(x)", rows_all,
             fam("EULER", MatrixVariant::at_shifted_x),
             square_times({"S2"}, "CH2", MatrixVariant::polynomials),
             "I-3.11");
  add_matrix("M-3.14", "FACT_DIAG Ch2(x) = CFRAC Ch(-x)  (rows >= 1)",
             rows_positive,
             square_times({"FACT_DIAG"}, "CH2", MatrixVariant::polynomials),
             square_times({"CFRAC"}, "CH1", MatrixVariant::at_negative_x),
             "I-3.13");
  add_matrix("M-3.16", "FACT_DIAG Ch(x) = CFRAC Ch2(-x)  (rows >= 1)",
             rows_positive,
             square_times({"FACT_DIAG"}, "CH1", MatrixVariant::polynomials),
             square_times({"CFRAC"}, "CH2", MatrixVariant::at_negative_x),
             "I-3.15");

  return reg;
}

}  // namespace detail

inline const std::vector<IdentityDescriptor>& identity_registry() {
  static const std::vector<IdentityDescriptor> reg = detail::make_registry();
  return reg;
}

inline const IdentityDescriptor* find_identity(const std::string& id) {
  for (const auto& d : identity_registry())
    if (d.id == id) return &d;
  return nullptr;
}

inline IdentityReport verify_identity(const IdentityDescriptor& d,
                                      unsigned n_max, unsigned k_max) {
  const auto start = std::chrono::steady_clock::now();
  IdentityReport r;
  r.id = d.id;
  r.expected = d.expected;
  r.n_max = n_max;
  r.k_max = k_max;

  bool any = false;
  if (d.is_matrix()) {
    Mat lhs = d.mat_lhs(n_max, k_max);
    Mat rhs = d.mat_rhs(n_max, k_max);
    for (unsigned i = 0; i <= n_max; ++i)
      for (unsigned j = 0; j <= k_max; ++j) {
        if (!d.domain(i, j)) continue;
        any = true;
        if (lhs.at(i, j) != rhs.at(i, j))
          r.counterexamples.push_back({i, j, lhs.at(i, j).to_string(),
                                       rhs.at(i, j).to_string()});
      }
  } else {
    for (unsigned n = 0; n <= n_max; ++n)
      for (unsigned k = 0; k <= k_max; ++k) {
        if (!d.domain(n, k)) continue;
        any = true;
        Polynomial lhs = d.lhs(n, k);
        Polynomial rhs = d.rhs(n, k);
        if (lhs != rhs)
          r.counterexamples.push_back(
              {n, k, lhs.to_string(), rhs.to_string()});
      }
  }
  r.vacuous = !any;
  r.passed = r.counterexamples.empty();
  r.elapsed = std::chrono::duration_cast<std::chrono::microseconds>(
      std::chrono::steady_clock::now() - start);
  return r;
}

/**
 * Run identities over the grid. `ids` empty means the whole registry;
 * unknown ids throw before anything is evaluated. `jobs` > 1 spreads
 * evaluation over a worker pool; results land in registry order either
 * way, so serialized output does not depend on the job count.
 */
inline SuiteReport verify_all(unsigned n_max, unsigned k_max,
                              const std::vector<std::string>& ids = {},
                              unsigned jobs = 1) {
  const auto& reg = identity_registry();
  std::vector<const IdentityDescriptor*> selected;
  if (ids.empty()) {
    for (const auto& d : reg) selected.push_back(&d);
  } else {
    for (const auto& id : ids) {
      const IdentityDescriptor* d = find_identity(id);
      if (d == nullptr)
        throw std::invalid_argument("unknown identity id '" + id + "'");
      selected.push_back(d);
    }
  }

  SuiteReport suite;
  suite.n_max = n_max;
  suite.k_max = k_max;
  suite.reports.resize(selected.size());

  if (jobs <= 1 || selected.size() <= 1) {
    for (std::size_t i = 0; i < selected.size(); ++i)
      suite.reports[i] = verify_identity(*selected[i], n_max, k_max);
  } else {
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
      for (;;) {
        std::size_t i = next.fetch_add(1);
        if (i >= selected.size()) return;
        suite.reports[i] = verify_identity(*selected[i], n_max, k_max);
      }
    };
    std::vector<std::thread> pool;
    const std::size_t count = std::min<std::size_t>(jobs, selected.size());
    pool.reserve(count);
    for (std::size_t t = 0; t < count; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  // Matrix identities must agree with their scalar counterparts when both
  // ran on this grid.
  for (std::size_t i = 0; i < selected.size(); ++i) {
    const auto& d = *selected[i];
    if (!d.is_matrix() || d.scalar_peer.empty()) continue;
    for (std::size_t j = 0; j < selected.size(); ++j) {
      if (selected[j]->id != d.scalar_peer) continue;
      ++suite.cross_pairs_checked;
      if (suite.reports[i].passed != suite.reports[j].passed)
        suite.cross_mismatches.emplace_back(d.id, d.scalar_peer);
      break;
    }
  }
  return suite;
}

}  // namespace changhee
