#pragma once

/**
 * Stirling numbers, generalized binomial coefficients, and falling
 * factorials.
 *
 * Both Stirling kinds are produced by their triangular recurrences:
 *   s1(n+1, l) = s1(n, l-1) - n * s1(n, l)      (signed first kind)
 *   s2(n+1, l) = s2(n, l-1) + l * s2(n, l)      (second kind)
 * with s(0,0) = 1 and zero outside 0 <= l <= n.
 *
 * Triangles are cached in immutable snapshots that are rebuilt on growth;
 * readers grab the current snapshot under a mutex, so concurrent lookups
 * are safe.
 */

#include <algorithm>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <vector>

#include "changhee/polynomial.hpp"
#include "changhee/rational.hpp"

namespace changhee {

enum class StirlingKind { first, second };

class StirlingTable {
 public:
  StirlingTable(StirlingKind kind, unsigned n_max) : kind_(kind) {
    rows_.reserve(n_max + 1);
    rows_.push_back({1});
    for (unsigned n = 0; n < n_max; ++n) {
      const auto& prev = rows_.back();
      std::vector<BigInt> row(n + 2, 0);
      for (unsigned l = 0; l <= n + 1; ++l) {
        BigInt v = 0;
        if (l >= 1) v += prev[l - 1];
        if (l <= n) {
          if (kind_ == StirlingKind::first)
            v -= BigInt(n) * prev[l];
          else
            v += BigInt(l) * prev[l];
        }
        row[l] = std::move(v);
      }
      rows_.push_back(std::move(row));
    }
  }

  StirlingKind kind() const { return kind_; }
  unsigned n_max() const { return static_cast<unsigned>(rows_.size()) - 1; }

  BigInt value(unsigned n, unsigned l) const {
    if (n >= rows_.size())
      throw std::out_of_range("StirlingTable: n beyond built range");
    if (l > n) return 0;
    return rows_[n][l];
  }

 private:
  StirlingKind kind_;
  std::vector<std::vector<BigInt>> rows_;
};

namespace detail {

inline std::shared_ptr<const StirlingTable> stirling_snapshot(
    StirlingKind kind, unsigned n) {
  static std::mutex mu;
  static std::shared_ptr<const StirlingTable> cache[2];
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[kind == StirlingKind::second];
  if (!slot || slot->n_max() < n)
    slot = std::make_shared<const StirlingTable>(kind, std::max(n, 16u));
  return slot;
}

}  // namespace detail

inline BigInt stirling1(unsigned n, unsigned l) {
  return detail::stirling_snapshot(StirlingKind::first, n)->value(n, l);
}

inline BigInt stirling2(unsigned n, unsigned l) {
  return detail::stirling_snapshot(StirlingKind::second, n)->value(n, l);
}

// Falling factorial (a)_n = a (a-1) ... (a-n+1) for arbitrary rational a;
// (a)_0 = 1.
inline Rational falling_factorial(const Rational& a, unsigned n) {
  Rational prod(1);
  Rational term = a;
  for (unsigned i = 0; i < n; ++i) {
    prod *= term;
    term -= Rational(1);
  }
  return prod;
}

// Generalized binomial coefficient C(a, j) = (a)_j / j!; the upper argument
// may be any rational (negative integers included), C(a, 0) = 1.
inline Rational binomial(const Rational& a, unsigned j) {
  return falling_factorial(a, j) / factorial(j);
}

// (x)_n as a polynomial, built by the defining product.
inline Polynomial falling_factorial_poly(unsigned n) {
  Polynomial prod = Polynomial::one();
  for (unsigned i = 0; i < n; ++i)
    prod *= Polynomial(std::vector<Rational>{Rational(-(long long)i), Rational(1)});
  return prod;
}

}  // namespace changhee
