#pragma once

/**
 * Exact rational arithmetic on arbitrary-precision integers.
 *
 * Every value is kept normalized: gcd(num, den) == 1 and den > 0, with
 * zero represented as 0/1. No operation ever rounds; there is no float
 * anywhere in this library.
 *
 * Canonical text form: "p/q" when q != 1, plain "p" otherwise ("-3/4",
 * "12"). parse() accepts exactly that shape (surrounding whitespace ok).
 */

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace changhee {

using BigInt = boost::multiprecision::cpp_int;

class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(long long v) : num_(v), den_(1) {}  // NOLINT: implicit by design
  Rational(BigInt v) : num_(std::move(v)), den_(1) {}
  Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) {
    normalize();
  }

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_one() const { return num_ == 1 && den_ == 1; }
  bool is_integer() const { return den_ == 1; }
  int sign() const { return num_ == 0 ? 0 : (num_ < 0 ? -1 : 1); }

  Rational operator-() const { return Rational(unchecked{}, -num_, den_); }

  Rational& operator+=(const Rational& o) {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
    normalize();
    return *this;
  }
  Rational& operator-=(const Rational& o) { return *this += -o; }
  Rational& operator*=(const Rational& o) {
    num_ *= o.num_;
    den_ *= o.den_;
    normalize();
    return *this;
  }
  Rational& operator/=(const Rational& o) {
    if (o.num_ == 0) throw std::domain_error("Rational: division by zero");
    num_ *= o.den_;
    den_ *= o.num_;
    normalize();
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) {
    return !(a == b);
  }
  // Exact order; normalization makes cross-multiplication sign-safe.
  friend bool operator<(const Rational& a, const Rational& b) {
    return a.num_ * b.den_ < b.num_ * a.den_;
  }

  std::string to_string() const {
    std::string s = num_.str();
    if (den_ != 1) {
      s += '/';
      s += den_.str();
    }
    return s;
  }

  static Rational parse(std::string_view text) {
    std::string_view s = trimmed(text);
    if (s.empty()) throw std::invalid_argument("Rational: empty text");
    auto slash = s.find('/');
    if (slash == std::string_view::npos)
      return Rational(parse_int(s));
    Rational r(parse_int(s.substr(0, slash)), parse_int(s.substr(slash + 1)));
    return r;
  }

 private:
  struct unchecked {};
  Rational(unchecked, BigInt n, BigInt d)
      : num_(std::move(n)), den_(std::move(d)) {}

  void normalize() {
    if (den_ == 0) throw std::domain_error("Rational: zero denominator");
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    BigInt g = boost::multiprecision::gcd(num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  static std::string_view trimmed(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
      s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' ||
                          s.back() == '\r' || s.back() == '\n'))
      s.remove_suffix(1);
    return s;
  }

  static BigInt parse_int(std::string_view s) {
    s = trimmed(s);
    bool neg = false;
    if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
      neg = s.front() == '-';
      s.remove_prefix(1);
    }
    if (s.empty()) throw std::invalid_argument("Rational: missing digits");
    BigInt v = 0;
    for (char c : s) {
      if (c < '0' || c > '9')
        throw std::invalid_argument(std::string("Rational: bad digit '") + c +
                                    "'");
      v = v * 10 + (c - '0');
    }
    return neg ? BigInt(-v) : v;
  }

  BigInt num_;
  BigInt den_;
};

// base^e with the 0^0 == 1 convention used throughout.
inline Rational rational_pow(const Rational& base, unsigned long long e) {
  Rational acc(1);
  Rational b = base;
  while (e != 0) {
    if (e & 1) acc *= b;
    b *= b;
    e >>= 1;
  }
  return acc;
}

inline Rational factorial(unsigned n) {
  BigInt f = 1;
  for (unsigned i = 2; i <= n; ++i) f *= i;
  return Rational(std::move(f));
}

}  // namespace changhee
