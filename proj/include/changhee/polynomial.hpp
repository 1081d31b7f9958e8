#pragma once

/**
 * Dense univariate polynomials over Rational, indexed by ascending power.
 *
 * The zero polynomial is the empty coefficient list and has no degree
 * (degree() returns nullopt). All arithmetic is exact; equality is
 * coefficient-wise.
 *
 * Canonical text form lists terms by descending power, e.g.
 * "x^3 - 3/2*x^2 + 1/4"; zero prints as "0". parse() round-trips it.
 */

#include <cctype>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "changhee/rational.hpp"

namespace changhee {

class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(const Rational& c) {  // NOLINT: constants convert implicitly
    if (!c.is_zero()) coeffs_.push_back(c);
  }
  Polynomial(long long c) : Polynomial(Rational(c)) {}
  explicit Polynomial(std::vector<Rational> ascending)
      : coeffs_(std::move(ascending)) {
    strip();
  }

  static Polynomial zero() { return Polynomial(); }
  static Polynomial one() { return Polynomial(Rational(1)); }
  static Polynomial x() {
    return Polynomial(std::vector<Rational>{Rational(0), Rational(1)});
  }
  // c * x^p as a building block.
  static Polynomial monomial(const Rational& c, std::size_t p) {
    if (c.is_zero()) return Polynomial();
    std::vector<Rational> v(p + 1, Rational(0));
    v[p] = c;
    return Polynomial(std::move(v));
  }

  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }

  std::optional<std::size_t> degree() const {
    if (coeffs_.empty()) return std::nullopt;
    return coeffs_.size() - 1;
  }

  // Coefficient of x^i; zero beyond the degree.
  const Rational& coeff(std::size_t i) const {
    static const Rational kZero(0);
    return i < coeffs_.size() ? coeffs_[i] : kZero;
  }

  const Rational& leading_coeff() const {
    if (coeffs_.empty())
      throw std::domain_error("Polynomial: zero polynomial has no leading coefficient");
    return coeffs_.back();
  }

  // The constant term (value at 0) without an eval pass.
  const Rational& constant_term() const { return coeff(0); }

  Rational eval(const Rational& at) const {
    Rational acc(0);  // Horner
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * at + coeffs_[i];
    return acc;
  }

  Polynomial operator-() const {
    Polynomial r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (coeffs_.size() < o.coeffs_.size())
      coeffs_.resize(o.coeffs_.size(), Rational(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
      coeffs_[i] += o.coeffs_[i];
    strip();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) { return *this += -o; }
  Polynomial& operator*=(const Polynomial& o) {
    *this = *this * o;
    return *this;
  }
  Polynomial& operator*=(const Rational& s) {
    if (s.is_zero()) {
      coeffs_.clear();
      return *this;
    }
    for (auto& c : coeffs_) c *= s;
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) {
    return a += b;
  }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) {
    return a -= b;
  }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial();
    std::vector<Rational> prod(a.coeffs_.size() + b.coeffs_.size() - 1,
                               Rational(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
        prod[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return Polynomial(std::move(prod));
  }
  friend Polynomial operator*(Polynomial a, const Rational& s) {
    return a *= s;
  }
  friend Polynomial operator*(const Rational& s, Polynomial a) {
    return a *= s;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) {
    return !(a == b);
  }

  // p(x + c)
  Polynomial shift_arg(const Rational& c) const {
    Polynomial result;
    Polynomial base = Polynomial(std::vector<Rational>{c, Rational(1)});
    Polynomial power = one();
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      result += power * coeffs_[i];
      if (i + 1 < coeffs_.size()) power *= base;
    }
    return result;
  }

  // p(-x)
  Polynomial reflect_arg() const {
    Polynomial r = *this;
    for (std::size_t i = 1; i < r.coeffs_.size(); i += 2)
      r.coeffs_[i] = -r.coeffs_[i];
    return r;
  }

  // p(c * x)
  Polynomial scale_arg(const Rational& c) const {
    Polynomial r = *this;
    Rational p(1);
    for (std::size_t i = 1; i < r.coeffs_.size(); ++i) {
      p *= c;
      r.coeffs_[i] *= p;
    }
    r.strip();
    return r;
  }

  std::string to_string() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
      const Rational& c = coeffs_[i];
      if (c.is_zero()) continue;
      bool neg = c.sign() < 0;
      if (first) {
        if (neg) out << '-';
        first = false;
      } else {
        out << (neg ? " - " : " + ");
      }
      Rational mag = neg ? -c : c;
      if (i == 0) {
        out << mag.to_string();
      } else {
        if (!mag.is_one()) out << mag.to_string() << '*';
        out << 'x';
        if (i > 1) out << '^' << i;
      }
    }
    return out.str();
  }

  static Polynomial parse(std::string_view text);

 private:
  void strip() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  }

  std::vector<Rational> coeffs_;
};

inline Polynomial Polynomial::parse(std::string_view text) {
  std::string s;
  s.reserve(text.size());
  for (char c : text)
    if (c != ' ' && c != '\t' && c != '\r' && c != '\n') s += c;
  if (s.empty()) throw std::invalid_argument("Polynomial: empty text");

  std::vector<Rational> acc;
  auto add_term = [&acc](const Rational& c, std::size_t p) {
    if (acc.size() <= p) acc.resize(p + 1, Rational(0));
    acc[p] += c;
  };

  std::size_t pos = 0;
  while (pos < s.size()) {
    int sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      sign = s[pos] == '-' ? -1 : 1;
      ++pos;
    }
    if (pos >= s.size())
      throw std::invalid_argument("Polynomial: dangling sign");

    std::size_t start = pos;
    while (pos < s.size() && (std::isdigit(static_cast<unsigned char>(s[pos])) ||
                              s[pos] == '/'))
      ++pos;
    Rational coeff(1);
    bool have_coeff = pos > start;
    if (have_coeff) coeff = Rational::parse(s.substr(start, pos - start));
    if (sign < 0) coeff = -coeff;

    std::size_t power = 0;
    if (pos < s.size() && (s[pos] == '*' || s[pos] == 'x')) {
      if (s[pos] == '*') {
        ++pos;
        if (pos >= s.size() || s[pos] != 'x')
          throw std::invalid_argument("Polynomial: '*' without variable");
      }
      ++pos;  // consume 'x'
      power = 1;
      if (pos < s.size() && s[pos] == '^') {
        ++pos;
        std::size_t dstart = pos;
        while (pos < s.size() &&
               std::isdigit(static_cast<unsigned char>(s[pos])))
          ++pos;
        if (pos == dstart)
          throw std::invalid_argument("Polynomial: missing exponent");
        power = 0;
        for (std::size_t i = dstart; i < pos; ++i)
          power = power * 10 + static_cast<std::size_t>(s[i] - '0');
      }
    } else if (!have_coeff) {
      throw std::invalid_argument("Polynomial: expected term");
    }
    if (pos < s.size() && s[pos] != '+' && s[pos] != '-')
      throw std::invalid_argument("Polynomial: unexpected character '" +
                                  std::string(1, s[pos]) + "'");
    add_term(coeff, power);
  }
  return Polynomial(std::move(acc));
}

// Evaluation as a free function, matching the interchange vocabulary.
inline Rational poly_eval(const Polynomial& p, const Rational& at) {
  return p.eval(at);
}

// Binomial-coefficient polynomial C(x, j) = x(x-1)...(x-j+1)/j!,
// degree j with leading coefficient 1/j!.
inline Polynomial poly_binom(unsigned j) {
  Polynomial prod = Polynomial::one();
  for (unsigned i = 0; i < j; ++i)
    prod *= Polynomial(std::vector<Rational>{Rational(-(long long)i), Rational(1)});
  Rational inv_fact = Rational(1) / factorial(j);
  return prod * inv_fact;
}

}  // namespace changhee
