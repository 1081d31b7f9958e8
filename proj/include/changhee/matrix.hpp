#pragma once

/**
 * Row-major matrices with Polynomial entries (numeric matrices are the
 * degree-0 special case). Dimension mismatches throw; there is no implicit
 * resizing or padding.
 */

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "changhee/polynomial.hpp"

namespace changhee {

class Mat {
 public:
  Mat() : rows_(0), cols_(0) {}
  Mat(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Polynomial& at(std::size_t i, std::size_t j) {
    check(i, j);
    return entries_[i * cols_ + j];
  }
  const Polynomial& at(std::size_t i, std::size_t j) const {
    check(i, j);
    return entries_[i * cols_ + j];
  }

  static Mat identity(std::size_t n) {
    Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Polynomial::one();
    return m;
  }

  friend bool operator==(const Mat& a, const Mat& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ &&
           a.entries_ == b.entries_;
  }
  friend bool operator!=(const Mat& a, const Mat& b) { return !(a == b); }

 private:
  void check(std::size_t i, std::size_t j) const {
    if (i >= rows_ || j >= cols_)
      throw std::out_of_range("Mat: index out of range");
  }

  std::size_t rows_;
  std::size_t cols_;
  std::vector<Polynomial> entries_;
};

inline Mat mat_mul(const Mat& a, const Mat& b) {
  if (a.cols() != b.rows())
    throw std::invalid_argument("mat_mul: dimension mismatch");
  Mat out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Polynomial& aik = a.at(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        const Polynomial& bkj = b.at(k, j);
        if (!bkj.is_zero()) out.at(i, j) += aik * bkj;
      }
    }
  return out;
}

// Entry-wise evaluation, e.g. to read a polynomial matrix at a point.
inline Mat mat_eval(const Mat& m, const Rational& at) {
  Mat out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      out.at(i, j) = Polynomial(m.at(i, j).eval(at));
  return out;
}

}  // namespace changhee
