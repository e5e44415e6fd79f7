#pragma once

#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "algf/rational.hpp"

namespace algf {

inline constexpr double kFloatTolerance = 1e-9;

template <class Scalar>
struct ScalarTraits;

template <>
struct ScalarTraits<Rational> {
  static constexpr bool exact = true;
  static bool equal(const Rational& a, const Rational& b) { return a == b; }
  static bool is_zero(const Rational& a) { return sgn(a) == 0; }
  static std::string format(const Rational& a) { return a.get_str(); }
};

template <>
struct ScalarTraits<double> {
  static constexpr bool exact = false;
  static bool equal(double a, double b) {
    return std::fabs(a - b) <= kFloatTolerance;
  }
  static bool is_zero(double a) { return std::fabs(a) <= kFloatTolerance; }
  static std::string format(double a) {
    std::ostringstream out;
    out.precision(12);
    out << a;
    return out.str();
  }
};

/// Small dense row-major matrix.  Rule-backed structures use these as their
/// element values: a rational pair is a 1x2 matrix, a nonzero scalar a 1x1.
template <class Scalar>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, Scalar(0)) {}
  Matrix(std::initializer_list<std::initializer_list<Scalar>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
      for (const auto& value : row) data_.push_back(value);
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) {
    return data_[r * cols_ + c];
  }
  const Scalar& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  const std::vector<Scalar>& entries() const { return data_; }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    Matrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Scalar& aik = a(i, k);
        for (std::size_t j = 0; j < b.cols_; ++j) {
          out(i, j) += aik * b(k, j);
        }
      }
    }
    return out;
  }

  friend Matrix operator*(const Scalar& s, const Matrix& m) {
    Matrix out = m;
    for (auto& v : out.data_) v = s * v;
    return out;
  }

  /// Shape-aware approximate (float) or exact (rational) equality.
  friend bool same(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
    for (std::size_t i = 0; i < a.data_.size(); ++i) {
      if (!ScalarTraits<Scalar>::equal(a.data_[i], b.data_[i])) return false;
    }
    return true;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  std::string str() const {
    std::string out = "[";
    for (std::size_t r = 0; r < rows_; ++r) {
      if (r) out += ",";
      if (rows_ > 1) out += "[";
      for (std::size_t c = 0; c < cols_; ++c) {
        if (c) out += ",";
        out += ScalarTraits<Scalar>::format((*this)(r, c));
      }
      if (rows_ > 1) out += "]";
    }
    return out + "]";
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

/// Cofactor expansion; intended for the n <= 3 matrices used here.
template <class Scalar>
Scalar determinant(const Matrix<Scalar>& m) {
  const std::size_t n = m.rows();
  if (n == 1) return m(0, 0);
  if (n == 2) return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
  Scalar total(0);
  for (std::size_t c = 0; c < n; ++c) {
    Matrix<Scalar> minor(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r) {
      std::size_t cc = 0;
      for (std::size_t k = 0; k < n; ++k) {
        if (k == c) continue;
        minor(r - 1, cc++) = m(r, k);
      }
    }
    Scalar term = m(0, c) * determinant(minor);
    if (c % 2 == 0) {
      total += term;
    } else {
      total -= term;
    }
  }
  return total;
}

using RationalMatrix = Matrix<Rational>;
using RealMatrix = Matrix<double>;

}  // namespace algf
