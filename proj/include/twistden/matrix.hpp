#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "twistden/numeric.hpp"

namespace twistden {

/// Dense row-major matrix over an exact ring (Rational or BigInt).
template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  static Matrix from_rows(const std::vector<std::vector<T>>& rows) {
    if (rows.empty()) return Matrix();
    Matrix m(rows.size(), rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != m.cols_) throw Error("ragged matrix rows");
      for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<T> row(std::size_t i) const {
    return std::vector<T>(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                          data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
  }
  std::vector<T> col(std::size_t j) const {
    std::vector<T> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
    return out;
  }

  void set_row(std::size_t i, const std::vector<T>& values) {
    for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = values[j];
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw Error("matrix shape mismatch in product");
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (a(i, k) == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += a(i, k) * b(k, j);
      }
    return c;
  }

  friend std::vector<T> operator*(const Matrix& a, const std::vector<T>& v) {
    if (a.cols_ != v.size()) throw Error("matrix shape mismatch in matrix-vector product");
    std::vector<T> out(a.rows_, T(0));
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t j = 0; j < a.cols_; ++j) out[i] += a(i, j) * v[j];
    return out;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error("matrix shape mismatch in sum");
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] += b.data_[i];
    return a;
  }

  friend Matrix operator-(Matrix a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error("matrix shape mismatch in difference");
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] -= b.data_[i];
    return a;
  }

  friend Matrix operator*(const T& s, Matrix a) {
    for (auto& x : a.data_) x *= s;
    return a;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  bool is_square() const { return rows_ == cols_; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using RationalMatrix = Matrix<Rational>;
using IntegerMatrix = Matrix<BigInt>;

class SingularMatrix : public Error {
 public:
  using Error::Error;
};

RationalMatrix to_rational(const IntegerMatrix& m);
/// Throws Error if any entry is not an integer.
IntegerMatrix to_integer(const RationalMatrix& m);
bool is_integral(const RationalMatrix& m);

Rational determinant(const RationalMatrix& m);
std::size_t rank(const RationalMatrix& m);
/// Throws SingularMatrix.
RationalMatrix inverse(const RationalMatrix& m);
/// Solves m x = b for square nonsingular m.
std::vector<Rational> solve(const RationalMatrix& m, const std::vector<Rational>& b);

/// Coefficients c_0..c_n of det(x I - m) (c_n = 1), via Faddeev-LeVerrier.
std::vector<Rational> characteristic_polynomial(const RationalMatrix& m);

/// Row-style Hermite normal form: transform * input == form, transform unimodular.
struct HermiteForm {
  IntegerMatrix form;
  IntegerMatrix transform;
  std::size_t rank = 0;
};
HermiteForm hermite_form(const IntegerMatrix& a);

/// Rows form a Z-basis of { x in Z^cols : a x = 0 }.
IntegerMatrix integer_kernel(const IntegerMatrix& a);

/// Invariant factors d_1 | d_2 | ... (nonzero diagonal of the Smith form, all of them).
std::vector<BigInt> smith_invariants(const IntegerMatrix& a);

/// Scales each row of a rational matrix by the lcm of its denominators.
IntegerMatrix clear_row_denominators(const RationalMatrix& m);

}  // namespace twistden
