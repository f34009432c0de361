#pragma once

#include "ybfk/error.hpp"
#include "ybfk/rational.hpp"

#include <cstddef>
#include <span>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

namespace ybfk {

/// First-order jet v + d·ε with ε² = 0. Carrying a jet through exact code
/// yields the exact derivative of the computation along ε.
template <class T> struct Dual {
  T v{0};
  T d{0};

  Dual() = default;
  Dual(int c) : v(c), d(0) {}
  Dual(T value, T deriv = T(0)) : v(std::move(value)), d(std::move(deriv)) {}

  friend Dual operator+(const Dual& a, const Dual& b) { return {T(a.v + b.v), T(a.d + b.d)}; }
  friend Dual operator-(const Dual& a, const Dual& b) { return {T(a.v - b.v), T(a.d - b.d)}; }
  friend Dual operator-(const Dual& a) { return {T(-a.v), T(-a.d)}; }
  friend Dual operator*(const Dual& a, const Dual& b) {
    return {T(a.v * b.v), T(a.v * b.d + a.d * b.v)};
  }
  friend Dual operator/(const Dual& a, const Dual& b) {
    return {T(a.v / b.v), T((a.d * b.v - a.v * b.d) / (b.v * b.v))};
  }
  Dual& operator+=(const Dual& o) { return *this = *this + o; }
  Dual& operator-=(const Dual& o) { return *this = *this - o; }
  Dual& operator*=(const Dual& o) { return *this = *this * o; }
  friend bool operator==(const Dual& a, const Dual& b) { return a.v == b.v && a.d == b.d; }
};

template <class T> bool is_zero(const Dual<T>& x) { return is_zero(x.v) && is_zero(x.d); }

/// Pivot test: a dual number is invertible iff its real part is.
template <class T> bool is_unit(const T& x) { return !is_zero(x); }
template <class T> bool is_unit(const Dual<T>& x) { return !is_zero(x.v); }

/// Dense row-major matrix. The exact algorithms below assume an exact field.
template <class T> class Matrix {
public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      m(i, i) = T(1);
    return m;
  }

  /// Builds from nested rows; all rows must have equal length.
  static Matrix from_rows(const std::vector<std::vector<T>>& rows) {
    if (rows.empty())
      return {};
    Matrix m(rows.size(), rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != m.cols_)
        throw DimensionMismatch("ragged matrix rows");
      for (std::size_t j = 0; j < m.cols_; ++j)
        m(i, j) = rows[i][j];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<T> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const T> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

  /// Row-major flattening; entry (i, j) lands at index i·cols + j.
  const std::vector<T>& flat() const { return data_; }

  static Matrix from_flat(std::size_t rows, std::size_t cols, std::vector<T> data) {
    if (data.size() != rows * cols)
      throw DimensionMismatch("flat data does not match shape");
    Matrix m;
    m.rows_ = rows;
    m.cols_ = cols;
    m.data_ = std::move(data);
    return m;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        t(j, i) = (*this)(i, j);
    return t;
  }

  Matrix& operator+=(const Matrix& o) {
    check_same_shape(o);
    for (std::size_t k = 0; k < data_.size(); ++k)
      data_[k] += o.data_[k];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    check_same_shape(o);
    for (std::size_t k = 0; k < data_.size(); ++k)
      data_[k] -= o.data_[k];
    return *this;
  }
  Matrix& operator*=(const T& s) {
    for (auto& x : data_)
      x *= s;
    return *this;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const T& s) { return a *= s; }
  friend Matrix operator*(const T& s, Matrix a) { return a *= s; }
  friend Matrix operator-(Matrix a) {
    for (auto& x : a.data_)
      x = -x;
    return a;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_)
      throw DimensionMismatch("matrix product: " + std::to_string(a.cols_) + " vs " +
                              std::to_string(b.rows_));
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (is_zero(aik))
          continue;
        for (std::size_t j = 0; j < b.cols_; ++j)
          c(i, j) += aik * b(k, j);
      }
    return c;
  }

  friend std::vector<T> operator*(const Matrix& a, const std::vector<T>& x) {
    if (a.cols_ != x.size())
      throw DimensionMismatch("matrix-vector product");
    std::vector<T> y(a.rows_, T(0));
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t j = 0; j < a.cols_; ++j)
        y[i] += a(i, j) * x[j];
    return y;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  bool is_zero_matrix() const {
    for (const auto& x : data_)
      if (!is_zero(x))
        return false;
    return true;
  }

private:
  void check_same_shape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw DimensionMismatch("matrix shapes differ");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

inline bool is_zero(double x) { return x == 0.0; }

/// Converts an exact scalar into T (double via get_d, anything else by construction).
template <class T> T scalar_cast(const Rational& q) {
  if constexpr (std::is_same_v<T, double>)
    return q.get_d();
  else
    return T(q);
}

using QMatrix = Matrix<Rational>;

/// Reduced row-echelon form with pivots chosen at the lowest column index.
struct Echelon {
  QMatrix reduced;                 // nonzero rows only
  std::vector<std::size_t> pivots; // pivot column of each row
};

Echelon rref(QMatrix m);
std::size_t rank(const QMatrix& m);
Rational determinant(QMatrix m);

/// Rows form a basis of {x : m·x = 0}.
QMatrix nullspace(const QMatrix& m);

/// Largest absolute entry; 0 for an empty matrix.
Rational max_abs(const QMatrix& m);
Rational max_abs(std::span<const Rational> v);

/// Gauss-Jordan inverse over any exact ring-like T whose non-units are detected by is_unit.
template <class T> Matrix<T> inverse(Matrix<T> a) {
  if (!a.square())
    throw DimensionMismatch("inverse of a non-square matrix");
  const std::size_t n = a.rows();
  Matrix<T> inv = Matrix<T>::identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && !is_unit(a(piv, col)))
      ++piv;
    if (piv == n)
      throw Degenerate("matrix is singular");
    if (piv != col)
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(piv, j), a(col, j));
        std::swap(inv(piv, j), inv(col, j));
      }
    const T p = a(col, col);
    for (std::size_t j = 0; j < n; ++j) {
      a(col, j) = a(col, j) / p;
      inv(col, j) = inv(col, j) / p;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || is_zero(a(i, col)))
        continue;
      const T f = a(i, col);
      for (std::size_t j = 0; j < n; ++j) {
        a(i, j) -= f * a(col, j);
        inv(i, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

/// Human-readable "[[a, b]; [c, d]]" rendering for diagnostics.
std::string to_string(const QMatrix& m);

} // namespace ybfk
