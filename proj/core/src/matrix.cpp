#include "ybfk/matrix.hpp"

#include <sstream>

namespace ybfk {

Echelon rref(QMatrix m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && is_zero(m(piv, c)))
      ++piv;
    if (piv == rows)
      continue;
    if (piv != r)
      for (std::size_t j = 0; j < cols; ++j)
        std::swap(m(piv, j), m(r, j));
    const Rational p = m(r, c);
    for (std::size_t j = c; j < cols; ++j)
      m(r, j) /= p;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || is_zero(m(i, c)))
        continue;
      const Rational f = m(i, c);
      for (std::size_t j = c; j < cols; ++j)
        m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  QMatrix reduced(r, cols);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      reduced(i, j) = m(i, j);
  return {std::move(reduced), std::move(pivots)};
}

std::size_t rank(const QMatrix& m) { return rref(m).pivots.size(); }

Rational determinant(QMatrix m) {
  if (!m.square())
    throw DimensionMismatch("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && is_zero(m(piv, c)))
      ++piv;
    if (piv == n)
      return 0;
    if (piv != c) {
      for (std::size_t j = 0; j < n; ++j)
        std::swap(m(piv, j), m(c, j));
      det = -det;
    }
    det *= m(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (is_zero(m(i, c)))
        continue;
      const Rational f = m(i, c) / m(c, c);
      for (std::size_t j = c; j < n; ++j)
        m(i, j) -= f * m(c, j);
    }
  }
  return det;
}

QMatrix nullspace(const QMatrix& m) {
  const auto ech = rref(m);
  const std::size_t cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (auto p : ech.pivots)
    is_pivot[p] = true;
  QMatrix basis(cols - ech.pivots.size(), cols);
  std::size_t out = 0;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free])
      continue;
    basis(out, free) = 1;
    for (std::size_t i = 0; i < ech.pivots.size(); ++i)
      basis(out, ech.pivots[i]) = -ech.reduced(i, free);
    ++out;
  }
  return basis;
}

Rational max_abs(std::span<const Rational> v) {
  Rational best = 0;
  for (const auto& x : v)
    if (abs(x) > best)
      best = abs(x);
  return best;
}

Rational max_abs(const QMatrix& m) { return max_abs(std::span<const Rational>(m.flat())); }

std::string to_string(const QMatrix& m) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << (i ? "; [" : "[");
    for (std::size_t j = 0; j < m.cols(); ++j)
      os << (j ? ", " : "") << m(i, j).get_str();
    os << ']';
  }
  os << ']';
  return os.str();
}

} // namespace ybfk
