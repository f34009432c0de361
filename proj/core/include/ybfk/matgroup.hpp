#pragma once

#include "ybfk/lie_algebra.hpp"
#include "ybfk/matrix.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace ybfk {

/// Exact point of SL(n): square rational matrix with determinant exactly 1.
class GroupElement {
public:
  /// Throws DimensionMismatch for non-square input, MembershipError if det ≠ 1.
  explicit GroupElement(QMatrix m);

  static GroupElement identity(std::size_t n);
  static GroupElement from_rows(const std::vector<std::vector<Rational>>& rows);

  std::size_t size() const { return m_.rows(); }
  const Rational& operator()(std::size_t i, std::size_t j) const { return m_(i, j); }
  const QMatrix& matrix() const { return m_; }

  GroupElement inverse() const;

  friend GroupElement operator*(const GroupElement& a, const GroupElement& b);
  friend bool operator==(const GroupElement& a, const GroupElement& b) { return a.m_ == b.m_; }

private:
  struct Trusted {};
  GroupElement(QMatrix m, Trusted) : m_(std::move(m)) {}

  QMatrix m_;
};

/// Parses "a,b;c,d" (rows separated by ';', entries by ',').
GroupElement parse_point(std::string_view text);
std::string to_string(const GroupElement& g);

/// Matrix of Ad_g on the algebra basis: column k holds the coordinates of g e_k g⁻¹.
template <class T>
Matrix<T> adjoint_matrix_as(const LieAlgebra& a, const Matrix<T>& g, const Matrix<T>& g_inv) {
  a.require_realized();
  const std::size_t d = a.dim();
  Matrix<T> out(d, d);
  for (std::size_t k = 0; k < d; ++k) {
    Matrix<T> e(g.rows(), g.cols());
    const auto& b = a.realization(k);
    for (std::size_t i = 0; i < e.rows(); ++i)
      for (std::size_t j = 0; j < e.cols(); ++j)
        e(i, j) = scalar_cast<T>(b(i, j));
    const auto c = a.coordinates_as<T>(g * e * g_inv);
    for (std::size_t q = 0; q < d; ++q)
      out(q, k) = c[q];
  }
  return out;
}

/// (Ad*_g ξ)_j = ⟨ξ, Ad_{g⁻¹} e_j⟩.
template <class T>
std::vector<T> coadjoint_as(const LieAlgebra& a, const Matrix<T>& g, const Matrix<T>& g_inv,
                            std::span<const Rational> xi) {
  const Matrix<T> ad_inv = adjoint_matrix_as<T>(a, g_inv, g);
  const std::size_t d = a.dim();
  std::vector<T> out(d, T(0));
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t k = 0; k < d; ++k)
      if (!is_zero(xi[k]))
        out[j] += scalar_cast<T>(xi[k]) * ad_inv(k, j);
  return out;
}

QMatrix adjoint_matrix(const LieAlgebra& a, const GroupElement& g);

/// Ad_g x = g x g⁻¹ in the algebra basis; throws NotInAlgebra if the
/// conjugate leaves the algebra.
Vector adjoint(const LieAlgebra& a, const GroupElement& g, const Vector& x);

/// ⟨Ad*_g ξ, y⟩ = ⟨ξ, Ad_{g⁻¹} y⟩.
DualVector coadjoint(const LieAlgebra& a, const GroupElement& g, const DualVector& xi);

/// exp(x) as a finite sum; throws NotNilpotent unless x^n = 0.
GroupElement exponential_exact(const LieAlgebra& a, const Vector& x);

/// Scaling-and-squaring exponential in double precision.
Matrix<double> exponential_float(const Matrix<double>& x, double tol = 1e-12);

/// Double-precision copy of an exact matrix.
Matrix<double> to_double(const QMatrix& m);

enum class CosetLabel { Identity, Transposition };

std::string to_string(CosetLabel label);

/// Membership in the Jordanian parabolic P = {g : g_nj = 0 for j < n}.
bool in_jordanian_parabolic(const GroupElement& g);

/// P·g·P is P (Identity) or P·s·P (Transposition).
CosetLabel coset_classify(const GroupElement& g);

/// [[0, 1], [−1, 0]] placed in the (n−1, n) block, identity elsewhere.
GroupElement weyl_representative(std::size_t n);

} // namespace ybfk
