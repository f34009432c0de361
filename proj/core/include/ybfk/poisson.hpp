#pragma once

#include "ybfk/matgroup.hpp"
#include "ybfk/polynomial.hpp"
#include "ybfk/rmatrix.hpp"
#include "ybfk/subspace.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ybfk {

/// π_r at a point of SL(n) in ambient coordinates: an n²×n² antisymmetric
/// matrix indexed by row-major matrix entries.
struct AmbientBivector {
  std::size_t n = 0;
  QMatrix pi;

  std::size_t rank() const { return ybfk::rank(pi); }
};

/// Π(g) = Σ r^{uv} [L_u∧L_v − R_u∧R_v] with L_u = g·e_u and R_u = e_u·g.
/// With `include_right` false only the left-invariant part is assembled.
template <class T>
Matrix<T> ambient_bivector_as(const Bivector& r, const Matrix<T>& g, bool include_right = true) {
  const LieAlgebra& a = *r.parent();
  a.require_realized();
  const std::size_t n = a.matrix_size();
  if (g.rows() != n || g.cols() != n)
    throw DimensionMismatch("point size does not match the r-matrix algebra");
  const std::size_t n2 = n * n;

  std::vector<Matrix<T>> left(a.dim()), right(a.dim());
  auto realized = [&](std::size_t k) {
    Matrix<T> m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        m(i, j) = scalar_cast<T>(a.realization(k)(i, j));
    return m;
  };
  std::vector<bool> used(a.dim(), false);
  for (const auto& [key, c] : r.entries())
    used[key.first] = used[key.second] = true;
  for (std::size_t k = 0; k < a.dim(); ++k)
    if (used[k]) {
      const Matrix<T> e = realized(k);
      left[k] = g * e;
      if (include_right)
        right[k] = e * g;
    }

  Matrix<T> pi(n2, n2);
  auto add_wedge = [&](const Matrix<T>& x, const Matrix<T>& y, const T& c) {
    const auto& xf = x.flat();
    const auto& yf = y.flat();
    for (std::size_t p = 0; p < n2; ++p) {
      if (is_zero(xf[p]) && is_zero(yf[p]))
        continue;
      for (std::size_t q = 0; q < n2; ++q)
        pi(p, q) += c * (xf[p] * yf[q] - yf[p] * xf[q]);
    }
  };
  for (const auto& [key, c] : r.entries()) {
    const T w = scalar_cast<T>(c);
    add_wedge(left[key.first], left[key.second], w);
    if (include_right)
      add_wedge(right[key.first], right[key.second], T(-w));
  }
  return pi;
}

AmbientBivector ambient_bivector(const Bivector& r, const GroupElement& g);

/// Left-invariant part Σ r^{uv} L_u∧L_v only.
AmbientBivector left_bivector(const Bivector& r, const GroupElement& g);

/// Dimension of the symplectic leaf through g.
std::size_t leaf_rank(const Bivector& r, const GroupElement& g);

/// {f, h}(g) = ∇f(g)ᵀ Π(g) ∇h(g).
Rational poisson_bracket(const Bivector& r, const Polynomial& f, const Polynomial& h,
                         const GroupElement& g);

/// X_h(g) = Π(g)∇h(g) reshaped to an n×n tangent matrix.
QMatrix hamiltonian_field(const Bivector& r, const Polynomial& h, const GroupElement& g);

/// Π(T) with polynomial entries in the variables T11 … Tnn.
std::vector<std::vector<Polynomial>> symbolic_bivector(const Bivector& r);

/// {f, h} as a polynomial.
Polynomial bracket_polynomial(const Bivector& r, const Polynomial& f, const Polynomial& h);

/// max |Π(g)·∇c| for c = (T11 − T22)/T21 on SL(2). Throws UndefinedClassifier if T21 = 0.
Rational casimir_residual(const Bivector& r, const GroupElement& g);

/// Rank excess of the columns of Π(g) over p·g + g·p; 0 means tangent to PgP.
std::size_t tangency_defect(const Bivector& r, const GroupElement& g, const Subspace& p);
/// Uses p = carrier(r).
std::size_t tangency_defect(const Bivector& r, const GroupElement& g);

/// max |Π(gh) − A_g Π(h) A_gᵀ − B_h Π(g) B_hᵀ| with A_g: X ↦ gX, B_h: X ↦ Xh.
Rational multiplicativity_defect(const Bivector& r, const GroupElement& g, const GroupElement& h);

/// Leaf label on SL(2): a zero-dimensional leaf, or [λ : μ] naming the
/// two-dimensional leaf inside V(λ(T11 − T22) − μ T21).
struct LeafId {
  enum class Kind { ZPoint, Ratio };
  Kind kind = Kind::Ratio;
  std::optional<GroupElement> point; // set for ZPoint
  Rational lambda = 0;               // set for Ratio; first nonzero coordinate is 1
  Rational mu = 0;

  std::string to_string() const;
  friend bool operator==(const LeafId&, const LeafId&) = default;
};

LeafId sl2_leaf_id(const GroupElement& g);

} // namespace ybfk
