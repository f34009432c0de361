#pragma once

#include "ybfk/matrix.hpp"
#include "ybfk/rational.hpp"

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <tuple>
#include <vector>

namespace ybfk {

enum class Side { Primal, Dual };

/// Coefficient array relative to the stored basis of an algebra (Primal) or
/// to its dual basis (Dual). The tag keeps g and g* elements apart.
template <Side S> class Coefficients {
public:
  Coefficients() = default;
  explicit Coefficients(std::size_t dim) : c_(dim, Rational(0)) {}
  explicit Coefficients(std::vector<Rational> c) : c_(std::move(c)) {}

  static Coefficients unit(std::size_t dim, std::size_t k) {
    Coefficients v(dim);
    v.c_.at(k) = 1;
    return v;
  }

  std::size_t size() const { return c_.size(); }
  Rational& operator[](std::size_t k) { return c_[k]; }
  const Rational& operator[](std::size_t k) const { return c_[k]; }
  const std::vector<Rational>& values() const { return c_; }

  bool is_zero() const {
    for (const auto& x : c_)
      if (sgn(x) != 0)
        return false;
    return true;
  }

  Coefficients& operator+=(const Coefficients& o) {
    check(o);
    for (std::size_t k = 0; k < c_.size(); ++k)
      c_[k] += o.c_[k];
    return *this;
  }
  Coefficients& operator-=(const Coefficients& o) {
    check(o);
    for (std::size_t k = 0; k < c_.size(); ++k)
      c_[k] -= o.c_[k];
    return *this;
  }
  Coefficients& operator*=(const Rational& s) {
    for (auto& x : c_)
      x *= s;
    return *this;
  }

  friend Coefficients operator+(Coefficients a, const Coefficients& b) { return a += b; }
  friend Coefficients operator-(Coefficients a, const Coefficients& b) { return a -= b; }
  friend Coefficients operator*(const Rational& s, Coefficients a) { return a *= s; }
  friend Coefficients operator-(Coefficients a) { return a *= Rational(-1); }
  friend bool operator==(const Coefficients& a, const Coefficients& b) { return a.c_ == b.c_; }

private:
  void check(const Coefficients& o) const {
    if (o.c_.size() != c_.size())
      throw DimensionMismatch("coefficient vectors of different length");
  }

  std::vector<Rational> c_;
};

using Vector = Coefficients<Side::Primal>;
using DualVector = Coefficients<Side::Dual>;

/// ⟨ξ, x⟩ under the stored basis.
Rational pair(const DualVector& xi, const Vector& x);

struct BracketTerm {
  std::size_t index;
  Rational coeff;
  friend bool operator==(const BracketTerm&, const BracketTerm&) = default;
};

/// Upper-triangle entry (i, j, [e_i, e_j]) of a structure table, i < j.
using BracketEntry = std::tuple<std::size_t, std::size_t, std::vector<BracketTerm>>;

/// Finite-dimensional Lie algebra over ℚ given by structure constants,
/// optionally realized by n×n matrices (the matrix groups act through this).
class LieAlgebra {
public:
  /// Antisymmetry is implied: only i < j entries are read.
  LieAlgebra(std::string label, std::vector<std::string> basis_names,
             const std::vector<BracketEntry>& upper);

  /// Brackets are computed as matrix commutators of the realization.
  static LieAlgebra from_matrices(std::string label, std::vector<std::string> basis_names,
                                  std::vector<QMatrix> realization);

  std::size_t dim() const { return names_.size(); }
  const std::string& label() const { return label_; }
  const std::vector<std::string>& basis_names() const { return names_; }
  std::optional<std::size_t> index_of(std::string_view name) const;

  /// Sparse [e_i, e_j], zero coefficients dropped.
  const std::vector<BracketTerm>& bracket_terms(std::size_t i, std::size_t j) const {
    return table_[i * dim() + j];
  }

  bool realized() const { return !realization_.empty(); }
  std::size_t matrix_size() const { return matrix_size_; }
  const QMatrix& realization(std::size_t k) const { return realization_.at(k); }

  QMatrix to_matrix(const Vector& x) const;

  /// Coordinates of a matrix in the realization basis; nullopt if outside.
  std::optional<Vector> coordinates(const QMatrix& m) const;

  /// Realization pushed through any exact scalar type (e.g. Dual<Rational>).
  template <class T> Matrix<T> to_matrix_as(std::span<const T> x) const {
    require_realized();
    Matrix<T> m(matrix_size_, matrix_size_);
    for (std::size_t k = 0; k < dim(); ++k) {
      if (is_zero(x[k]))
        continue;
      const auto& b = realization_[k];
      for (std::size_t i = 0; i < matrix_size_; ++i)
        for (std::size_t j = 0; j < matrix_size_; ++j)
          if (!is_zero(b(i, j)))
            m(i, j) += scalar_cast<T>(b(i, j)) * x[k];
    }
    return m;
  }

  /// Coordinates of a T-valued matrix; throws NotInAlgebra if outside.
  template <class T> std::vector<T> coordinates_as(const Matrix<T>& m) const {
    require_realized();
    const auto& flat = m.flat();
    std::vector<T> c(dim(), T(0));
    for (std::size_t k = 0; k < dim(); ++k)
      for (std::size_t q = 0; q < coord_pivots_.size(); ++q)
        if (!is_zero(coord_solve_(k, q)))
          c[k] += scalar_cast<T>(coord_solve_(k, q)) * flat[coord_pivots_[q]];
    Matrix<T> back = to_matrix_as<T>(std::span<const T>(c));
    if (!(back == m))
      throw NotInAlgebra("matrix is not in the span of " + label_);
    return c;
  }

  /// Structural equality (names and structure table).
  friend bool operator==(const LieAlgebra& a, const LieAlgebra& b) {
    return a.names_ == b.names_ && a.table_ == b.table_;
  }

  void require_realized() const;

private:
  LieAlgebra() = default;
  void build_coordinate_solver();

  std::string label_;
  std::vector<std::string> names_;
  std::vector<std::vector<BracketTerm>> table_;
  std::size_t matrix_size_ = 0;
  std::vector<QMatrix> realization_;
  QMatrix coord_solve_;                    // dim × dim inverse of the pivot-row block
  std::vector<std::size_t> coord_pivots_;  // flattened entry indices used for solving
};

using AlgebraPtr = std::shared_ptr<const LieAlgebra>;

/// Same pointer, or structurally equal.
bool same_algebra(const AlgebraPtr& a, const AlgebraPtr& b);

/// sl(n) with basis {E_ij, i≠j} (row-major) followed by H_k = E_kk − E_{k+1,k+1}.
/// For n = 2 the basis is named E, F, H.
AlgebraPtr make_sl(std::size_t n);

/// gl(n) with basis E_ij in row-major order.
AlgebraPtr make_gl(std::size_t n);

/// The maximal parabolic {x ∈ sl(n) : x_nj = 0 for j < n} as a standalone
/// algebra (basis inherited from sl(n), dimension n² − n).
AlgebraPtr make_jordanian_parabolic(std::size_t n);

/// Looks up "sl2", "sl(3)", "gl(2)", "p(3)" style names.
AlgebraPtr builtin_algebra(std::string_view name);

Vector lie_bracket(const LieAlgebra& a, const Vector& x, const Vector& y);

/// ⟨ad*_x ξ, y⟩ = −⟨ξ, [x, y]⟩.
DualVector ad_star(const LieAlgebra& a, const Vector& x, const DualVector& xi);

/// Restricts a functional on n×n matrices, F ↦ Σ F_ij X_ij, to the algebra.
DualVector functional_from_matrix(const LieAlgebra& a, const QMatrix& f);

struct ValidationReport {
  bool antisymmetric = true;
  bool jacobi = true;
  std::string witness; // first violation, human readable
  bool ok() const { return antisymmetric && jacobi; }
};

ValidationReport validate(const LieAlgebra& a);

} // namespace ybfk
