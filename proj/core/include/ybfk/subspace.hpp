#pragma once

#include "ybfk/lie_algebra.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace ybfk {

/// Linear subspace of g (Primal) or g* (Dual), stored as the nonzero rows of
/// its reduced row-echelon basis. Equal subspaces have identical storage.
class Subspace {
public:
  static Subspace zero(AlgebraPtr parent, Side side);
  static Subspace full(AlgebraPtr parent, Side side);
  static Subspace span(AlgebraPtr parent, const std::vector<Vector>& vectors);
  static Subspace span(AlgebraPtr parent, const std::vector<DualVector>& vectors);
  static Subspace from_rows(AlgebraPtr parent, Side side, const QMatrix& rows);

  const AlgebraPtr& parent() const { return parent_; }
  Side side() const { return side_; }
  std::size_t dim() const { return basis_.rows(); }
  std::size_t ambient_dim() const { return parent_->dim(); }
  const QMatrix& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  Vector basis_vector(std::size_t a) const;
  DualVector basis_dual(std::size_t a) const;

  bool contains(const std::vector<Rational>& v) const;
  bool contains(const Vector& v) const;
  bool contains(const DualVector& v) const;
  bool contains(const Subspace& other) const;

  /// Coefficients of v in the echelon basis (the entries at pivot columns);
  /// nullopt when v is not in the subspace.
  std::optional<std::vector<Rational>> coordinates(const std::vector<Rational>& v) const;

  /// Reduces v modulo this subspace to the representative vanishing at
  /// every pivot column.
  std::vector<Rational> reduce(std::vector<Rational> v) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.side_ == b.side_ && same_algebra(a.parent_, b.parent_) && a.basis_ == b.basis_;
  }

private:
  Subspace(AlgebraPtr parent, Side side, QMatrix basis, std::vector<std::size_t> pivots)
      : parent_(std::move(parent)), side_(side), basis_(std::move(basis)), pivots_(std::move(pivots)) {}

  AlgebraPtr parent_;
  Side side_;
  QMatrix basis_;
  std::vector<std::size_t> pivots_;
};

Subspace sum(const Subspace& u, const Subspace& v);
Subspace intersect(const Subspace& u, const Subspace& v);

/// Annihilator on the opposite side: perp(U ⊂ g) ⊂ g*, perp(V ⊂ g*) ⊂ g.
Subspace perp(const Subspace& u);

/// Result of a closure check; on failure carries the offending basis pair.
struct SubalgebraCheck {
  bool ok = true;
  std::size_t i = 0;
  std::size_t j = 0;
  Vector bracket; // [u_i, u_j] when ok is false
};

SubalgebraCheck is_subalgebra(const LieAlgebra& a, const Subspace& u);

} // namespace ybfk
