#include "ybfk/subspace.hpp"

#include "ybfk/error.hpp"

namespace ybfk {

namespace {

void require_same(const Subspace& u, const Subspace& v) {
  if (!same_algebra(u.parent(), v.parent()))
    throw ParentMismatch("subspaces over different algebras");
  if (u.side() != v.side())
    throw ParentMismatch("subspaces on different sides (g vs g*)");
}

template <class Vec>
QMatrix stack(std::size_t dim, const std::vector<Vec>& vectors) {
  QMatrix m(vectors.size(), dim);
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    if (vectors[i].size() != dim)
      throw DimensionMismatch("spanning vector has wrong dimension");
    for (std::size_t j = 0; j < dim; ++j)
      m(i, j) = vectors[i][j];
  }
  return m;
}

} // namespace

Subspace Subspace::from_rows(AlgebraPtr parent, Side side, const QMatrix& rows) {
  if (!parent)
    throw ParentMismatch("subspace without a parent algebra");
  const std::size_t d = parent->dim();
  if (rows.rows() == 0)
    return Subspace(std::move(parent), side, QMatrix(0, d), {});
  if (rows.cols() != d)
    throw DimensionMismatch("subspace rows have wrong dimension");
  auto ech = rref(rows);
  return Subspace(std::move(parent), side, std::move(ech.reduced), std::move(ech.pivots));
}

Subspace Subspace::zero(AlgebraPtr parent, Side side) {
  return from_rows(std::move(parent), side, QMatrix());
}

Subspace Subspace::full(AlgebraPtr parent, Side side) {
  const std::size_t d = parent->dim();
  return from_rows(std::move(parent), side, QMatrix::identity(d));
}

Subspace Subspace::span(AlgebraPtr parent, const std::vector<Vector>& vectors) {
  const std::size_t d = parent->dim();
  return from_rows(std::move(parent), Side::Primal, stack(d, vectors));
}

Subspace Subspace::span(AlgebraPtr parent, const std::vector<DualVector>& vectors) {
  const std::size_t d = parent->dim();
  return from_rows(std::move(parent), Side::Dual, stack(d, vectors));
}

Vector Subspace::basis_vector(std::size_t a) const {
  auto r = basis_.row(a);
  return Vector(std::vector<Rational>(r.begin(), r.end()));
}

DualVector Subspace::basis_dual(std::size_t a) const {
  auto r = basis_.row(a);
  return DualVector(std::vector<Rational>(r.begin(), r.end()));
}

std::vector<Rational> Subspace::reduce(std::vector<Rational> v) const {
  if (v.size() != ambient_dim())
    throw DimensionMismatch("vector has wrong dimension for subspace");
  for (std::size_t a = 0; a < dim(); ++a) {
    const Rational f = v[pivots_[a]];
    if (sgn(f) == 0)
      continue;
    for (std::size_t j = 0; j < v.size(); ++j)
      v[j] -= f * basis_(a, j);
  }
  return v;
}

std::optional<std::vector<Rational>> Subspace::coordinates(const std::vector<Rational>& v) const {
  auto rest = reduce(v);
  for (const auto& x : rest)
    if (sgn(x) != 0)
      return std::nullopt;
  std::vector<Rational> c(dim());
  for (std::size_t a = 0; a < dim(); ++a)
    c[a] = v[pivots_[a]];
  return c;
}

bool Subspace::contains(const std::vector<Rational>& v) const { return coordinates(v).has_value(); }

bool Subspace::contains(const Vector& v) const {
  if (side_ != Side::Primal)
    throw ParentMismatch("primal vector tested against a subspace of g*");
  return contains(v.values());
}

bool Subspace::contains(const DualVector& v) const {
  if (side_ != Side::Dual)
    throw ParentMismatch("dual vector tested against a subspace of g");
  return contains(v.values());
}

bool Subspace::contains(const Subspace& other) const {
  require_same(*this, other);
  for (std::size_t a = 0; a < other.dim(); ++a) {
    auto r = other.basis_.row(a);
    if (!contains(std::vector<Rational>(r.begin(), r.end())))
      return false;
  }
  return true;
}

Subspace sum(const Subspace& u, const Subspace& v) {
  require_same(u, v);
  QMatrix m(u.dim() + v.dim(), u.ambient_dim());
  for (std::size_t a = 0; a < u.dim(); ++a)
    for (std::size_t j = 0; j < m.cols(); ++j)
      m(a, j) = u.basis()(a, j);
  for (std::size_t a = 0; a < v.dim(); ++a)
    for (std::size_t j = 0; j < m.cols(); ++j)
      m(u.dim() + a, j) = v.basis()(a, j);
  return Subspace::from_rows(u.parent(), u.side(), m);
}

Subspace perp(const Subspace& u) {
  const Side other = u.side() == Side::Primal ? Side::Dual : Side::Primal;
  if (u.dim() == 0)
    return Subspace::full(u.parent(), other);
  return Subspace::from_rows(u.parent(), other, nullspace(u.basis()));
}

Subspace intersect(const Subspace& u, const Subspace& v) {
  require_same(u, v);
  return perp(sum(perp(u), perp(v)));
}

SubalgebraCheck is_subalgebra(const LieAlgebra& a, const Subspace& u) {
  if (u.side() != Side::Primal)
    throw ParentMismatch("subalgebra test needs a subspace of g");
  if (u.ambient_dim() != a.dim())
    throw DimensionMismatch("subspace does not live in " + a.label());
  for (std::size_t i = 0; i < u.dim(); ++i)
    for (std::size_t j = i + 1; j < u.dim(); ++j) {
      Vector b = lie_bracket(a, u.basis_vector(i), u.basis_vector(j));
      if (!u.contains(b))
        return {false, i, j, std::move(b)};
    }
  return {};
}

} // namespace ybfk
