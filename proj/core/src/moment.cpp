#include "ybfk/moment.hpp"

#include "ybfk/error.hpp"
#include "ybfk/poisson.hpp"

namespace ybfk {

namespace {

using D = Dual<Rational>;

Subspace checked_carrier(const Bivector& r) {
  const AlgebraPtr& a = r.parent();
  a->require_realized();
  Subspace p = carrier(r);
  if (!(p == jordanian_parabolic(a)))
    throw Error("cocycle data needs an r-matrix carried by the Jordanian parabolic");
  return p;
}

DualVector reduce_mod(const Subspace& u, const DualVector& v) { return DualVector(u.reduce(v.values())); }

// Values of a functional on the basis of p.
std::vector<Rational> restrict_to(const Subspace& p, const DualVector& v) {
  std::vector<Rational> out;
  out.reserve(p.dim());
  for (std::size_t a = 0; a < p.dim(); ++a)
    out.push_back(pair(v, p.basis_vector(a)));
  return out;
}

DualVector ad_star_group(const LieAlgebra& a, const GroupElement& g, const DualVector& xi) {
  return coadjoint(a, g, xi);
}

} // namespace

CocycleData CocycleData::calibrated(const Bivector& r, const DualVector& xi) {
  Subspace p = checked_carrier(r);
  const Rational c = calibrate_frobenius(r, xi);
  return {r, std::move(p), c * xi, c};
}

CocycleData CocycleData::uncalibrated(const Bivector& r, const DualVector& xi) {
  Subspace p = checked_carrier(r);
  if (xi.size() != r.dim())
    throw DimensionMismatch("functional size does not match the algebra");
  return {r, std::move(p), xi, Rational(1)};
}

DualCoset::DualCoset(const DualVector& value, Subspace quotient)
    : rep_(quotient.reduce(value.values())), quotient_(std::move(quotient)) {
  if (quotient_.side() != Side::Dual)
    throw ParentMismatch("dual cosets are taken modulo a subspace of the dual");
}

void require_in_parabolic(const CocycleData& cd, const GroupElement& g) {
  if (g.size() != cd.algebra().matrix_size())
    throw DimensionMismatch("group element size does not match the algebra");
  if (!in_jordanian_parabolic(g))
    throw MembershipError("group element is not in the Jordanian parabolic: " + to_string(g));
}

DualVector cocycle_B(const CocycleData& cd, const GroupElement& g) {
  require_in_parabolic(cd, g);
  return reduce_mod(perp(cd.p), ad_star_group(cd.algebra(), g, cd.xi) - cd.xi);
}

Rational cocycle_defect(const CocycleData& cd, const GroupElement& g, const GroupElement& h) {
  const DualVector lhs = cocycle_B(cd, g * h);
  const DualVector rhs = ad_star_group(cd.algebra(), g, cocycle_B(cd, h)) + cocycle_B(cd, g);
  const auto diff = perp(cd.p).reduce((lhs - rhs).values());
  return max_abs(std::span<const Rational>(diff));
}

std::vector<Rational> cocycle_derivative(const CocycleData& cd, const Vector& x) {
  const LieAlgebra& a = cd.algebra();
  if (!cd.p.contains(x))
    throw MembershipError("direction is not in the carrier");
  const std::size_t n = a.matrix_size();
  const QMatrix xm = a.to_matrix(x);
  Matrix<D> g(n, n), ginv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Rational id = i == j ? 1 : 0;
      g(i, j) = D{id, xm(i, j)};
      ginv(i, j) = D{id, Rational(-xm(i, j))}; // (I + εX)⁻¹ = I − εX
    }
  const auto ad = coadjoint_as<D>(a, g, ginv, std::span<const Rational>(cd.xi.values()));
  DualVector d(a.dim());
  for (std::size_t k = 0; k < a.dim(); ++k)
    d[k] = ad[k].d;
  return restrict_to(cd.p, d);
}

Rational cocycle_derivative_defect(const CocycleData& cd, const Vector& x) {
  const auto got = cocycle_derivative(cd, x);
  const auto want = r_check_inverse(cd.r, x);
  Rational worst = 0;
  for (std::size_t k = 0; k < got.size(); ++k)
    worst = std::max(worst, abs_value(got[k] - want[k]));
  return worst;
}

DualVector twisted_action(const CocycleData& cd, const GroupElement& g, const DualVector& zeta) {
  const DualVector b = cocycle_B(cd, g);
  return reduce_mod(perp(cd.p), ad_star_group(cd.algebra(), g, zeta) + b);
}

namespace {

std::size_t orbit_rank(const Subspace& p, const DualVector& zeta, const Bivector* twist) {
  const LieAlgebra& a = *p.parent();
  if (zeta.size() != a.dim())
    throw DimensionMismatch("functional size does not match the algebra");
  QMatrix rows(p.dim(), p.dim());
  for (std::size_t i = 0; i < p.dim(); ++i) {
    const Vector x = p.basis_vector(i);
    auto row = restrict_to(p, ad_star(a, x, zeta));
    if (twist) {
      const auto gamma = r_check_inverse(*twist, x);
      for (std::size_t j = 0; j < row.size(); ++j)
        row[j] += gamma[j];
    }
    for (std::size_t j = 0; j < row.size(); ++j)
      rows(i, j) = row[j];
  }
  return rank(rows);
}

} // namespace

std::size_t orbit_dimension(const Subspace& p, const DualVector& zeta) {
  return orbit_rank(p, zeta, nullptr);
}

std::size_t orbit_dimension(const CocycleData& cd, const DualVector& zeta) {
  return orbit_rank(cd.p, zeta, &cd.r);
}

Subspace carrier_pair_subalgebra(const Subspace& p, const GroupElement& t) {
  const LieAlgebra& a = *p.parent();
  std::vector<Vector> image;
  image.reserve(p.dim());
  for (std::size_t k = 0; k < p.dim(); ++k)
    image.push_back(adjoint(a, t, p.basis_vector(k)));
  return intersect(p, Subspace::span(p.parent(), image));
}

DualCoset moment_J_t(const CocycleData& cd, const GroupElement& p1, const GroupElement& p2,
                     const GroupElement& t) {
  const DualVector value = ad_star_group(cd.algebra(), t, cocycle_B(cd, p2)) - cocycle_B(cd, p1);
  return DualCoset(value, perp(carrier_pair_subalgebra(cd.p, t)));
}

GroupElement nu_t(const GroupElement& p1, const GroupElement& p2, const GroupElement& t) {
  for (const auto* g : {&p1, &p2})
    if (!in_jordanian_parabolic(*g))
      throw MembershipError("nu_t arguments must lie in the parabolic: " + to_string(*g));
  return p1.inverse() * t * p2;
}

namespace {

void require_borel(const GroupElement& g) {
  if (g.size() != 2 || sgn(g(1, 0)) != 0)
    throw MembershipError("expected an upper-triangular point of SL(2): " + to_string(g));
}

} // namespace

ISValue sl2_I_s(const GroupElement& g1, const GroupElement& g2) {
  require_borel(g1);
  require_borel(g2);
  const Rational alpha = 2 * (g1(0, 1) / g1(0, 0) + g2(0, 1) / g2(0, 0));
  return {alpha, alpha / 2};
}

Rational reduction_residual(const GroupElement& g1, const GroupElement& g2) {
  const Rational alpha = sl2_I_s(g1, g2).alpha;
  const GroupElement g = nu_t(g1, g2, weyl_representative(2));
  return 2 * (g(0, 0) - g(1, 1)) + alpha * g(1, 0);
}

Rational moment_property_residual(const CocycleData& cd, const Vector& x, const GroupElement& g) {
  require_in_parabolic(cd, g);
  if (!cd.p.contains(x))
    throw MembershipError("direction is not in the carrier");
  const LieAlgebra& a = cd.algebra();
  const std::size_t n = g.size();

  // ∇_g ⟨Ad*_g ξ, x⟩ entrywise; the constant −⟨ξ, x⟩ drops out.
  std::vector<Rational> grad(n * n);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t l = 0; l < n; ++l) {
      Matrix<D> gd(n, n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          gd(i, j) = D{g(i, j), Rational(i == k && j == l ? 1 : 0)};
      const Matrix<D> ginv = inverse(gd);
      const auto ad = coadjoint_as<D>(a, gd, ginv, std::span<const Rational>(cd.xi.values()));
      D f{0, 0};
      for (std::size_t q = 0; q < a.dim(); ++q)
        if (sgn(x[q]) != 0)
          f += ad[q] * D{x[q], 0};
      grad[k * n + l] = f.d;
    }

  const QMatrix pi = left_bivector(cd.r, g).pi;
  const auto field = pi * grad;
  const QMatrix xg = a.to_matrix(x) * g.matrix();
  Rational worst = 0;
  for (std::size_t q = 0; q < n * n; ++q)
    worst = std::max(worst, abs_value(field[q] - xg.flat()[q]));
  return worst;
}

} // namespace ybfk
