#include "helpers.hpp"

#include "ybfk/error.hpp"

#include <gtest/gtest.h>

using namespace ybfk;
using namespace ybfk::test;

namespace {

Subspace borel_subspace() { return jordanian_parabolic(make_sl(2)); }

} // namespace

TEST(Bivector, WedgeIsAntisymmetric) {
  const auto a = make_sl(2);
  const Bivector r = Bivector::wedge(a, Vector::unit(3, E), Vector::unit(3, H));
  EXPECT_EQ(r.entry(E, H), 1);
  EXPECT_EQ(r.entry(H, E), -1);
  EXPECT_EQ(Bivector::wedge(a, Vector::unit(3, H), Vector::unit(3, E)), -r);
  EXPECT_EQ(Bivector::from_matrix(a, r.matrix()), r);
  EXPECT_THROW(Bivector::from_matrix(a, QMatrix::identity(3)), Error);
}

TEST(Cybe, ExamplesFromTheSl2Family) {
  EXPECT_TRUE(cybe_defect(e_wedge_h()).is_zero());
  EXPECT_GT(cybe_defect(builtin_bivector("sl2-nonsolution")).nnz(), 0u);
  EXPECT_TRUE(cybe_defect(Bivector(make_sl(2))).is_zero());
}

TEST(Cybe, JordanianFamilySolvesCybe) {
  for (std::size_t n = 2; n <= 4; ++n)
    EXPECT_TRUE(cybe_defect(jordanian_r(n).r).is_zero()) << "n=" << n;
}

TEST(Carrier, MatchesComponentSpan) {
  const Subspace b = carrier(e_wedge_h());
  EXPECT_EQ(b.dim(), 2u);
  EXPECT_TRUE(b.contains(Vector::unit(3, E)));
  EXPECT_TRUE(b.contains(Vector::unit(3, H)));
  EXPECT_EQ(carrier(Bivector(make_sl(2))).dim(), 0u);
  for (std::size_t n = 2; n <= 4; ++n) {
    const JordanianR j = jordanian_r(n);
    const Subspace p = carrier(j.r);
    EXPECT_EQ(p.dim(), n * n - n);
    EXPECT_EQ(p, j.parabolic);
    EXPECT_TRUE(is_subalgebra(*j.r.parent(), p).ok);
  }
}

TEST(RCheck, InverseOnCarrier) {
  const Bivector r = e_wedge_h();
  // ř(ξ)_v = Σ_u ξ_u r^{uv}: ř(E*) = H, ř(H*) = −E.
  EXPECT_EQ(r_check(r, DualVector::unit(3, E)), Vector::unit(3, H));
  EXPECT_EQ(r_check(r, DualVector::unit(3, H)), -Vector::unit(3, E));
  // ř⁻¹(E) = −H*, read on the carrier basis (E, H).
  EXPECT_EQ(r_check_inverse(r, Vector::unit(3, E)), (std::vector<Rational>{0, -1}));
}

TEST(BetaForm, EWedgeH) {
  const BetaForm b = beta_form(e_wedge_h());
  // Carrier basis (E, H): β(E, H) = 1.
  EXPECT_EQ(b.form.matrix(0, 1), 1);
  EXPECT_EQ(b.form.matrix(1, 0), -1);
  EXPECT_EQ(b.form.matrix(0, 0), 0);
  ASSERT_TRUE(b.cocycle_defect.has_value());
  EXPECT_EQ(*b.cocycle_defect, 0);
}

TEST(BetaForm, CocycleVanishesForJordanian) {
  for (std::size_t n = 2; n <= 4; ++n) {
    const BetaForm b = beta_form(jordanian_r(n).r);
    ASSERT_TRUE(b.cocycle_defect.has_value());
    EXPECT_EQ(*b.cocycle_defect, 0) << "n=" << n;
  }
}

TEST(BetaForm, UndefinedCocycleWhenCarrierIsNotClosed) {
  const BetaForm b = beta_form(builtin_bivector("sl2-nonsolution"));
  EXPECT_FALSE(b.cocycle_defect.has_value());
}

TEST(BetaForm, CarrierRestrictionIsNondegenerate) {
  // The carrier is the row space of r, so r restricted to it has full rank.
  const auto a = make_sl(2);
  const Bivector r = Bivector::wedge(a, Vector::unit(3, E) + Vector::unit(3, F), Vector::unit(3, H));
  const BetaForm b = beta_form(r);
  EXPECT_EQ(b.form.matrix.rows(), 2u);
  EXPECT_NE(determinant(b.form.matrix), 0);
}

TEST(Calibration, HalfForMinusEStar) {
  EXPECT_EQ(calibrate_frobenius(e_wedge_h(), dvec({-1, 0, 0})), q(1, 2));
}

TEST(Calibration, DegenerateAndNonProportionalCases) {
  EXPECT_THROW(calibrate_frobenius(e_wedge_h(), dvec({0, 0, 1})), Degenerate);
  // The Cartan of sl(3) is abelian, so ⟨ξ, [x, y]⟩ vanishes on it.
  const auto a = make_sl(3);
  const std::size_t h1 = 6, h2 = 7;
  const Bivector cartan = Bivector::wedge(a, Vector::unit(8, h1), Vector::unit(8, h2));
  EXPECT_THROW(calibrate_frobenius(cartan, DualVector::unit(8, h1)), Degenerate);
}

TEST(FrobeniusToR, HalfEWedgeHAndScalingLaw) {
  const Subspace b = borel_subspace();
  const Bivector r = frobenius_to_r(b, dvec({-1, 0, 0}));
  EXPECT_EQ(r, q(1, 2) * e_wedge_h());
  EXPECT_EQ(frobenius_to_r(b, dvec({-2, 0, 0})), q(1, 4) * e_wedge_h());
  const DualVector xi = dvec({q(-3, 7), 0, q(5)});
  EXPECT_EQ(frobenius_to_r(b, q(3) * xi), q(1, 3) * frobenius_to_r(b, xi));
}

TEST(FrobeniusToR, RoundTripThroughBeta) {
  const JordanianR j = jordanian_r(3);
  const Bivector r = frobenius_to_r(j.parabolic, j.xi);
  EXPECT_EQ(beta_form(r).form.matrix, frobenius_form(j.parabolic, j.xi));
  EXPECT_EQ(calibrate_frobenius(r, j.xi), 1);
}

TEST(FrobeniusToR, RejectsNonSubalgebra) {
  const auto a = make_sl(2);
  const Subspace ef = Subspace::span(a, std::vector<Vector>{Vector::unit(3, E), Vector::unit(3, F)});
  EXPECT_THROW(frobenius_to_r(ef, dvec({0, 0, 1})), Error);
}

TEST(Jordanian, SmallestCase) {
  const JordanianR j = jordanian_r(2);
  EXPECT_EQ(j.r, q(1, 4) * e_wedge_h());
  EXPECT_EQ(j.xi, dvec({-2, 0, 0}));
  EXPECT_TRUE(j.cross_check.proportional);
  ASSERT_TRUE(j.cross_check.scalar.has_value());
  EXPECT_EQ(*j.cross_check.scalar, -4);
  // Projected closed form at n = 2 is H∧E.
  EXPECT_EQ(j.cross_check.closed_form, -e_wedge_h());
}

TEST(Jordanian, RejectsSmallN) { EXPECT_THROW(jordanian_r(1), Error); }

TEST(Jordanian, ClosedFormIsAntisymmetricInGl) {
  const QMatrix m = jordanian_closed_form_gl(3);
  EXPECT_EQ(m.transpose(), -m);
}
