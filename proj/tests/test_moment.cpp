#include "helpers.hpp"

#include "ybfk/error.hpp"
#include "ybfk/moment.hpp"
#include "ybfk/sampling.hpp"

#include <gtest/gtest.h>

using namespace ybfk;
using namespace ybfk::test;

namespace {

CocycleData sl2_cd() { return CocycleData::calibrated(e_wedge_h(), dvec({-1, 0, 0})); }

GroupElement unipotent() { return g2(1, 1, 0, 1); }

// Upper-triangular q in SL(3) with q23 = 0, so s⁻¹ q s is upper triangular too.
GroupElement torus_like_3(Sampler& s) {
  const Rational a = s.nonzero_rational(), d = s.nonzero_rational();
  return GroupElement::from_rows({{a, s.rational(), s.rational()}, {0, d, 0}, {0, 0, Rational(1 / (a * d))}});
}

} // namespace

TEST(CocycleData, CalibrationScalesXi) {
  const CocycleData cd = sl2_cd();
  EXPECT_EQ(cd.scale, q(1, 2));
  EXPECT_EQ(cd.xi, dvec({q(-1, 2), 0, 0}));
  EXPECT_EQ(cd.p.dim(), 2u);
  EXPECT_EQ(CocycleData::uncalibrated(e_wedge_h(), dvec({-1, 0, 0})).scale, 1);
}

TEST(CocycleData, RequiresJordanianCarrier) {
  const auto a = make_sl(2);
  const Bivector ef_h = Bivector::wedge(a, Vector::unit(3, F), Vector::unit(3, H));
  EXPECT_THROW(CocycleData::uncalibrated(ef_h, dvec({0, -1, 0})), Error);
}

TEST(Cocycle, ClosedFormOnB) {
  const CocycleData cd = sl2_cd();
  EXPECT_TRUE(cocycle_B(cd, GroupElement::identity(2)).is_zero());
  Sampler s(1);
  for (int k = 0; k < 50; ++k) {
    const Rational a = s.nonzero_rational(), b = s.rational();
    const Rational ainv = 1 / a;
    // ½[(1 − a⁻²)E* − 2a⁻¹b H*], read modulo F*.
    const DualVector want = dvec({Rational((1 - ainv * ainv) / 2), 0, Rational(-ainv * b)});
    EXPECT_EQ(cocycle_B(cd, borel(a, b)), want);
  }
}

TEST(Cocycle, MembershipEnforced) {
  EXPECT_THROW(cocycle_B(sl2_cd(), s2()), MembershipError);
  EXPECT_THROW(cocycle_defect(sl2_cd(), s2(), unipotent()), MembershipError);
}

TEST(Cocycle, IdentityHoldsOnSamples) {
  const CocycleData cd = sl2_cd();
  EXPECT_EQ(cocycle_defect(cd, GroupElement::identity(2), GroupElement::identity(2)), 0);
  const JordanianR j3 = jordanian_r(3);
  const CocycleData cd3 = CocycleData::calibrated(j3.r, j3.xi);
  Sampler s(2);
  for (int k = 0; k < 40; ++k) {
    const GroupElement g = s.parabolic(2), h = s.parabolic(2);
    EXPECT_EQ(cocycle_defect(cd, g, h), 0);
    EXPECT_EQ(cocycle_defect(cd, g, g.inverse()), 0);
    EXPECT_EQ(cocycle_defect(cd3, s.parabolic(3), s.parabolic(3)), 0);
  }
}

TEST(Cocycle, DerivativeAtIdentityIsRCheckInverse) {
  const CocycleData cd = sl2_cd();
  // d_e B(E) = −H*: zero on E, −1 on H.
  EXPECT_EQ(cocycle_derivative(cd, Vector::unit(3, E)), (std::vector<Rational>{0, -1}));
  EXPECT_EQ(cocycle_derivative_defect(cd, Vector::unit(3, E)), 0);
  EXPECT_EQ(cocycle_derivative_defect(cd, Vector::unit(3, H)), 0);
  EXPECT_THROW(cocycle_derivative(cd, Vector::unit(3, F)), MembershipError);

  // Without calibration the derivative is off by the factor 2.
  const CocycleData raw = CocycleData::uncalibrated(e_wedge_h(), dvec({-1, 0, 0}));
  EXPECT_EQ(cocycle_derivative(raw, Vector::unit(3, E)), (std::vector<Rational>{0, -2}));
  EXPECT_NE(cocycle_derivative_defect(raw, Vector::unit(3, E)), 0);

  for (std::size_t n = 3; n <= 4; ++n) {
    const JordanianR j = jordanian_r(n);
    const CocycleData sp = CocycleData::calibrated(j.r, j.xi);
    EXPECT_EQ(sp.scale, 1);
    for (std::size_t a = 0; a < j.parabolic.dim(); ++a)
      EXPECT_EQ(cocycle_derivative_defect(sp, j.parabolic.basis_vector(a)), 0);
  }
}

TEST(TwistedAction, IsAGroupAction) {
  const CocycleData cd = sl2_cd();
  const DualVector zeta = dvec({q(3, 2), q(-1), q(2, 5)});
  const auto perp_b = perp(cd.p);
  EXPECT_EQ(twisted_action(cd, GroupElement::identity(2), zeta), DualVector(perp_b.reduce(zeta.values())));
  Sampler s(4);
  for (int k = 0; k < 30; ++k) {
    const GroupElement g = s.parabolic(2), h = s.parabolic(2);
    EXPECT_EQ(twisted_action(cd, g, twisted_action(cd, h, zeta)), twisted_action(cd, g * h, zeta));
  }
}

TEST(OrbitDimension, PlainCoadjointOrbitsOfB) {
  const Subspace b = jordanian_parabolic(make_sl(2));
  for (int alpha = -2; alpha <= 2; ++alpha)
    EXPECT_EQ(orbit_dimension(b, dvec({0, 0, q(alpha)})), 0u);
  EXPECT_EQ(orbit_dimension(b, dvec({1, 0, 0})), 2u);
  EXPECT_EQ(orbit_dimension(b, dvec({1, 0, 1})), 2u);
  // The F* component is invisible on b.
  EXPECT_EQ(orbit_dimension(b, dvec({0, 5, 1})), 0u);
}

TEST(OrbitDimension, TwistedShiftsByCalibratedXi) {
  const CocycleData cd = sl2_cd();
  // ad*_x ζ + ř⁻¹(x) = ad*_x(ζ + ξ_cal) on b.
  EXPECT_EQ(orbit_dimension(cd, q(-1) * cd.xi), 0u);
  EXPECT_EQ(orbit_dimension(cd, dvec({0, 0, 3})), 2u);
  EXPECT_EQ(orbit_dimension(cd, dvec({q(1, 2), 0, 7})), 0u);
}

TEST(CarrierPair, Examples) {
  const auto sl2 = make_sl(2);
  const Subspace b = jordanian_parabolic(sl2);
  const Subspace bs = carrier_pair_subalgebra(b, s2());
  EXPECT_EQ(bs, Subspace::span(sl2, std::vector<Vector>{Vector::unit(3, H)}));
  EXPECT_EQ(carrier_pair_subalgebra(b, GroupElement::identity(2)), b);
  for (std::size_t n = 3; n <= 4; ++n) {
    const Subspace p = jordanian_parabolic(make_sl(n));
    EXPECT_EQ(carrier_pair_subalgebra(p, weyl_representative(n)).dim(), n * n - 2 * n + 1);
  }
}

TEST(MomentMap, Examples) {
  const CocycleData cd = sl2_cd();
  const GroupElement e = GroupElement::identity(2);
  EXPECT_TRUE(moment_J_t(cd, e, e, s2()).is_zero());
  EXPECT_TRUE(moment_J_t(cd, e, e, e).is_zero());
  const DualCoset j = moment_J_t(cd, e, unipotent(), s2());
  EXPECT_EQ(j.representative(), dvec({0, 0, 1})); // calibrated H*
  EXPECT_EQ(j, DualCoset(dvec({7, -3, 1}), j.quotient()));
  EXPECT_THROW(moment_J_t(cd, s2(), e, s2()), MembershipError);
}

TEST(MomentMap, MatchesClosedFormOnBxB) {
  const CocycleData cd = sl2_cd();
  Sampler s(6);
  for (int k = 0; k < 50; ++k) {
    const GroupElement g1 = s.parabolic(2), g2_ = s.parabolic(2);
    EXPECT_EQ(moment_J_t(cd, g1, g2_, s2()).representative()[H], sl2_I_s(g1, g2_).calibrated);
  }
}

TEST(MomentMap, EquivariantAlongPairSubgroup) {
  // J_t(q p1, t⁻¹qt p2) = Ad*_q J_t(p1, p2) + J_t(q, t⁻¹qt) for q ∈ P ∩ tPt⁻¹.
  auto check = [](const CocycleData& cd, const GroupElement& t, const GroupElement& q_, const GroupElement& p1,
                  const GroupElement& p2) {
    const GroupElement qt = t.inverse() * q_ * t;
    const DualCoset lhs = moment_J_t(cd, q_ * p1, qt * p2, t);
    const DualVector rhs = coadjoint(cd.algebra(), q_, moment_J_t(cd, p1, p2, t).representative()) +
                           moment_J_t(cd, q_, qt, t).representative();
    EXPECT_EQ(lhs, DualCoset(rhs, lhs.quotient()));
  };
  Sampler s(12);
  const CocycleData cd2 = sl2_cd();
  const JordanianR j3 = jordanian_r(3);
  const CocycleData cd3 = CocycleData::calibrated(j3.r, j3.xi);
  for (int k = 0; k < 20; ++k) {
    const Rational a = s.nonzero_rational();
    check(cd2, s2(), borel(a, 0), s.parabolic(2), s.parabolic(2));
    check(cd2, GroupElement::identity(2), s.parabolic(2), s.parabolic(2), s.parabolic(2));
    check(cd3, weyl_representative(3), torus_like_3(s), s.parabolic(3), s.parabolic(3));
    check(cd3, GroupElement::identity(3), s.parabolic(3), s.parabolic(3), s.parabolic(3));
  }
}

TEST(Nu, ExamplesAndFibers) {
  const GroupElement e = GroupElement::identity(2);
  EXPECT_EQ(nu_t(e, e, s2()), s2());
  EXPECT_EQ(nu_t(e, unipotent(), s2()), g2(0, 1, -1, -1));
  const GroupElement g = borel(3, 2);
  EXPECT_EQ(nu_t(g, g, e), e);
  EXPECT_THROW(nu_t(s2(), e, e), MembershipError);

  Sampler s(13);
  for (int k = 0; k < 30; ++k) {
    const GroupElement p1 = s.parabolic(2), p2 = s.parabolic(2), q_ = borel(s.nonzero_rational(), 0);
    const GroupElement v = nu_t(p1, p2, s2());
    EXPECT_EQ(v, nu_t(q_ * p1, s2().inverse() * q_ * s2() * p2, s2()));
    EXPECT_EQ(coset_classify(v), CosetLabel::Transposition);
  }
}

TEST(Reduction, ClosedFormExamples) {
  const GroupElement e = GroupElement::identity(2);
  EXPECT_EQ(sl2_I_s(e, e).alpha, 0);
  EXPECT_EQ(sl2_I_s(e, unipotent()).alpha, 2);
  EXPECT_EQ(sl2_I_s(e, unipotent()).calibrated, 1);
  EXPECT_EQ(sl2_I_s(borel(2, 1), e).alpha, 1);
  EXPECT_EQ(reduction_residual(e, e), 0);
  EXPECT_EQ(reduction_residual(e, unipotent()), 0);
  EXPECT_THROW(sl2_I_s(s2(), e), MembershipError);
}

TEST(Reduction, ResidualVanishesOnSamples) {
  Sampler s(14);
  for (int k = 0; k < 200; ++k)
    EXPECT_EQ(reduction_residual(s.parabolic(2), s.parabolic(2)), 0);
}

TEST(MomentProperty, CalibratedVanishesUncalibratedDoesNot) {
  const CocycleData cal = sl2_cd();
  const CocycleData raw = CocycleData::uncalibrated(e_wedge_h(), dvec({-1, 0, 0}));
  EXPECT_EQ(moment_property_residual(cal, Vector(3), borel(3, 1)), 0);
  Sampler s(15);
  for (int k = 0; k < 30; ++k) {
    const GroupElement g = s.parabolic(2);
    EXPECT_EQ(moment_property_residual(cal, Vector::unit(3, E), g), 0);
    EXPECT_EQ(moment_property_residual(cal, Vector::unit(3, H), g), 0);
  }
  EXPECT_NE(moment_property_residual(raw, Vector::unit(3, E), borel(2, 1)), 0);
  EXPECT_THROW(moment_property_residual(cal, Vector::unit(3, F), borel(2, 1)), MembershipError);
  EXPECT_THROW(moment_property_residual(cal, Vector::unit(3, E), s2()), MembershipError);
}

TEST(MomentProperty, JordanianThree) {
  const JordanianR j = jordanian_r(3);
  const CocycleData cd = CocycleData::calibrated(j.r, j.xi);
  Sampler s(16);
  for (int k = 0; k < 5; ++k) {
    const GroupElement g = s.parabolic(3);
    for (std::size_t a = 0; a < j.parabolic.dim(); ++a)
      EXPECT_EQ(moment_property_residual(cd, j.parabolic.basis_vector(a), g), 0);
  }
}
