#include "helpers.hpp"

#include "ybfk/error.hpp"
#include "ybfk/sampling.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace ybfk;
using namespace ybfk::test;

TEST(GroupElement, EnforcesDeterminantOne) {
  EXPECT_THROW(g2(1, 2, 3, 4), MembershipError);
  EXPECT_THROW(GroupElement(QMatrix(2, 3)), DimensionMismatch);
  const GroupElement g = g2(2, 1, 3, 2);
  EXPECT_EQ(g * g.inverse(), GroupElement::identity(2));
}

TEST(GroupElement, ParsePoint) {
  EXPECT_EQ(parse_point("1,5;0,1"), g2(1, 5, 0, 1));
  EXPECT_EQ(parse_point(" 2 , 0 ; 0 , 1/2 "), borel(2, 0));
  EXPECT_THROW(parse_point("1,2;3"), ParseError);
  EXPECT_THROW(parse_point("1,x;0,1"), ParseError);
  EXPECT_THROW(parse_point("1,2;3,4"), MembershipError);
}

TEST(Adjoint, ConjugationConventions) {
  const auto a = make_sl(2);
  const GroupElement g = borel(2, 0); // diag(2, 1/2)
  // Ad_g E = g E g⁻¹ = 4E.
  EXPECT_EQ(adjoint(*a, g, Vector::unit(3, E)), q(4) * Vector::unit(3, E));
  // ⟨Ad*_g E*, E⟩ = ⟨E*, Ad_{g⁻¹}E⟩ = 1/4.
  EXPECT_EQ(coadjoint(*a, g, DualVector::unit(3, E)), q(1, 4) * DualVector::unit(3, E));
}

TEST(Adjoint, IsAHomomorphism) {
  const auto a = make_sl(3);
  Sampler s(7);
  for (int k = 0; k < 20; ++k) {
    const GroupElement g = s.group(3), h = s.group(3);
    EXPECT_EQ(adjoint_matrix(*a, g * h), adjoint_matrix(*a, g) * adjoint_matrix(*a, h));
    const DualVector xi = dvec({1, 2, 3, 4, 5, 6, 7, 8});
    EXPECT_EQ(coadjoint(*a, g * h, xi), coadjoint(*a, g, coadjoint(*a, h, xi)));
  }
}

TEST(Exponential, ExactForNilpotentOnly) {
  const auto a = make_sl(2);
  EXPECT_EQ(exponential_exact(*a, q(3) * Vector::unit(3, E)), g2(1, 3, 0, 1));
  EXPECT_THROW(exponential_exact(*a, Vector::unit(3, H)), NotNilpotent);
}

TEST(Exponential, FloatMatchesClosedForm) {
  Matrix<double> x(2, 2);
  x(0, 0) = 0.5;
  x(1, 1) = -0.5;
  const auto e = exponential_float(x);
  EXPECT_NEAR(e(0, 0), std::exp(0.5), 1e-12);
  EXPECT_NEAR(e(1, 1), std::exp(-0.5), 1e-12);
  EXPECT_NEAR(e(0, 1), 0.0, 1e-15);
}

namespace {

// Independent oracle: g ∈ P iff the row e_nᵀ g is proportional to e_nᵀ,
// decided by the rank of the stacked 2×n matrix.
bool in_parabolic_by_elimination(const GroupElement& g) {
  const std::size_t n = g.size();
  QMatrix rows(2, n);
  rows(0, n - 1) = 1;
  for (std::size_t j = 0; j < n; ++j)
    rows(1, j) = g(n - 1, j);
  return rank(rows) == 1;
}

} // namespace

TEST(Cosets, LabelsAgreeWithEliminationOracle) {
  for (std::size_t n = 2; n <= 4; ++n) {
    Sampler s(100 + n);
    for (int k = 0; k < 200; ++k) {
      const GroupElement g = k % 3 == 0 ? s.parabolic(n) : (k % 3 == 1 ? s.big_cell(n) : s.group(n));
      const bool identity = coset_classify(g) == CosetLabel::Identity;
      EXPECT_EQ(identity, in_parabolic_by_elimination(g));
    }
  }
}

TEST(Cosets, RepresentativesAndStrata) {
  for (std::size_t n = 2; n <= 4; ++n) {
    EXPECT_EQ(coset_classify(GroupElement::identity(n)), CosetLabel::Identity);
    EXPECT_EQ(coset_classify(weyl_representative(n)), CosetLabel::Transposition);
    Sampler s(n);
    for (int k = 0; k < 50; ++k) {
      EXPECT_EQ(coset_classify(s.parabolic(n)), CosetLabel::Identity);
      EXPECT_EQ(coset_classify(s.big_cell(n)), CosetLabel::Transposition);
    }
  }
  EXPECT_EQ(to_string(CosetLabel::Transposition), "Transposition");
}

TEST(Sampling, DeterministicPerSeed) {
  EXPECT_EQ(sample_group(3, 42), sample_group(3, 42));
  EXPECT_NE(sample_seed(0, 1), sample_seed(0, 2));
  Sampler a(5), b(5);
  for (int k = 0; k < 10; ++k)
    EXPECT_EQ(a.group(2), b.group(2));
}

TEST(Sampling, ZPointsAreUnipotentUpToSign) {
  Sampler s(9);
  for (int k = 0; k < 50; ++k) {
    const GroupElement z = s.z_point();
    EXPECT_EQ(z(1, 0), 0);
    EXPECT_EQ(z(0, 0) * z(0, 0), 1);
    EXPECT_EQ(z(0, 0), z(1, 1));
  }
}
