#include "helpers.hpp"

#include "ybfk/error.hpp"
#include "ybfk/subspace.hpp"

#include <gtest/gtest.h>

using namespace ybfk;
using namespace ybfk::test;

TEST(LieAlgebra, Sl2StructureConstants) {
  const auto a = make_sl(2);
  EXPECT_EQ(a->basis_names(), (std::vector<std::string>{"E", "F", "H"}));
  EXPECT_EQ(lie_bracket(*a, Vector::unit(3, E), Vector::unit(3, F)), Vector::unit(3, H));
  EXPECT_EQ(lie_bracket(*a, Vector::unit(3, H), Vector::unit(3, E)), q(2) * Vector::unit(3, E));
  EXPECT_EQ(lie_bracket(*a, Vector::unit(3, H), Vector::unit(3, F)), q(-2) * Vector::unit(3, F));
  EXPECT_TRUE(validate(*a).ok());
}

TEST(LieAlgebra, BuiltinsValidateAndHaveExpectedDimensions) {
  for (std::size_t n = 2; n <= 4; ++n) {
    EXPECT_EQ(make_sl(n)->dim(), n * n - 1);
    EXPECT_EQ(make_gl(n)->dim(), n * n);
    EXPECT_EQ(make_jordanian_parabolic(n)->dim(), n * n - n);
    EXPECT_TRUE(validate(*make_sl(n)).ok());
    EXPECT_TRUE(validate(*make_jordanian_parabolic(n)).ok());
  }
  EXPECT_EQ(builtin_algebra("sl(3)")->dim(), 8u);
  EXPECT_THROW(builtin_algebra("so3"), ParseError);
}

TEST(LieAlgebra, JacobiViolationIsReported) {
  // [e0,e1] = e2, [e1,e2] = e1: the Jacobi sum on (e0,e1,e2) is e2.
  const LieAlgebra bad("bad", {"a", "b", "c"},
                       {{0, 1, {{2, q(1)}}}, {1, 2, {{1, q(1)}}}});
  const auto report = validate(bad);
  EXPECT_TRUE(report.antisymmetric);
  EXPECT_FALSE(report.jacobi);
  EXPECT_FALSE(report.witness.empty());
}

TEST(LieAlgebra, CoordinatesRoundTripAndRejectOutsiders) {
  const auto a = make_sl(3);
  const Vector x = vec({1, 2, 3, 4, 5, 6, 7, 8});
  EXPECT_EQ(a->coordinates(a->to_matrix(x)), x);
  EXPECT_FALSE(a->coordinates(QMatrix::identity(3)).has_value());
}

TEST(LieAlgebra, CoadjointSignConvention) {
  const auto a = make_sl(2);
  // ⟨ad*_E(−E*), H⟩ = ⟨E*, [E, H]⟩ = −2.
  const DualVector v = ad_star(*a, Vector::unit(3, E), dvec({-1, 0, 0}));
  EXPECT_EQ(v, dvec({0, 0, -2}));
}

TEST(Subspace, SumIntersectPerp) {
  const auto a = make_sl(2);
  const Subspace b = Subspace::span(a, std::vector<Vector>{Vector::unit(3, E), Vector::unit(3, H)});
  const Subspace n = Subspace::span(a, std::vector<Vector>{Vector::unit(3, F), Vector::unit(3, H)});
  EXPECT_EQ(intersect(b, n).dim(), 1u);
  EXPECT_TRUE(intersect(b, n).contains(Vector::unit(3, H)));
  EXPECT_EQ(sum(b, n).dim(), 3u);
  const Subspace bp = perp(b);
  EXPECT_EQ(bp.side(), Side::Dual);
  EXPECT_EQ(bp.dim(), 1u);
  EXPECT_TRUE(bp.contains(dvec({0, 1, 0})));
  EXPECT_EQ(perp(bp), b);
}

TEST(Subspace, ReduceGivesCanonicalCosetRepresentative) {
  const auto a = make_sl(2);
  const Subspace u = Subspace::span(a, std::vector<DualVector>{dvec({1, 1, 0})});
  const auto r1 = u.reduce({3, 0, 5});
  const auto r2 = u.reduce({q(5), q(2), q(5)}); // differs by 2·(1,1,0)
  EXPECT_EQ(r1, r2);
}

TEST(Subspace, SubalgebraCheck) {
  const auto a = make_sl(2);
  EXPECT_TRUE(is_subalgebra(*a, Subspace::span(a, std::vector<Vector>{Vector::unit(3, E), Vector::unit(3, H)})).ok);
  const auto bad = is_subalgebra(*a, Subspace::span(a, std::vector<Vector>{Vector::unit(3, E), Vector::unit(3, F)}));
  EXPECT_FALSE(bad.ok);
  EXPECT_EQ(bad.bracket, Vector::unit(3, H));
}
