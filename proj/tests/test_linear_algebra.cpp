#include "helpers.hpp"

#include "ybfk/error.hpp"
#include "ybfk/matrix.hpp"
#include "ybfk/rational.hpp"

#include <gtest/gtest.h>

using namespace ybfk;
using ybfk::test::q;

TEST(Rational, ParsesFractionsIntegersAndDecimals) {
  EXPECT_EQ(parse_rational("3/4"), q(3, 4));
  EXPECT_EQ(parse_rational("-6/8"), q(-3, 4));
  EXPECT_EQ(parse_rational("+7"), q(7));
  EXPECT_EQ(parse_rational("0.125"), q(1, 8));
  EXPECT_EQ(parse_rational("-.5"), q(-1, 2));
  EXPECT_EQ(to_string(q(-2, 6)), "-1/3");
}

TEST(Rational, RejectsMalformedInput) {
  for (const char* bad : {"", "1/0", "a", "1/2/3", "1.2.3", "--1", "/3", "."})
    EXPECT_THROW(parse_rational(bad), ParseError) << bad;
}

TEST(Matrix, RankDeterminantAndNullspace) {
  const QMatrix m = QMatrix::from_rows({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}});
  EXPECT_EQ(rank(m), 2u);
  EXPECT_EQ(determinant(m), 0);
  const QMatrix k = nullspace(m);
  ASSERT_EQ(k.rows(), 1u);
  const auto row = k.row(0);
  const auto image = m * std::vector<Rational>(row.begin(), row.end());
  for (const auto& x : image)
    EXPECT_EQ(x, 0);

  const QMatrix a = QMatrix::from_rows({{2, 1}, {7, 4}});
  EXPECT_EQ(determinant(a), 1);
  EXPECT_EQ(a * inverse(a), QMatrix::identity(2));
  EXPECT_THROW(inverse(m), Degenerate);
}

TEST(Matrix, RrefPivotsAreLeftmost) {
  const Echelon e = rref(QMatrix::from_rows({{0, 2, 4}, {0, 1, 3}}));
  EXPECT_EQ(e.pivots, (std::vector<std::size_t>{1, 2}));
  EXPECT_EQ(e.reduced(0, 1), 1);
  EXPECT_EQ(e.reduced(0, 2), 0);
}

TEST(Dual, InverseCarriesFirstOrderPerturbation) {
  using D = Dual<Rational>;
  // (I + εX)⁻¹ = I − εX exactly to first order.
  Matrix<D> g(2, 2);
  g(0, 0) = D{1, 0};
  g(0, 1) = D{0, 3};
  g(1, 0) = D{0, -1};
  g(1, 1) = D{1, 2};
  const Matrix<D> inv = inverse(g);
  EXPECT_EQ(inv(0, 0), (D{1, 0}));
  EXPECT_EQ(inv(0, 1), (D{0, -3}));
  EXPECT_EQ(inv(1, 0), (D{0, 1}));
  EXPECT_EQ(inv(1, 1), (D{1, -2}));
  // A pure infinitesimal is not a unit but is not zero either.
  EXPECT_FALSE(is_zero(D{0, 1}));
  EXPECT_FALSE(is_unit(D{0, 1}));
}
