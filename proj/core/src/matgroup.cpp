#include "ybfk/matgroup.hpp"

#include "ybfk/error.hpp"

#include <cmath>
#include <sstream>

namespace ybfk {

GroupElement::GroupElement(QMatrix m) : m_(std::move(m)) {
  if (!m_.square() || m_.rows() == 0)
    throw DimensionMismatch("group element must be a non-empty square matrix");
  if (determinant(m_) != 1)
    throw MembershipError("matrix is not in SL(n): det = " + determinant(m_).get_str());
}

GroupElement GroupElement::identity(std::size_t n) { return {QMatrix::identity(n), Trusted{}}; }

GroupElement GroupElement::from_rows(const std::vector<std::vector<Rational>>& rows) {
  return GroupElement(QMatrix::from_rows(rows));
}

GroupElement GroupElement::inverse() const { return {ybfk::inverse(m_), Trusted{}}; }

GroupElement operator*(const GroupElement& a, const GroupElement& b) {
  if (a.size() != b.size())
    throw DimensionMismatch("group elements of different sizes");
  return {a.m_ * b.m_, GroupElement::Trusted{}};
}

GroupElement parse_point(std::string_view text) {
  std::vector<std::vector<Rational>> rows;
  std::string s(text);
  std::stringstream rs(s);
  std::string row;
  while (std::getline(rs, row, ';')) {
    std::vector<Rational> entries;
    std::stringstream es(row);
    std::string entry;
    while (std::getline(es, entry, ','))
      entries.push_back(parse_rational(entry));
    rows.push_back(std::move(entries));
  }
  if (rows.empty())
    throw ParseError("empty point");
  for (const auto& r : rows)
    if (r.size() != rows.size())
      throw ParseError("point must be a square matrix: '" + s + "'");
  return GroupElement::from_rows(rows);
}

std::string to_string(const GroupElement& g) {
  std::ostringstream os;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (i)
      os << ';';
    for (std::size_t j = 0; j < g.size(); ++j)
      os << (j ? "," : "") << g(i, j).get_str();
  }
  return os.str();
}

QMatrix adjoint_matrix(const LieAlgebra& a, const GroupElement& g) {
  if (g.size() != a.matrix_size())
    throw DimensionMismatch("group element size does not match " + a.label());
  return adjoint_matrix_as<Rational>(a, g.matrix(), g.inverse().matrix());
}

Vector adjoint(const LieAlgebra& a, const GroupElement& g, const Vector& x) {
  if (x.size() != a.dim())
    throw DimensionMismatch("vector does not belong to " + a.label());
  const QMatrix X = a.to_matrix(x);
  if (g.size() != X.rows())
    throw DimensionMismatch("group element size does not match " + a.label());
  auto c = a.coordinates(g.matrix() * X * g.inverse().matrix());
  if (!c)
    throw NotInAlgebra("Ad_g x left " + a.label());
  return *c;
}

DualVector coadjoint(const LieAlgebra& a, const GroupElement& g, const DualVector& xi) {
  if (xi.size() != a.dim())
    throw DimensionMismatch("functional does not belong to " + a.label());
  if (g.size() != a.matrix_size())
    throw DimensionMismatch("group element size does not match " + a.label());
  return DualVector(coadjoint_as<Rational>(a, g.matrix(), g.inverse().matrix(),
                                           std::span<const Rational>(xi.values())));
}

GroupElement exponential_exact(const LieAlgebra& a, const Vector& x) {
  const QMatrix X = a.to_matrix(x);
  const std::size_t n = X.rows();
  QMatrix sum = QMatrix::identity(n);
  QMatrix term = QMatrix::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    term = term * X;
    if (term.is_zero_matrix())
      return GroupElement(sum);
    term *= Rational(1, static_cast<unsigned long>(k));
    sum += term;
  }
  throw NotNilpotent("exact exponential requested for a non-nilpotent element");
}

Matrix<double> to_double(const QMatrix& m) {
  Matrix<double> out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      out(i, j) = m(i, j).get_d();
  return out;
}

Matrix<double> exponential_float(const Matrix<double>& x, double tol) {
  if (!x.square())
    throw DimensionMismatch("exponential of a non-square matrix");
  double norm = 0.0;
  for (std::size_t i = 0; i < x.rows(); ++i) {
    double row = 0.0;
    for (std::size_t j = 0; j < x.cols(); ++j)
      row += std::abs(x(i, j));
    norm = std::max(norm, row);
  }
  if (!std::isfinite(norm))
    throw NonFinite("exponential of a non-finite matrix");
  int squarings = 0;
  if (norm > 0.5)
    squarings = static_cast<int>(std::ceil(std::log2(norm / 0.5)));
  const Matrix<double> a = x * std::ldexp(1.0, -squarings);

  const std::size_t n = x.rows();
  Matrix<double> sum = Matrix<double>::identity(n);
  Matrix<double> term = Matrix<double>::identity(n);
  for (int k = 1; k < 64; ++k) {
    term = term * a * (1.0 / k);
    sum += term;
    double tnorm = 0.0;
    for (double v : term.flat())
      tnorm = std::max(tnorm, std::abs(v));
    if (tnorm < tol * 1e-4)
      break;
  }
  for (int s = 0; s < squarings; ++s)
    sum = sum * sum;
  return sum;
}

std::string to_string(CosetLabel label) {
  return label == CosetLabel::Identity ? "Identity" : "Transposition";
}

bool in_jordanian_parabolic(const GroupElement& g) {
  const std::size_t n = g.size();
  for (std::size_t j = 0; j + 1 < n; ++j)
    if (sgn(g(n - 1, j)) != 0)
      return false;
  return true;
}

CosetLabel coset_classify(const GroupElement& g) {
  return in_jordanian_parabolic(g) ? CosetLabel::Identity : CosetLabel::Transposition;
}

GroupElement weyl_representative(std::size_t n) {
  if (n < 2)
    throw DimensionMismatch("Weyl representative needs n >= 2");
  QMatrix s = QMatrix::identity(n);
  s(n - 2, n - 2) = 0;
  s(n - 1, n - 1) = 0;
  s(n - 2, n - 1) = 1;
  s(n - 1, n - 2) = -1;
  return GroupElement(s);
}

} // namespace ybfk
