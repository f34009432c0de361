#include "ybfk/lie_algebra.hpp"

#include "ybfk/error.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace ybfk {

namespace {

void accumulate(std::map<std::size_t, Rational>& acc, const std::vector<BracketTerm>& terms,
                const Rational& scale) {
  for (const auto& t : terms)
    acc[t.index] += scale * t.coeff;
}

std::vector<BracketTerm> to_terms(const std::map<std::size_t, Rational>& acc) {
  std::vector<BracketTerm> out;
  for (const auto& [k, c] : acc)
    if (sgn(c) != 0)
      out.push_back({k, c});
  return out;
}

QMatrix unit_matrix(std::size_t n, std::size_t i, std::size_t j) {
  QMatrix m(n, n);
  m(i, j) = 1;
  return m;
}

} // namespace

Rational pair(const DualVector& xi, const Vector& x) {
  if (xi.size() != x.size())
    throw DimensionMismatch("pairing of vectors with different dimensions");
  Rational s = 0;
  for (std::size_t k = 0; k < x.size(); ++k)
    s += xi[k] * x[k];
  return s;
}

LieAlgebra::LieAlgebra(std::string label, std::vector<std::string> basis_names,
                       const std::vector<BracketEntry>& upper)
    : label_(std::move(label)), names_(std::move(basis_names)) {
  const std::size_t d = names_.size();
  if (d == 0)
    throw DimensionMismatch("Lie algebra must have positive dimension");
  table_.assign(d * d, {});
  for (const auto& [i, j, terms] : upper) {
    if (i >= d || j >= d)
      throw DimensionMismatch("bracket index out of range");
    if (i >= j)
      throw ParseError("bracket entries must satisfy i < j");
    std::map<std::size_t, Rational> acc;
    for (const auto& t : terms)
      if (t.index >= d)
        throw DimensionMismatch("bracket result index out of range");
    accumulate(acc, terms, 1);
    table_[i * d + j] = to_terms(acc);
    std::map<std::size_t, Rational> neg;
    accumulate(neg, terms, -1);
    table_[j * d + i] = to_terms(neg);
  }
}

LieAlgebra LieAlgebra::from_matrices(std::string label, std::vector<std::string> basis_names,
                                     std::vector<QMatrix> realization) {
  if (realization.size() != basis_names.size() || realization.empty())
    throw DimensionMismatch("one realizing matrix per basis element is required");
  LieAlgebra a;
  a.label_ = std::move(label);
  a.names_ = std::move(basis_names);
  a.matrix_size_ = realization.front().rows();
  for (const auto& m : realization)
    if (m.rows() != a.matrix_size_ || !m.square())
      throw DimensionMismatch("realizing matrices must share one square size");
  a.realization_ = std::move(realization);
  a.build_coordinate_solver();

  const std::size_t d = a.dim();
  a.table_.assign(d * d, {});
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      if (i == j)
        continue;
      const QMatrix comm =
          a.realization_[i] * a.realization_[j] - a.realization_[j] * a.realization_[i];
      auto c = a.coordinates(comm);
      if (!c)
        throw NotInAlgebra("realization of " + a.label_ + " is not closed under brackets");
      std::vector<BracketTerm> terms;
      for (std::size_t k = 0; k < d; ++k)
        if (sgn((*c)[k]) != 0)
          terms.push_back({k, (*c)[k]});
      a.table_[i * d + j] = std::move(terms);
    }
  return a;
}

void LieAlgebra::build_coordinate_solver() {
  const std::size_t d = dim();
  const std::size_t n2 = matrix_size_ * matrix_size_;
  // Row k of `stacked` is the flattened k-th basis matrix; its pivots pick
  // d entry positions on which the basis is invertible.
  QMatrix stacked(d, n2);
  for (std::size_t k = 0; k < d; ++k)
    for (std::size_t q = 0; q < n2; ++q)
      stacked(k, q) = realization_[k].flat()[q];
  auto ech = rref(stacked);
  if (ech.pivots.size() != d)
    throw Degenerate("realizing matrices of " + label_ + " are linearly dependent");
  coord_pivots_ = ech.pivots;
  QMatrix block(d, d); // block(q, k) = entry pivot_q of basis k
  for (std::size_t q = 0; q < d; ++q)
    for (std::size_t k = 0; k < d; ++k)
      block(q, k) = stacked(k, coord_pivots_[q]);
  coord_solve_ = inverse(block);
}

void LieAlgebra::require_realized() const {
  if (!realized())
    throw NotRealized(label_ + " has no matrix realization");
}

std::optional<std::size_t> LieAlgebra::index_of(std::string_view name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end())
    return std::nullopt;
  return static_cast<std::size_t>(it - names_.begin());
}

QMatrix LieAlgebra::to_matrix(const Vector& x) const {
  if (x.size() != dim())
    throw DimensionMismatch("vector does not belong to " + label_);
  return to_matrix_as<Rational>(std::span<const Rational>(x.values()));
}

std::optional<Vector> LieAlgebra::coordinates(const QMatrix& m) const {
  require_realized();
  if (m.rows() != matrix_size_ || m.cols() != matrix_size_)
    throw DimensionMismatch("matrix size does not match the realization of " + label_);
  try {
    return Vector(coordinates_as<Rational>(m));
  } catch (const NotInAlgebra&) {
    return std::nullopt;
  }
}

bool same_algebra(const AlgebraPtr& a, const AlgebraPtr& b) {
  return a == b || (a && b && *a == *b);
}

AlgebraPtr make_sl(std::size_t n) {
  if (n < 2)
    throw DimensionMismatch("sl(n) requires n >= 2");
  std::vector<std::string> names;
  std::vector<QMatrix> mats;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j)
        continue;
      names.push_back("E" + std::to_string(i + 1) + std::to_string(j + 1));
      mats.push_back(unit_matrix(n, i, j));
    }
  for (std::size_t k = 0; k + 1 < n; ++k) {
    names.push_back("H" + std::to_string(k + 1));
    QMatrix h(n, n);
    h(k, k) = 1;
    h(k + 1, k + 1) = -1;
    mats.push_back(std::move(h));
  }
  if (n == 2)
    names = {"E", "F", "H"};
  return std::make_shared<const LieAlgebra>(
      LieAlgebra::from_matrices("sl(" + std::to_string(n) + ")", std::move(names), std::move(mats)));
}

AlgebraPtr make_gl(std::size_t n) {
  if (n < 1)
    throw DimensionMismatch("gl(n) requires n >= 1");
  std::vector<std::string> names;
  std::vector<QMatrix> mats;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      names.push_back("E" + std::to_string(i + 1) + std::to_string(j + 1));
      mats.push_back(unit_matrix(n, i, j));
    }
  return std::make_shared<const LieAlgebra>(
      LieAlgebra::from_matrices("gl(" + std::to_string(n) + ")", std::move(names), std::move(mats)));
}

AlgebraPtr make_jordanian_parabolic(std::size_t n) {
  auto sl = make_sl(n);
  std::vector<std::string> names;
  std::vector<QMatrix> mats;
  for (std::size_t k = 0; k < sl->dim(); ++k) {
    const auto& m = sl->realization(k);
    bool last_row_clear = true;
    for (std::size_t j = 0; j + 1 < n; ++j)
      if (sgn(m(n - 1, j)) != 0)
        last_row_clear = false;
    if (last_row_clear) {
      names.push_back(sl->basis_names()[k]);
      mats.push_back(m);
    }
  }
  return std::make_shared<const LieAlgebra>(
      LieAlgebra::from_matrices("p(" + std::to_string(n) + ")", std::move(names), std::move(mats)));
}

AlgebraPtr builtin_algebra(std::string_view name) {
  std::string s;
  for (char c : name)
    if (!std::isspace(static_cast<unsigned char>(c)) && c != '(' && c != ')')
      s.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  auto parse_n = [&](std::size_t prefix) -> std::size_t {
    const auto digits = s.substr(prefix);
    if (digits.empty() || !std::all_of(digits.begin(), digits.end(),
                                       [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
      throw ParseError("unknown builtin algebra '" + std::string(name) + "'");
    return static_cast<std::size_t>(std::stoul(digits));
  };
  if (s.rfind("sl", 0) == 0)
    return make_sl(parse_n(2));
  if (s.rfind("gl", 0) == 0)
    return make_gl(parse_n(2));
  if (s.rfind("p", 0) == 0)
    return make_jordanian_parabolic(parse_n(1));
  throw ParseError("unknown builtin algebra '" + std::string(name) + "'");
}

Vector lie_bracket(const LieAlgebra& a, const Vector& x, const Vector& y) {
  const std::size_t d = a.dim();
  if (x.size() != d || y.size() != d)
    throw DimensionMismatch("bracket operands do not belong to " + a.label());
  Vector out(d);
  for (std::size_t i = 0; i < d; ++i) {
    if (sgn(x[i]) == 0)
      continue;
    for (std::size_t j = 0; j < d; ++j) {
      if (sgn(y[j]) == 0)
        continue;
      const Rational w = x[i] * y[j];
      for (const auto& t : a.bracket_terms(i, j))
        out[t.index] += w * t.coeff;
    }
  }
  return out;
}

DualVector ad_star(const LieAlgebra& a, const Vector& x, const DualVector& xi) {
  const std::size_t d = a.dim();
  if (x.size() != d || xi.size() != d)
    throw DimensionMismatch("ad* operands do not belong to " + a.label());
  DualVector out(d);
  for (std::size_t i = 0; i < d; ++i) {
    if (sgn(x[i]) == 0)
      continue;
    for (std::size_t j = 0; j < d; ++j)
      for (const auto& t : a.bracket_terms(i, j))
        out[j] -= x[i] * t.coeff * xi[t.index];
  }
  return out;
}

DualVector functional_from_matrix(const LieAlgebra& a, const QMatrix& f) {
  a.require_realized();
  if (f.rows() != a.matrix_size() || f.cols() != a.matrix_size())
    throw DimensionMismatch("functional size does not match the realization");
  DualVector xi(a.dim());
  for (std::size_t k = 0; k < a.dim(); ++k) {
    const auto& m = a.realization(k);
    for (std::size_t q = 0; q < f.flat().size(); ++q)
      xi[k] += f.flat()[q] * m.flat()[q];
  }
  return xi;
}

ValidationReport validate(const LieAlgebra& a) {
  ValidationReport report;
  const std::size_t d = a.dim();
  for (std::size_t i = 0; i < d && report.antisymmetric; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      std::map<std::size_t, Rational> sum;
      accumulate(sum, a.bracket_terms(i, j), 1);
      accumulate(sum, a.bracket_terms(j, i), 1);
      if (!to_terms(sum).empty() || (i == j && !a.bracket_terms(i, i).empty())) {
        report.antisymmetric = false;
        report.witness = "[e" + std::to_string(i) + ", e" + std::to_string(j) +
                         "] + [e" + std::to_string(j) + ", e" + std::to_string(i) + "] != 0";
        break;
      }
    }

  // [[e_i, e_j], e_l] + [[e_j, e_l], e_i] + [[e_l, e_i], e_j]
  auto nested = [&](std::size_t i, std::size_t j, std::size_t l,
                    std::map<std::size_t, Rational>& acc) {
    for (const auto& t : a.bracket_terms(i, j))
      accumulate(acc, a.bracket_terms(t.index, l), t.coeff);
  };
  for (std::size_t i = 0; i < d && report.jacobi; ++i)
    for (std::size_t j = i + 1; j < d && report.jacobi; ++j)
      for (std::size_t l = j + 1; l < d; ++l) {
        std::map<std::size_t, Rational> acc;
        nested(i, j, l, acc);
        nested(j, l, i, acc);
        nested(l, i, j, acc);
        if (!to_terms(acc).empty()) {
          report.jacobi = false;
          std::ostringstream os;
          os << "Jacobi fails on (" << a.basis_names()[i] << ", " << a.basis_names()[j] << ", "
             << a.basis_names()[l] << ")";
          report.witness = os.str();
          break;
        }
      }
  return report;
}

} // namespace ybfk
