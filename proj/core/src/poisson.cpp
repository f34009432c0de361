#include "ybfk/poisson.hpp"

#include "ybfk/error.hpp"

namespace ybfk {

namespace {

std::vector<Rational> gradient_at(const Polynomial& f, const GroupElement& g) {
  if (f.matrix_size() != g.size())
    throw DimensionMismatch("polynomial variables do not match the point size");
  std::vector<Rational> grad;
  grad.reserve(f.nvars());
  for (std::size_t v = 0; v < f.nvars(); ++v)
    grad.push_back(f.derivative(v).evaluate(g.matrix()));
  return grad;
}

QMatrix entry_span(const Bivector& r, const GroupElement& g, const Subspace& p) {
  const LieAlgebra& a = *r.parent();
  const std::size_t n = g.size();
  QMatrix rows(2 * p.dim(), n * n);
  for (std::size_t k = 0; k < p.dim(); ++k) {
    const QMatrix x = a.to_matrix(p.basis_vector(k));
    const QMatrix xg = x * g.matrix();
    const QMatrix gx = g.matrix() * x;
    for (std::size_t q = 0; q < n * n; ++q) {
      rows(2 * k, q) = xg.flat()[q];
      rows(2 * k + 1, q) = gx.flat()[q];
    }
  }
  return rows;
}

} // namespace

AmbientBivector ambient_bivector(const Bivector& r, const GroupElement& g) {
  return {g.size(), ambient_bivector_as<Rational>(r, g.matrix(), true)};
}

AmbientBivector left_bivector(const Bivector& r, const GroupElement& g) {
  return {g.size(), ambient_bivector_as<Rational>(r, g.matrix(), false)};
}

std::size_t leaf_rank(const Bivector& r, const GroupElement& g) { return ambient_bivector(r, g).rank(); }

Rational poisson_bracket(const Bivector& r, const Polynomial& f, const Polynomial& h,
                         const GroupElement& g) {
  const QMatrix pi = ambient_bivector(r, g).pi;
  const auto df = gradient_at(f, g);
  const auto dh = gradient_at(h, g);
  const auto pdh = pi * dh;
  Rational s = 0;
  for (std::size_t q = 0; q < df.size(); ++q)
    s += df[q] * pdh[q];
  return s;
}

QMatrix hamiltonian_field(const Bivector& r, const Polynomial& h, const GroupElement& g) {
  const QMatrix pi = ambient_bivector(r, g).pi;
  const auto x = pi * gradient_at(h, g);
  return QMatrix::from_flat(g.size(), g.size(), x);
}

std::vector<std::vector<Polynomial>> symbolic_bivector(const Bivector& r) {
  const LieAlgebra& a = *r.parent();
  a.require_realized();
  const std::size_t n = a.matrix_size();
  const std::size_t n2 = n * n;

  // Flattened g·e_k and e_k·g with g the matrix of variables.
  auto translate = [&](std::size_t k, bool left) {
    const QMatrix& e = a.realization(k);
    std::vector<Polynomial> out(n2, Polynomial(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t m = 0; m < n; ++m) {
          if (left && sgn(e(m, j)) != 0)
            out[i * n + j] += Polynomial::entry(n, i, m) * e(m, j);
          if (!left && sgn(e(i, m)) != 0)
            out[i * n + j] += Polynomial::entry(n, m, j) * e(i, m);
        }
    return out;
  };

  std::vector<std::vector<Polynomial>> pi(n2, std::vector<Polynomial>(n2, Polynomial(n)));
  for (const auto& [key, c] : r.entries()) {
    for (bool left : {true, false}) {
      const auto x = translate(key.first, left);
      const auto y = translate(key.second, left);
      const Rational w = left ? c : Rational(-c);
      for (std::size_t p = 0; p < n2; ++p) {
        if (x[p].is_zero() && y[p].is_zero())
          continue;
        for (std::size_t q = 0; q < n2; ++q)
          pi[p][q] += (x[p] * y[q] - y[p] * x[q]) * w;
      }
    }
  }
  return pi;
}

Polynomial bracket_polynomial(const Bivector& r, const Polynomial& f, const Polynomial& h) {
  const auto pi = symbolic_bivector(r);
  const auto df = f.gradient();
  const auto dh = h.gradient();
  Polynomial out(f.matrix_size());
  for (std::size_t p = 0; p < df.size(); ++p) {
    if (df[p].is_zero())
      continue;
    for (std::size_t q = 0; q < dh.size(); ++q)
      if (!dh[q].is_zero() && !pi[p][q].is_zero())
        out += df[p] * pi[p][q] * dh[q];
  }
  return out;
}

Rational casimir_residual(const Bivector& r, const GroupElement& g) {
  if (g.size() != 2)
    throw DimensionMismatch("the leaf classifier is defined on SL(2)");
  const Rational t21 = g(1, 0);
  if (sgn(t21) == 0)
    throw UndefinedClassifier("T21 = 0: the classifier ratio is undefined on B");
  const Rational diff = g(0, 0) - g(1, 1);
  // Gradient of (T11 − T22)/T21 in the order T11, T12, T21, T22.
  const std::vector<Rational> grad{Rational(1 / t21), Rational(0), Rational(-diff / (t21 * t21)),
                                   Rational(-1 / t21)};
  const auto v = ambient_bivector(r, g).pi * grad;
  return max_abs(std::span<const Rational>(v));
}

std::size_t tangency_defect(const Bivector& r, const GroupElement& g, const Subspace& p) {
  if (!same_algebra(p.parent(), r.parent()) || p.side() != Side::Primal)
    throw ParentMismatch("tangency subspace must live in the r-matrix algebra");
  const QMatrix tangent = entry_span(r, g, p);
  const QMatrix pi = ambient_bivector(r, g).pi;
  QMatrix both(tangent.rows() + pi.rows(), pi.cols());
  for (std::size_t i = 0; i < tangent.rows(); ++i)
    for (std::size_t j = 0; j < pi.cols(); ++j)
      both(i, j) = tangent(i, j);
  // Π is antisymmetric, so its rows span its column space.
  for (std::size_t i = 0; i < pi.rows(); ++i)
    for (std::size_t j = 0; j < pi.cols(); ++j)
      both(tangent.rows() + i, j) = pi(i, j);
  return rank(both) - rank(tangent);
}

std::size_t tangency_defect(const Bivector& r, const GroupElement& g) {
  return tangency_defect(r, g, carrier(r));
}

Rational multiplicativity_defect(const Bivector& r, const GroupElement& g, const GroupElement& h) {
  const std::size_t n = g.size();
  const std::size_t n2 = n * n;
  QMatrix left_g(n2, n2), right_h(n2, n2);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        left_g(i * n + j, k * n + j) = g(i, k);  // (gX)_ij = Σ g_ik X_kj
        right_h(i * n + j, i * n + k) = h(k, j); // (Xh)_ij = Σ X_ik h_kj
      }
  const QMatrix lhs = ambient_bivector(r, g * h).pi;
  const QMatrix rhs = left_g * ambient_bivector(r, h).pi * left_g.transpose() +
                      right_h * ambient_bivector(r, g).pi * right_h.transpose();
  return max_abs(lhs - rhs);
}

std::string LeafId::to_string() const {
  if (kind == Kind::ZPoint)
    return "ZPoint";
  return "Ratio[" + lambda.get_str() + ":" + mu.get_str() + "]";
}

LeafId sl2_leaf_id(const GroupElement& g) {
  if (g.size() != 2)
    throw DimensionMismatch("sl2_leaf_id needs a point of SL(2)");
  const Rational t21 = g(1, 0);
  const Rational diff = g(0, 0) - g(1, 1);
  LeafId id;
  if (sgn(t21) == 0 && g(0, 0) * g(0, 0) == 1) {
    id.kind = LeafId::Kind::ZPoint;
    id.point = g;
    return id;
  }
  id.kind = LeafId::Kind::Ratio;
  if (sgn(t21) != 0) {
    id.lambda = 1;
    id.mu = diff / t21;
  } else {
    id.lambda = 0;
    id.mu = 1; // T21 = 0 off Z forces T11 − T22 ≠ 0
  }
  return id;
}

} // namespace ybfk
