#include "ybfk/rmatrix.hpp"

#include "ybfk/error.hpp"

#include <stdexcept>

namespace ybfk {

Bivector::Bivector(AlgebraPtr parent) : parent_(std::move(parent)) {
  if (!parent_)
    throw ParentMismatch("bivector without a parent algebra");
}

Bivector Bivector::wedge(AlgebraPtr parent, const Vector& x, const Vector& y) {
  Bivector r(std::move(parent));
  const std::size_t d = r.dim();
  if (x.size() != d || y.size() != d)
    throw DimensionMismatch("wedge operands do not belong to the algebra");
  for (std::size_t u = 0; u < d; ++u)
    for (std::size_t v = u + 1; v < d; ++v)
      r.set(u, v, x[u] * y[v] - y[u] * x[v]);
  return r;
}

Bivector Bivector::from_matrix(AlgebraPtr parent, const QMatrix& m) {
  Bivector r(std::move(parent));
  const std::size_t d = r.dim();
  if (m.rows() != d || m.cols() != d)
    throw DimensionMismatch("bivector matrix has wrong shape");
  for (std::size_t u = 0; u < d; ++u) {
    if (sgn(m(u, u)) != 0)
      throw DimensionMismatch("bivector matrix is not antisymmetric");
    for (std::size_t v = u + 1; v < d; ++v) {
      if (m(u, v) != -m(v, u))
        throw DimensionMismatch("bivector matrix is not antisymmetric");
      r.set(u, v, m(u, v));
    }
  }
  return r;
}

Rational Bivector::entry(std::size_t u, std::size_t v) const {
  if (u == v)
    return 0;
  const bool flip = u > v;
  auto it = entries_.find(flip ? Key{v, u} : Key{u, v});
  if (it == entries_.end())
    return 0;
  return flip ? Rational(-it->second) : it->second;
}

void Bivector::set(std::size_t u, std::size_t v, const Rational& value) {
  if (u >= dim() || v >= dim())
    throw DimensionMismatch("bivector index out of range");
  if (u == v) {
    if (sgn(value) != 0)
      throw DimensionMismatch("diagonal bivector entry must vanish");
    return;
  }
  const bool flip = u > v;
  const Key k = flip ? Key{v, u} : Key{u, v};
  const Rational stored = flip ? Rational(-value) : value;
  if (sgn(stored) == 0)
    entries_.erase(k);
  else
    entries_[k] = stored;
}

QMatrix Bivector::matrix() const {
  QMatrix m(dim(), dim());
  for (const auto& [k, c] : entries_) {
    m(k.first, k.second) = c;
    m(k.second, k.first) = -c;
  }
  return m;
}

Bivector& Bivector::operator+=(const Bivector& o) {
  if (!same_algebra(parent_, o.parent_))
    throw ParentMismatch("bivectors over different algebras");
  for (const auto& [k, c] : o.entries_)
    set(k.first, k.second, entry(k.first, k.second) + c);
  return *this;
}

Bivector& Bivector::operator*=(const Rational& s) {
  if (sgn(s) == 0) {
    entries_.clear();
    return *this;
  }
  for (auto& [k, c] : entries_)
    c *= s;
  return *this;
}

void ThreeTensor::add(const Key& k, const Rational& value) {
  if (sgn(value) == 0)
    return;
  auto [it, inserted] = entries_.try_emplace(k, value);
  if (!inserted) {
    it->second += value;
    if (sgn(it->second) == 0)
      entries_.erase(it);
  }
}

Rational ThreeTensor::max_abs() const {
  Rational best = 0;
  for (const auto& [k, c] : entries_)
    if (abs(c) > best)
      best = abs(c);
  return best;
}

Rational BilinearForm::operator()(const std::vector<Rational>& x, const std::vector<Rational>& y) const {
  if (x.size() != matrix.rows() || y.size() != matrix.cols())
    throw DimensionMismatch("form arguments have wrong dimension");
  Rational s = 0;
  for (std::size_t a = 0; a < x.size(); ++a)
    for (std::size_t c = 0; c < y.size(); ++c)
      s += x[a] * matrix(a, c) * y[c];
  return s;
}

Vector r_check(const Bivector& r, const DualVector& xi) {
  const std::size_t d = r.dim();
  if (xi.size() != d)
    throw ParentMismatch("functional does not live on the bivector's algebra");
  Vector out(d);
  for (const auto& [k, c] : r.entries()) {
    // c (e_u⊗e_v − e_v⊗e_u)
    out[k.second] += c * xi[k.first];
    out[k.first] -= c * xi[k.second];
  }
  return out;
}

Subspace carrier(const Bivector& r) {
  return Subspace::from_rows(r.parent(), Side::Primal, r.matrix());
}

ThreeTensor cybe_defect(const Bivector& r) {
  const LieAlgebra& g = *r.parent();
  const std::size_t d = g.dim();
  const QMatrix R = r.matrix();

  // Nonzero entries of each row of R.
  std::vector<std::vector<std::pair<std::size_t, Rational>>> row(d);
  for (std::size_t u = 0; u < d; ++u)
    for (std::size_t v = 0; v < d; ++v)
      if (sgn(R(u, v)) != 0)
        row[u].emplace_back(v, R(u, v));

  std::vector<Rational> acc(d * d * d);
  auto at = [&](std::size_t i, std::size_t j, std::size_t k) -> Rational& {
    return acc[(i * d + j) * d + k];
  };

  for (std::size_t x = 0; x < d; ++x) {
    if (row[x].empty())
      continue;
    for (std::size_t y = 0; y < d; ++y) {
      if (row[y].empty())
        continue;
      const auto& terms = g.bracket_terms(x, y);
      if (terms.empty())
        continue;
      for (const auto& t : terms)
        for (const auto& [b, rxb] : row[x])
          for (const auto& [f, ryf] : row[y]) {
            const Rational w = t.coeff * rxb * ryf;
            at(t.index, b, f) += w; // [r12, r13]: R^{xb} R^{yf} [e_x, e_y]⊗e_b⊗e_f
          }
    }
  }
  // [r12, r23] = Σ R^{ab} R^{ef} e_a ⊗ [e_b, e_e] ⊗ e_f
  for (std::size_t a = 0; a < d; ++a)
    for (const auto& [b, rab] : row[a])
      for (std::size_t e = 0; e < d; ++e) {
        if (row[e].empty())
          continue;
        for (const auto& t : g.bracket_terms(b, e))
          for (const auto& [f, ref] : row[e])
            at(a, t.index, f) += t.coeff * rab * ref;
      }
  // [r13, r23] = Σ R^{cd} R^{ef} e_c ⊗ e_e ⊗ [e_d, e_f]
  for (std::size_t c = 0; c < d; ++c)
    for (const auto& [dd, rcd] : row[c])
      for (std::size_t e = 0; e < d; ++e)
        for (const auto& [f, ref] : row[e])
          for (const auto& t : g.bracket_terms(dd, f))
            at(c, e, t.index) += t.coeff * rcd * ref;

  ThreeTensor out;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k)
        out.add({i, j, k}, at(i, j, k));
  return out;
}

QMatrix carrier_matrix(const Bivector& r, const Subspace& p) {
  const QMatrix R = r.matrix();
  const auto& piv = p.pivots();
  QMatrix K(p.dim(), p.dim());
  for (std::size_t a = 0; a < p.dim(); ++a)
    for (std::size_t c = 0; c < p.dim(); ++c)
      K(a, c) = R(piv[a], piv[c]);
  return K;
}

namespace {

QMatrix inverse_on_carrier(const Bivector& r, const Subspace& p) {
  try {
    return inverse(carrier_matrix(r, p));
  } catch (const Degenerate&) {
    throw DegenerateOnCarrier("r-matrix is degenerate on its carrier");
  }
}

std::vector<Rational> carrier_coordinates(const Subspace& p, const Vector& x) {
  auto c = p.coordinates(x.values());
  if (!c)
    throw NotInAlgebra("vector is not in the carrier subspace");
  return *c;
}

} // namespace

std::vector<Rational> r_check_inverse(const Bivector& r, const Vector& x) {
  const Subspace p = carrier(r);
  const QMatrix Kinv = inverse_on_carrier(r, p);
  const auto xc = carrier_coordinates(p, x);
  // ř(φ) has carrier coordinates Kᵀφ, so ř⁻¹(x) = K⁻ᵀ x.
  return Kinv.transpose() * xc;
}

BetaForm beta_form(const Bivector& r) {
  const Subspace p = carrier(r);
  const QMatrix Kinv = inverse_on_carrier(r, p);
  const std::size_t m = p.dim();
  QMatrix beta = -Kinv;

  // Brackets of carrier basis elements, in carrier coordinates.
  const LieAlgebra& g = *r.parent();
  BilinearForm form{p, beta};
  if (!is_subalgebra(g, p).ok)
    return {std::move(form), std::nullopt};
  std::vector<std::vector<std::vector<Rational>>> br(m, std::vector<std::vector<Rational>>(m));
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      br[a][b] = carrier_coordinates(p, lie_bracket(g, p.basis_vector(a), p.basis_vector(b)));

  auto unit = [m](std::size_t k) {
    std::vector<Rational> e(m);
    e[k] = 1;
    return e;
  };
  Rational defect = 0;
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a + 1; b < m; ++b)
      for (std::size_t c = b + 1; c < m; ++c) {
        const Rational v = form(br[a][b], unit(c)) + form(br[b][c], unit(a)) + form(br[c][a], unit(b));
        if (abs(v) > defect)
          defect = abs(v);
      }
  return {std::move(form), defect};
}

QMatrix frobenius_form(const Subspace& p, const DualVector& xi) {
  const LieAlgebra& g = *p.parent();
  if (xi.size() != g.dim())
    throw ParentMismatch("functional does not live on the carrier's algebra");
  const std::size_t m = p.dim();
  QMatrix B(m, m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t c = a + 1; c < m; ++c) {
      const Rational v = pair(xi, lie_bracket(g, p.basis_vector(a), p.basis_vector(c)));
      B(a, c) = v;
      B(c, a) = -v;
    }
  return B;
}

Rational calibrate_frobenius(const Bivector& r, const DualVector& xi) {
  const Subspace p = carrier(r);
  const QMatrix B = frobenius_form(p, xi);
  if (p.dim() == 0 || sgn(determinant(B)) == 0)
    throw Degenerate("<xi, [x, y]> is degenerate on the carrier");
  const QMatrix beta = beta_form(r).form.matrix;

  // ad*_x(cξ)(y) = −c B_ξ(x, y) must equal ⟨ř⁻¹(x), y⟩ = −β(x, y).
  std::optional<Rational> c;
  for (std::size_t a = 0; a < p.dim() && !c; ++a)
    for (std::size_t b = 0; b < p.dim(); ++b)
      if (sgn(B(a, b)) != 0) {
        c = beta(a, b) / B(a, b);
        break;
      }
  if (!(B * *c == beta))
    throw NotProportional("xi is not a Frobenius functional for r");
  return *c;
}

Bivector frobenius_to_r(const Subspace& p, const DualVector& xi) {
  if (p.side() != Side::Primal)
    throw ParentMismatch("Frobenius inversion needs a subspace of g");
  const LieAlgebra& g = *p.parent();
  if (!is_subalgebra(g, p).ok)
    throw NotInAlgebra("subspace is not a subalgebra");
  const QMatrix B = frobenius_form(p, xi);
  if (p.dim() == 0 || sgn(determinant(B)) == 0)
    throw Degenerate("<xi, [x, y]> is degenerate on the subalgebra");

  // β = −K⁻¹ must equal B_ξ, so K = −B_ξ⁻¹ and R = basisᵀ K basis.
  const QMatrix K = -inverse(B);
  const QMatrix R = p.basis().transpose() * K * p.basis();
  Bivector r = Bivector::from_matrix(p.parent(), R);

  if (!cybe_defect(r).is_zero())
    throw std::logic_error("Frobenius inversion produced a non-solution of CYBE");
  if (calibrate_frobenius(r, xi) != 1)
    throw std::logic_error("Frobenius inversion is not calibrated against xi");
  return r;
}

Subspace jordanian_parabolic(const AlgebraPtr& sl) {
  sl->require_realized();
  const std::size_t n = sl->matrix_size();
  std::vector<Vector> basis;
  for (std::size_t k = 0; k < sl->dim(); ++k) {
    const auto& m = sl->realization(k);
    bool clear = true;
    for (std::size_t j = 0; j + 1 < n; ++j)
      if (sgn(m(n - 1, j)) != 0)
        clear = false;
    if (clear)
      basis.push_back(Vector::unit(sl->dim(), k));
  }
  return Subspace::span(sl, basis);
}

QMatrix jordanian_closed_form_gl(std::size_t n) {
  const std::size_t d = n * n;
  QMatrix G(d, d);
  auto idx = [n](std::size_t i, std::size_t j) { return (i - 1) * n + (j - 1); }; // 1-based
  auto add_wedge = [&](std::size_t a, std::size_t b, const Rational& c) {
    G(a, b) += c;
    G(b, a) -= c;
  };
  const Rational nn(static_cast<long>(n));
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = i + 1; j <= n; ++j)
      for (std::size_t k = i; k <= j - 1; ++k)
        add_wedge(idx(k, i), idx(i + j - k - 1, j), nn);
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 2; j <= n; ++j)
      add_wedge(idx(j - 1, j), idx(i, i), Rational(static_cast<long>(j - 1)));
  return G;
}

JordanianR jordanian_r(std::size_t n) {
  if (n < 2)
    throw DimensionMismatch("the Jordanian family needs n >= 2");
  AlgebraPtr sl = make_sl(n);
  Subspace p = jordanian_parabolic(sl);

  QMatrix f(n, n);
  for (std::size_t i = 0; i + 1 < n; ++i)
    f(i, i + 1) = -Rational(static_cast<long>(n));
  DualVector xi = functional_from_matrix(*sl, f);

  Bivector r = frobenius_to_r(p, xi);

  // Project gl(n) onto sl(n) along the identity: X ↦ X − (tr X / n)·Id.
  const std::size_t d = n * n;
  QMatrix proj(sl->dim(), d);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      QMatrix x(n, n);
      x(i, j) = 1;
      if (i == j)
        for (std::size_t k = 0; k < n; ++k)
          x(k, k) -= Rational(1, static_cast<unsigned long>(n));
      auto c = sl->coordinates(x);
      for (std::size_t k = 0; k < sl->dim(); ++k)
        proj(k, i * n + j) = (*c)[k];
    }
  const QMatrix projected = proj * jordanian_closed_form_gl(n) * proj.transpose();
  Bivector closed = Bivector::from_matrix(sl, projected);

  CrossCheckReport report{closed, false, std::nullopt};
  if (!r.is_zero()) {
    const auto& [key, value] = *r.entries().begin();
    const Rational lambda = closed.entry(key.first, key.second) / value;
    if (sgn(lambda) != 0 && lambda * r == closed) {
      report.proportional = true;
      report.scalar = lambda;
    }
  }
  return {n, std::move(r), std::move(p), std::move(xi), std::move(report)};
}

} // namespace ybfk
