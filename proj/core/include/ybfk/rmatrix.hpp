#pragma once

#include "ybfk/lie_algebra.hpp"
#include "ybfk/subspace.hpp"

#include <array>
#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace ybfk {

/// Antisymmetric r ∈ g∧g with x∧y := x⊗y − y⊗x (no ½). Only u < v entries
/// are stored: r = Σ_{u<v} r^{uv} (e_u⊗e_v − e_v⊗e_u).
class Bivector {
public:
  using Key = std::pair<std::size_t, std::size_t>;

  explicit Bivector(AlgebraPtr parent);

  static Bivector wedge(AlgebraPtr parent, const Vector& x, const Vector& y);
  /// Reads the strict upper triangle of an antisymmetric matrix; throws if
  /// the matrix is not antisymmetric.
  static Bivector from_matrix(AlgebraPtr parent, const QMatrix& r);

  const AlgebraPtr& parent() const { return parent_; }
  std::size_t dim() const { return parent_->dim(); }

  /// Coefficient of e_u⊗e_v in r (antisymmetric in u, v).
  Rational entry(std::size_t u, std::size_t v) const;
  void set(std::size_t u, std::size_t v, const Rational& value);
  const std::map<Key, Rational>& entries() const { return entries_; }
  bool is_zero() const { return entries_.empty(); }

  /// Dense antisymmetric matrix R with r = Σ_{u,v} R(u,v) e_u⊗e_v.
  QMatrix matrix() const;

  Bivector& operator+=(const Bivector& o);
  Bivector& operator*=(const Rational& s);
  friend Bivector operator+(Bivector a, const Bivector& b) { return a += b; }
  friend Bivector operator*(const Rational& s, Bivector a) { return a *= s; }
  friend Bivector operator-(Bivector a) { return a *= Rational(-1); }
  friend bool operator==(const Bivector& a, const Bivector& b) {
    return same_algebra(a.parent_, b.parent_) && a.entries_ == b.entries_;
  }

private:
  AlgebraPtr parent_;
  std::map<Key, Rational> entries_;
};

/// Sparse element of g⊗g⊗g; zero coefficients are never stored.
class ThreeTensor {
public:
  using Key = std::array<std::size_t, 3>;

  void add(const Key& k, const Rational& value);
  const std::map<Key, Rational>& entries() const { return entries_; }
  std::size_t nnz() const { return entries_.size(); }
  bool is_zero() const { return entries_.empty(); }
  Rational max_abs() const;

private:
  std::map<Key, Rational> entries_;
};

/// Antisymmetric form on a subspace, in the subspace's echelon basis.
struct BilinearForm {
  Subspace domain;
  QMatrix matrix;

  Rational operator()(const std::vector<Rational>& x, const std::vector<Rational>& y) const;
};

/// ř(ξ) = (ξ⊗Id) r.
Vector r_check(const Bivector& r, const DualVector& xi);

/// Span of all components of r, i.e. the image of ř.
Subspace carrier(const Bivector& r);

/// [r12, r13] + [r12, r23] + [r13, r23] expanded through the structure table.
ThreeTensor cybe_defect(const Bivector& r);

/// r written in the carrier basis: r = Σ K(a, c) b_a⊗b_c.
QMatrix carrier_matrix(const Bivector& r, const Subspace& p);

/// ř⁻¹(x) for x in the carrier, as components on the carrier basis (an element of p*).
std::vector<Rational> r_check_inverse(const Bivector& r, const Vector& x);

struct BetaForm {
  BilinearForm form;        // β(x, y) = −⟨ř⁻¹(x), y⟩ on carrier(r)
  // max |β([x,y],z) + β([y,z],x) + β([z,x],y)| over basis triples; nullopt when the
  // carrier is not closed under the bracket (r is then not a CYBE solution).
  std::optional<Rational> cocycle_defect;
};

/// Throws DegenerateOnCarrier when ř is singular on the carrier.
BetaForm beta_form(const Bivector& r);

/// B_ξ(x, y) = ⟨ξ, [x, y]⟩ on the echelon basis of p.
QMatrix frobenius_form(const Subspace& p, const DualVector& xi);

/// The scalar c with ad*_x(c·ξ) = ř⁻¹(x) on carrier(r). Throws Degenerate if
/// B_ξ is singular on the carrier, NotProportional if no scalar exists.
Rational calibrate_frobenius(const Bivector& r, const DualVector& xi);

/// The r ∈ p∧p whose β equals B_ξ; calibrate_frobenius(result, ξ) = 1.
Bivector frobenius_to_r(const Subspace& p, const DualVector& xi);

struct CrossCheckReport {
  Bivector closed_form;              // displayed double sum, projected to sl(n)∧sl(n)
  bool proportional = false;
  std::optional<Rational> scalar;    // closed_form = scalar · primary when proportional
};

struct JordanianR {
  std::size_t n;
  Bivector r;                // Frobenius-route construction
  Subspace parabolic;        // {x ∈ sl(n) : x_nj = 0, j < n}
  DualVector xi;             // −n Σ E*_{i,i+1}
  CrossCheckReport cross_check;
};

/// The generalized Jordanian r-matrix on sl(n), n ≥ 2.
JordanianR jordanian_r(std::size_t n);

/// The Jordanian parabolic as a subspace of a realized sl(n).
Subspace jordanian_parabolic(const AlgebraPtr& sl);

/// The displayed gl(n) double sum, before projection.
QMatrix jordanian_closed_form_gl(std::size_t n);

} // namespace ybfk
