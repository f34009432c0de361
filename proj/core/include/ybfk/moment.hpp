#pragma once

#include "ybfk/matgroup.hpp"
#include "ybfk/rmatrix.hpp"
#include "ybfk/subspace.hpp"

#include <vector>

namespace ybfk {

/// Coboundary cocycle B(g) = Ad*_g ξ − ξ on the Jordanian parabolic P, read in p*.
struct CocycleData {
  Bivector r;
  Subspace p;        // carrier(r); must be the Jordanian parabolic of sl(n)
  DualVector xi;     // the functional actually used
  Rational scale;    // xi = scale · (functional passed in)

  /// Rescales ξ by calibrate_frobenius so that d_e B = ř⁻¹.
  static CocycleData calibrated(const Bivector& r, const DualVector& xi);
  /// Uses ξ as given.
  static CocycleData uncalibrated(const Bivector& r, const DualVector& xi);

  const LieAlgebra& algebra() const { return *r.parent(); }
};

/// ξ + U for U a subspace of g*, stored as its echelon-reduced representative.
class DualCoset {
public:
  DualCoset(const DualVector& value, Subspace quotient);

  const DualVector& representative() const { return rep_; }
  const Subspace& quotient() const { return quotient_; }
  bool is_zero() const { return rep_.is_zero(); }

  friend bool operator==(const DualCoset& a, const DualCoset& b) {
    return a.quotient_ == b.quotient_ && a.rep_ == b.rep_;
  }

private:
  DualVector rep_;
  Subspace quotient_;
};

/// Throws MembershipError unless g lies in the parabolic.
void require_in_parabolic(const CocycleData& cd, const GroupElement& g);

/// Ad*_g ξ − ξ reduced modulo p^⊥.
DualVector cocycle_B(const CocycleData& cd, const GroupElement& g);

/// max |B(gh) − Ad*_g B(h) − B(g)| modulo p^⊥.
Rational cocycle_defect(const CocycleData& cd, const GroupElement& g, const GroupElement& h);

/// d/dt B(I + t·x) at t = 0, as values on the carrier basis. Exact via dual numbers.
std::vector<Rational> cocycle_derivative(const CocycleData& cd, const Vector& x);

/// max |d_e B(x) − ř⁻¹(x)| over the carrier basis.
Rational cocycle_derivative_defect(const CocycleData& cd, const Vector& x);

/// g∗ζ = Ad*_g ζ + B(g), modulo p^⊥.
DualVector twisted_action(const CocycleData& cd, const GroupElement& g, const DualVector& zeta);

/// Rank of {ad*_x ζ restricted to p : x ∈ basis of p}.
std::size_t orbit_dimension(const Subspace& p, const DualVector& zeta);
/// Twisted version: ad*_x ζ + ř⁻¹(x).
std::size_t orbit_dimension(const CocycleData& cd, const DualVector& zeta);

/// p ∩ Ad_t(p).
Subspace carrier_pair_subalgebra(const Subspace& p, const GroupElement& t);

/// −B(p1) + Ad*_t B(p2) modulo p_t^⊥.
DualCoset moment_J_t(const CocycleData& cd, const GroupElement& p1, const GroupElement& p2,
                     const GroupElement& t);

/// p1⁻¹ · t · p2.
GroupElement nu_t(const GroupElement& p1, const GroupElement& p2, const GroupElement& t);

struct ISValue {
  Rational alpha;       // α = 2(b1/a1 + b2/a2)
  Rational calibrated;  // α/2, the H* coefficient of the calibrated J_s
};

/// Closed form of J_s on B × B for r = E∧H.
ISValue sl2_I_s(const GroupElement& g1, const GroupElement& g2);

/// 2(T11 − T22) + α T21 at g = g1⁻¹ s g2.
Rational reduction_residual(const GroupElement& g1, const GroupElement& g2);

/// max |Π_L(g)·∇⟨B(·), x⟩(g) − x·g|.
Rational moment_property_residual(const CocycleData& cd, const Vector& x, const GroupElement& g);

} // namespace ybfk
