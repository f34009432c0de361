#pragma once

#include "ybfk/json_io.hpp"
#include "ybfk/lie_algebra.hpp"
#include "ybfk/matgroup.hpp"
#include "ybfk/rmatrix.hpp"

#include <initializer_list>

namespace ybfk::test {

// sl(2) basis order.
inline constexpr std::size_t E = 0, F = 1, H = 2;

inline Rational q(long p, long d = 1) {
  Rational r{mpz_class(p), mpz_class(d)};
  r.canonicalize();
  return r;
}

inline Vector vec(std::initializer_list<Rational> c) { return Vector(std::vector<Rational>(c)); }
inline DualVector dvec(std::initializer_list<Rational> c) { return DualVector(std::vector<Rational>(c)); }

inline Bivector e_wedge_h() { return builtin_bivector("sl2-jordanian"); }

inline GroupElement g2(const Rational& a, const Rational& b, const Rational& c, const Rational& d) {
  return GroupElement::from_rows({{a, b}, {c, d}});
}

inline GroupElement borel(const Rational& a, const Rational& b) { return g2(a, b, 0, Rational(1 / a)); }

inline GroupElement s2() { return weyl_representative(2); }

} // namespace ybfk::test
