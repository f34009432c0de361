#pragma once

#include "ybfk/matrix.hpp"
#include "ybfk/rational.hpp"

#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ybfk {

/// Multivariate polynomial with exact coefficients in the n² entry variables
/// T11 … Tnn of an n×n matrix; variable (i, j) has index i·n + j (0-based).
class Polynomial {
public:
  using Monomial = std::vector<unsigned>; // exponent per variable

  Polynomial() = default;
  explicit Polynomial(std::size_t n) : n_(n) {}

  static Polynomial constant(std::size_t n, const Rational& c);
  /// T_{i+1, j+1} for 0-based (i, j).
  static Polynomial entry(std::size_t n, std::size_t i, std::size_t j);

  /// Parses +, −, *, ^ (non-negative integer exponents), parentheses,
  /// rational literals ("3/2", "0.5") and variables T11 … Tnn (n ≤ 9).
  static Polynomial parse(std::string_view text, std::size_t n);

  std::size_t matrix_size() const { return n_; }
  std::size_t nvars() const { return n_ * n_; }
  const std::map<Monomial, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;

  Polynomial derivative(std::size_t var) const;
  std::vector<Polynomial> gradient() const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Rational& s);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
  friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
  }
  Polynomial pow(unsigned e) const;

  /// Evaluates at a point given as the row-major entries of a matrix.
  template <class T> T evaluate(std::span<const T> point) const {
    T total(0);
    for (const auto& [mono, c] : terms_) {
      T term = scalar_cast<T>(c);
      for (std::size_t v = 0; v < mono.size(); ++v)
        for (unsigned e = 0; e < mono[v]; ++e)
          term = term * point[v];
      total = total + term;
    }
    return total;
  }
  template <class T> T evaluate(const Matrix<T>& g) const {
    return evaluate<T>(std::span<const T>(g.flat()));
  }

  std::string to_string() const;

private:
  void add_term(const Monomial& m, const Rational& c);
  void require_compatible(const Polynomial& o) const;

  std::size_t n_ = 0;
  std::map<Monomial, Rational> terms_;
};

} // namespace ybfk
