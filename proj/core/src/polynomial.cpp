#include "ybfk/polynomial.hpp"

#include "ybfk/error.hpp"

#include <cctype>
#include <sstream>

namespace ybfk {

Polynomial Polynomial::constant(std::size_t n, const Rational& c) {
  Polynomial p(n);
  p.add_term(Monomial(n * n, 0), c);
  return p;
}

Polynomial Polynomial::entry(std::size_t n, std::size_t i, std::size_t j) {
  if (i >= n || j >= n)
    throw DimensionMismatch("matrix entry out of range");
  Polynomial p(n);
  Monomial m(n * n, 0);
  m[i * n + j] = 1;
  p.add_term(m, 1);
  return p;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (sgn(c) == 0)
    return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0)
      terms_.erase(it);
  }
}

void Polynomial::require_compatible(const Polynomial& o) const {
  if (n_ != o.n_)
    throw DimensionMismatch("polynomials over different matrix sizes");
}

bool Polynomial::is_constant() const {
  for (const auto& [m, c] : terms_)
    for (unsigned e : m)
      if (e != 0)
        return false;
  return true;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  require_compatible(o);
  for (const auto& [m, c] : o.terms_)
    add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  require_compatible(o);
  for (const auto& [m, c] : o.terms_)
    add_term(m, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& s) {
  if (sgn(s) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_)
    c *= s;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.require_compatible(b);
  Polynomial out(a.n_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) {
      Polynomial::Monomial m(ma.size());
      for (std::size_t v = 0; v < m.size(); ++v)
        m[v] = ma[v] + mb[v];
      out.add_term(m, ca * cb);
    }
  return out;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial out = constant(n_, 1);
  for (unsigned k = 0; k < e; ++k)
    out = out * *this;
  return out;
}

Polynomial Polynomial::derivative(std::size_t var) const {
  if (var >= nvars())
    throw DimensionMismatch("derivative variable out of range");
  Polynomial out(n_);
  for (const auto& [m, c] : terms_) {
    if (m[var] == 0)
      continue;
    Monomial d = m;
    d[var] -= 1;
    out.add_term(d, c * m[var]);
  }
  return out;
}

std::vector<Polynomial> Polynomial::gradient() const {
  std::vector<Polynomial> g;
  g.reserve(nvars());
  for (std::size_t v = 0; v < nvars(); ++v)
    g.push_back(derivative(v));
  return g;
}

std::string Polynomial::to_string() const {
  if (terms_.empty())
    return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rational mag = abs(c);
    os << (sgn(c) < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
    first = false;
    bool any = false;
    std::ostringstream mono;
    for (std::size_t v = 0; v < m.size(); ++v) {
      if (m[v] == 0)
        continue;
      mono << (any ? "*" : "") << 'T' << (v / n_ + 1) << (v % n_ + 1);
      if (m[v] > 1)
        mono << '^' << m[v];
      any = true;
    }
    if (!any)
      os << mag.get_str();
    else if (mag != 1)
      os << mag.get_str() << '*' << mono.str();
    else
      os << mono.str();
  }
  return os.str();
}

namespace {

class Parser {
public:
  Parser(std::string_view text, std::size_t n) : s_(text), n_(n) {}

  Polynomial parse() {
    Polynomial p = expr();
    skip();
    if (pos_ != s_.size())
      fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return p;
  }

private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("polynomial '" + std::string(s_) + "': " + what + " at offset " +
                     std::to_string(pos_));
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
  }

  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Polynomial expr() {
    Polynomial p = term();
    for (;;) {
      if (eat('+'))
        p += term();
      else if (eat('-'))
        p -= term();
      else
        return p;
    }
  }

  Polynomial term() {
    Polynomial p = factor();
    for (;;) {
      if (eat('*')) {
        p = p * factor();
      } else if (eat('/')) {
        Polynomial d = factor();
        if (!d.is_constant() || d.is_zero())
          fail("division by a non-constant or zero");
        p *= Rational(1 / d.terms().begin()->second);
      } else {
        return p;
      }
    }
  }

  Polynomial factor() {
    Polynomial base = unary();
    if (eat('^')) {
      skip();
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
        ++pos_;
      if (start == pos_)
        fail("expected a non-negative integer exponent");
      return base.pow(static_cast<unsigned>(std::stoul(std::string(s_.substr(start, pos_ - start)))));
    }
    return base;
  }

  Polynomial unary() {
    if (eat('-'))
      return unary() * Rational(-1);
    if (eat('+'))
      return unary();
    return primary();
  }

  Polynomial primary() {
    skip();
    if (pos_ >= s_.size())
      fail("unexpected end of input");
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial p = expr();
      if (!eat(')'))
        fail("expected ')'");
      return p;
    }
    if (c == 'T' || c == 't') {
      if (pos_ + 2 >= s_.size())
        fail("truncated variable");
      const int i = s_[pos_ + 1] - '0';
      const int j = s_[pos_ + 2] - '0';
      if (i < 1 || j < 1 || static_cast<std::size_t>(i) > n_ || static_cast<std::size_t>(j) > n_)
        fail("variable out of range for n = " + std::to_string(n_));
      pos_ += 3;
      return Polynomial::entry(n_, static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1));
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      std::size_t start = pos_;
      while (pos_ < s_.size() &&
             (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '.'))
        ++pos_;
      return Polynomial::constant(n_, parse_rational(s_.substr(start, pos_ - start)));
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view s_;
  std::size_t n_;
  std::size_t pos_ = 0;
};

} // namespace

Polynomial Polynomial::parse(std::string_view text, std::size_t n) {
  if (n < 1 || n > 9)
    throw ParseError("polynomial variables support 1 <= n <= 9");
  return Parser(text, n).parse();
}

} // namespace ybfk
