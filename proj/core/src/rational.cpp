#include "ybfk/rational.hpp"

#include "ybfk/error.hpp"

#include <cctype>

namespace ybfk {

namespace {

// Base 0 would read a leading zero as octal.
mpz_class decimal(std::string_view digits) { return mpz_class(std::string(digits), 10); }

bool all_digits(std::string_view s) {
  if (s.empty())
    return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c)))
      return false;
  return true;
}

} // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);

  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }

  Rational value;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    auto num = s.substr(0, slash);
    auto den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
      throw ParseError("malformed rational '" + std::string(text) + "'");
    mpz_class d = decimal(den);
    if (d == 0)
      throw ParseError("zero denominator in '" + std::string(text) + "'");
    value = Rational(decimal(num), d);
    value.canonicalize();
  } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
    auto whole = s.substr(0, dot);
    auto frac = s.substr(dot + 1);
    if ((!whole.empty() && !all_digits(whole)) || (!frac.empty() && !all_digits(frac)) ||
        (whole.empty() && frac.empty()))
      throw ParseError("malformed decimal '" + std::string(text) + "'");
    mpz_class scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i)
      scale *= 10;
    mpz_class digits = decimal(std::string(whole) + std::string(frac));
    value = Rational(digits, scale);
    value.canonicalize();
  } else {
    if (!all_digits(s))
      throw ParseError("malformed rational '" + std::string(text) + "'");
    value = Rational(decimal(s));
  }
  return negative ? Rational(-value) : value;
}

std::string to_string(const Rational& q) { return q.get_str(); }

} // namespace ybfk
