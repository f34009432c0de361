#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace ybfk {

/// Exact scalar. mpq_class keeps values canonical (lowest terms, positive
/// denominator) after every arithmetic operation.
using Rational = mpq_class;

/// Parses "p", "p/q", "-p/q" or a terminating decimal such as "0.25".
Rational parse_rational(std::string_view text);

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& q);

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

inline Rational abs_value(const Rational& q) { return abs(q); }

} // namespace ybfk
