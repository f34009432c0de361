#include "ybfk/sampling.hpp"

#include "ybfk/error.hpp"

namespace ybfk {

std::uint64_t sample_seed(std::uint64_t base, std::uint64_t index) {
  std::uint64_t z = base + 0x9E3779B97F4A7C15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

Sampler::Sampler(std::uint64_t seed, int height) : engine_(seed), height_(height) {
  if (height < 1)
    throw DimensionMismatch("sampler height must be positive");
}

long Sampler::integer(long lo, long hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<long>(engine_() % span);
}

Rational Sampler::rational() {
  Rational q(mpz_class(integer(-height_, height_)), mpz_class(integer(1, height_)));
  q.canonicalize();
  return q;
}

Rational Sampler::nonzero_rational() {
  Rational q(mpz_class(integer(1, height_)), mpz_class(integer(1, height_)));
  q.canonicalize();
  return integer(0, 1) ? Rational(-q) : q;
}

GroupElement Sampler::group(std::size_t n) {
  if (n == 2) {
    // [[a, b], [c, (1 + bc)/a]] covers every point with a ≠ 0.
    const Rational a = nonzero_rational();
    const Rational b = rational();
    const Rational c = rational();
    return GroupElement::from_rows({{a, b}, {c, Rational((1 + b * c) / a)}});
  }
  QMatrix m = QMatrix::identity(n);
  for (std::size_t k = 0; k < 3 * n; ++k) {
    const auto i = static_cast<std::size_t>(integer(0, static_cast<long>(n) - 1));
    auto j = static_cast<std::size_t>(integer(0, static_cast<long>(n) - 2));
    if (j >= i)
      ++j;
    const Rational c = rational();
    for (std::size_t col = 0; col < n; ++col)
      m(i, col) += c * m(j, col); // left-multiply by I + c E_ij
  }
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const Rational t = nonzero_rational();
    for (std::size_t col = 0; col < n; ++col) {
      m(i, col) *= t;
      m(i + 1, col) /= t;
    }
  }
  return GroupElement(m);
}

GroupElement Sampler::parabolic(std::size_t n) {
  if (n < 2)
    throw DimensionMismatch("parabolic sampler needs n >= 2");
  QMatrix m = QMatrix::identity(n);
  // Unimodular upper-left block from elementary operations.
  for (std::size_t k = 0; n > 2 && k < 3 * n; ++k) {
    const auto i = static_cast<std::size_t>(integer(0, static_cast<long>(n) - 2));
    auto j = static_cast<std::size_t>(integer(0, static_cast<long>(n) - 3));
    if (j >= i)
      ++j;
    const Rational c = rational();
    for (std::size_t col = 0; col + 1 < n; ++col)
      m(i, col) += c * m(j, col);
  }
  Rational prod = 1;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const Rational t = nonzero_rational();
    prod *= t;
    for (std::size_t col = 0; col + 1 < n; ++col)
      m(i, col) *= t;
    m(i, n - 1) = rational();
  }
  m(n - 1, n - 1) = 1 / prod;
  return GroupElement(m);
}

GroupElement Sampler::big_cell(std::size_t n) {
  return parabolic(n) * weyl_representative(n) * parabolic(n);
}

GroupElement Sampler::z_point() {
  const Rational sign = integer(0, 1) ? 1 : -1;
  return GroupElement::from_rows({{sign, rational()}, {0, sign}});
}

GroupElement sample_group(std::size_t n, std::uint64_t seed, int height) {
  Sampler s(seed, height);
  return s.group(n);
}

} // namespace ybfk
