#pragma once

#include "ybfk/matgroup.hpp"

#include <cstdint>
#include <random>

namespace ybfk {

/// Derives an independent per-sample seed (splitmix64 of base and index), so
/// batch results do not depend on how samples are scheduled.
std::uint64_t sample_seed(std::uint64_t base, std::uint64_t index);

/// Deterministic generator of exact rational group elements. `height` bounds
/// the numerators and denominators of every drawn parameter.
class Sampler {
public:
  explicit Sampler(std::uint64_t seed, int height = 5);

  std::uint64_t next() { return engine_(); }
  /// Uniform integer in [lo, hi].
  long integer(long lo, long hi);
  Rational rational();
  Rational nonzero_rational();

  /// Generic point of SL(n).
  GroupElement group(std::size_t n);
  /// Point of the Jordanian parabolic (the Borel subgroup B for n = 2).
  GroupElement parabolic(std::size_t n);
  /// Point of P·s·P.
  GroupElement big_cell(std::size_t n);
  /// ±[[1, b], [0, 1]], a zero-dimensional leaf of SL(2).
  GroupElement z_point();

private:
  std::mt19937_64 engine_;
  int height_;
};

/// One generic SL(n) sample for (seed, height).
GroupElement sample_group(std::size_t n, std::uint64_t seed, int height = 5);

} // namespace ybfk
