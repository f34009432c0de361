#pragma once

#include "ybfk/polynomial.hpp"
#include "ybfk/rmatrix.hpp"

#include <optional>
#include <ostream>
#include <vector>

namespace ybfk {

struct FlowOptions {
  double dt = 1e-3;
  std::size_t steps = 10000;
  // Rescale g by det(g)^{-1/n} after each step; reported in FlowReport.
  bool renormalize = true;
  // Keep every k-th state in the trajectory; 0 keeps only the endpoints.
  std::size_t record_every = 0;
};

struct FlowSample {
  std::size_t step = 0;
  Matrix<double> g;
  double h = 0;
  double det = 0;
  std::optional<double> leaf_ratio; // (T11 − T22)/T21 on SL(2) when T21 ≠ 0
};

struct FlowReport {
  std::vector<FlowSample> trajectory;
  Matrix<double> final_point;
  double max_det_drift = 0;                // max |det g_t − 1|
  std::optional<double> classifier_drift;  // SL(2) only
  double energy_drift = 0;                 // max |h(g_t) − h(g_0)|
  bool renormalized = false;
};

/// Integrates ġ = Π(g)∇h(g) with classical RK4 in double precision.
/// Throws NonFinite if the state overflows.
FlowReport hamiltonian_flow(const Bivector& r, const Polynomial& h, const Matrix<double>& g0,
                            const FlowOptions& options);

double determinant_double(const Matrix<double>& g);

/// One JSON object per line: {"step", "entries", "h", "det", "leaf_ratio"}.
void write_trajectory_jsonl(std::ostream& out, const FlowReport& report);

} // namespace ybfk
