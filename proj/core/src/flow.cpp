#include "ybfk/flow.hpp"

#include "ybfk/error.hpp"
#include "ybfk/poisson.hpp"

#include <nlohmann/json.hpp>

#include <cmath>

namespace ybfk {

double determinant_double(const Matrix<double>& g) {
  Matrix<double> m = g;
  const std::size_t n = m.rows();
  double det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    for (std::size_t i = c + 1; i < n; ++i)
      if (std::fabs(m(i, c)) > std::fabs(m(piv, c)))
        piv = i;
    if (m(piv, c) == 0)
      return 0;
    if (piv != c) {
      for (std::size_t j = 0; j < n; ++j)
        std::swap(m(c, j), m(piv, j));
      det = -det;
    }
    det *= m(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      const double f = m(i, c) / m(c, c);
      for (std::size_t j = c; j < n; ++j)
        m(i, j) -= f * m(c, j);
    }
  }
  return det;
}

namespace {

struct Field {
  const Bivector& r;
  std::vector<Polynomial> grad;
  std::size_t n;

  Matrix<double> operator()(const Matrix<double>& g) const {
    std::vector<double> dh(grad.size());
    for (std::size_t q = 0; q < grad.size(); ++q)
      dh[q] = grad[q].evaluate(g);
    const Matrix<double> pi = ambient_bivector_as<double>(r, g);
    return Matrix<double>::from_flat(n, n, pi * dh);
  }
};

std::optional<double> classifier(const Matrix<double>& g) {
  if (g.rows() != 2 || g(1, 0) == 0)
    return std::nullopt;
  return (g(0, 0) - g(1, 1)) / g(1, 0);
}

// Angle-free comparison of [T21 : T11 − T22] with the initial ratio.
double ratio_drift(const Matrix<double>& g, const Matrix<double>& g0) {
  const double a0 = g0(1, 0), b0 = g0(0, 0) - g0(1, 1);
  const double a = g(1, 0), b = g(0, 0) - g(1, 1);
  const double n0 = std::hypot(a0, b0), n1 = std::hypot(a, b);
  if (n0 == 0 || n1 == 0)
    return 0;
  return std::fabs(a0 * b - b0 * a) / (n0 * n1);
}

FlowSample sample(std::size_t step, const Matrix<double>& g, const Polynomial& h) {
  return {step, g, h.evaluate(g), determinant_double(g), classifier(g)};
}

bool finite(const Matrix<double>& g) {
  for (double x : g.flat())
    if (!std::isfinite(x))
      return false;
  return true;
}

} // namespace

FlowReport hamiltonian_flow(const Bivector& r, const Polynomial& h, const Matrix<double>& g0,
                            const FlowOptions& options) {
  const std::size_t n = g0.rows();
  if (g0.cols() != n || h.matrix_size() != n || r.parent()->matrix_size() != n)
    throw DimensionMismatch("flow inputs disagree on the matrix size");
  if (!(options.dt > 0) || !std::isfinite(options.dt))
    throw ParseError("dt must be a positive finite number");

  const Field field{r, h.gradient(), n};
  const double h0 = h.evaluate(g0);

  FlowReport report;
  report.renormalized = options.renormalize;
  report.trajectory.push_back(sample(0, g0, h));
  report.max_det_drift = std::fabs(determinant_double(g0) - 1);
  if (n == 2)
    report.classifier_drift = 0.0;

  Matrix<double> g = g0;
  const double dt = options.dt;
  for (std::size_t step = 1; step <= options.steps; ++step) {
    const auto k1 = field(g);
    const auto k2 = field(g + k1 * (dt / 2));
    const auto k3 = field(g + k2 * (dt / 2));
    const auto k4 = field(g + k3 * dt);
    g = g + (k1 + k2 * 2.0 + k3 * 2.0 + k4) * (dt / 6);
    if (options.renormalize) {
      const double det = determinant_double(g);
      if (det > 0)
        g = g * (1.0 / std::pow(det, 1.0 / static_cast<double>(n)));
    }
    if (!finite(g))
      throw NonFinite("flow left the finite range at step " + std::to_string(step));

    report.max_det_drift = std::max(report.max_det_drift, std::fabs(determinant_double(g) - 1));
    report.energy_drift = std::max(report.energy_drift, std::fabs(h.evaluate(g) - h0));
    if (n == 2)
      report.classifier_drift = std::max(*report.classifier_drift, ratio_drift(g, g0));
    const bool keep = step == options.steps ||
                      (options.record_every != 0 && step % options.record_every == 0);
    if (keep)
      report.trajectory.push_back(sample(step, g, h));
  }
  report.final_point = g;
  return report;
}

void write_trajectory_jsonl(std::ostream& out, const FlowReport& report) {
  for (const auto& s : report.trajectory) {
    nlohmann::ordered_json line;
    line["step"] = s.step;
    line["entries"] = s.g.flat();
    line["h"] = s.h;
    line["det"] = s.det;
    line["leaf_ratio"] = s.leaf_ratio ? nlohmann::ordered_json(*s.leaf_ratio) : nlohmann::ordered_json();
    out << line.dump() << '\n';
  }
}

} // namespace ybfk
