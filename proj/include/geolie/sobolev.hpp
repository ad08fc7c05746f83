#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

#include "geolie/errors.hpp"
#include "geolie/graph.hpp"
#include "geolie/rng.hpp"

namespace geolie {

struct SobolevProbeResult {
  double C_q = 0.0;
  double C_q_inf = 0.0;
  int violations = 0;
  double s = 0.0;  // target exponent Nq/(N-q)
};

/// Empirical smallest constants (C_q, C_q_inf) such that
///   (sum |u|^s mu)^{1/s} <= C_q (sum w g^q)^{1/q} + C_q_inf * max|u|
/// holds for all sampled random vertex functions, with C_q_inf restricted to
/// the grid {0, V^{1/s}}. The pair is lexicographically smallest: C_q_inf = 0
/// is kept whenever feasible. Diagnostic only; violations reports how many
/// samples fail under the returned pair.
inline SobolevProbeResult sobolev_constant_probe(const MetricMeasureGraph& g, double N, double q, int samples,
                                                 std::uint64_t seed) {
  if (!(N > 1.0)) throw Error(Err::BadExponent, "dimension parameter must exceed 1");
  if (!(q >= 1.0) || !(q < N)) throw Error(Err::BadExponent, "integrability exponent must lie in [1, N)");
  if (samples < 0) throw Error(Err::BadInput, "sample count must be nonnegative");
  SobolevProbeResult out;
  const double s = N * q / (N - q);
  out.s = s;
  const double vterm = std::pow(g.total_measure(), 1.0 / s);

  struct Sample {
    double lhs;
    double grad;
    double sup;
  };
  std::vector<Sample> stats;
  Rng rng(seed);
  for (int trial = 0; trial < samples; ++trial) {
    std::vector<double> u(static_cast<std::size_t>(g.vertex_count));
    for (auto& x : u) x = rng.next_double() * 2.0 - 1.0;
    double lhs = 0.0;
    double sup = 0.0;
    for (int v = 0; v < g.vertex_count; ++v) {
      lhs += std::pow(std::abs(u[static_cast<std::size_t>(v)]), s) * g.measure[static_cast<std::size_t>(v)];
      sup = std::max(sup, std::abs(u[static_cast<std::size_t>(v)]));
    }
    lhs = std::pow(lhs, 1.0 / s);
    double grad = 0.0;
    for (const auto& e : g.edges) {
      const double d = std::abs(u[static_cast<std::size_t>(e.u)] - u[static_cast<std::size_t>(e.v)]) / e.length;
      grad += e.weight * std::pow(d, q);
    }
    grad = std::pow(grad, 1.0 / q);
    stats.push_back({lhs, grad, sup});
  }

  for (double cinf : {0.0, vterm}) {
    bool feasible = true;
    double cq = 0.0;
    for (const auto& st : stats) {
      const double need = st.lhs - cinf * st.sup;
      if (st.grad > 0.0) {
        cq = std::max(cq, need / st.grad);
      } else if (need > 1e-12) {
        feasible = false;
        break;
      }
    }
    if (feasible) {
      out.C_q = std::max(cq, 0.0);
      out.C_q_inf = cinf;
      out.violations = 0;
      return out;
    }
  }
  // Unreachable for positive measures: the second grid point always fits.
  out.C_q_inf = vterm;
  out.violations = static_cast<int>(stats.size());
  return out;
}

}  // namespace geolie
