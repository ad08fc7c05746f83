#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <utility>
#include <vector>

#include "geolie/errors.hpp"

namespace geolie {

struct SequenceDefectReport {
  double K_step = 0.0;
  double K_align = 0.0;
  double K = 0.0;
  bool unbounded_both_sides = false;
};

/// Minimal defect constants for a window of a point sequence: K_step bounds
/// consecutive distances by 1 + K, K_align bounds the additivity defect
/// d(i,j) + d(j,k) - d(i,k) by K d(i,k) + K over all ordered triples. Exact
/// minima over the window; the unboundedness flag is a finite-window
/// heuristic comparing outer and inner half distances from the center.
inline SequenceDefectReport quasi_straight_defect(int count, const std::function<double(int, int)>& metric) {
  if (count < 3) throw Error(Err::WindowTooShort, "defect window needs at least 3 points");
  SequenceDefectReport rep;
  for (int k = 0; k + 1 < count; ++k)
    rep.K_step = std::max(rep.K_step, metric(k, k + 1) - 1.0);
  rep.K_step = std::max(rep.K_step, 0.0);
  for (int i = 0; i < count; ++i)
    for (int j = i + 1; j < count; ++j) {
      const double dij = metric(i, j);
      for (int k = j + 1; k < count; ++k) {
        const double defect = dij + metric(j, k) - metric(i, k);
        rep.K_align = std::max(rep.K_align, defect / (metric(i, k) + 1.0));
      }
    }
  rep.K_align = std::max(rep.K_align, 0.0);
  rep.K = std::max(rep.K_step, rep.K_align);

  const int c = (count - 1) / 2;
  auto side_unbounded = [&](int lo, int hi) {  // indices lo..hi away from center, ordered by |idx-c|
    const int len = hi - lo + 1;
    if (len <= 0) return false;
    double inner = 0.0;
    double outer = 0.0;
    for (int idx = lo; idx <= hi; ++idx) {
      const double d = metric(c, idx);
      const int off = std::abs(idx - c);
      if (off <= (len + 1) / 2)
        inner = std::max(inner, d);
      else
        outer = std::max(outer, d);
    }
    return outer >= inner + 1.0;
  };
  rep.unbounded_both_sides = side_unbounded(0, c - 1) && side_unbounded(c + 1, count - 1);
  return rep;
}

struct QiConstantsFit {
  double L = 1.0;
  double C = 0.0;
  int lower_violations = 0;
  bool large_scale_lipschitz = true;
};

/// Fits the multiplicative constant on well-separated pairs and the additive
/// one on the rest, then checks the matching lower bound d/L - C with the
/// same constants. samples holds (domain distance, image distance) pairs.
inline QiConstantsFit estimate_qi_constants(const std::vector<std::pair<double, double>>& samples) {
  if (samples.empty()) throw Error(Err::EmptySample, "constant estimation needs at least one sample pair");
  QiConstantsFit fit;
  double L = 0.0;
  bool any_far = false;
  for (const auto& [dom, img] : samples)
    if (dom >= 1.0) {
      any_far = true;
      L = std::max(L, img / dom);
    }
  if (!any_far || L <= 0.0) L = 1.0;
  double C = 0.0;
  for (const auto& [dom, img] : samples)
    if (dom < 1.0) C = std::max(C, img - L * dom);
  C = std::max(C, 0.0);
  fit.L = L;
  fit.C = C;
  constexpr double tol = 1e-12;
  for (const auto& [dom, img] : samples)
    if (img < dom / L - C - tol) ++fit.lower_violations;
  fit.large_scale_lipschitz = fit.lower_violations == 0;
  return fit;
}

}  // namespace geolie
