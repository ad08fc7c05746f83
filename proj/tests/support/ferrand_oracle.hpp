#pragma once

#include <cmath>
#include <functional>
#include <limits>
#include <queue>
#include <vector>

#include "geolie/capacity.hpp"
#include "geolie/graph.hpp"

namespace testsupport {

/// Emits every connected vertex set exactly once. Sets are rooted at their
/// smallest vertex and grown recursively: each candidate neighbor is first
/// included, then permanently excluded for the rest of that subtree.
inline void for_each_connected_set(const geolie::MetricMeasureGraph& g,
                                   const std::function<void(const std::vector<int>&)>& emit) {
  const int n = g.vertex_count;
  std::vector<char> in(static_cast<std::size_t>(n), 0);
  std::vector<char> banned(static_cast<std::size_t>(n), 0);
  std::vector<int> set;
  int root = 0;

  std::function<void(std::vector<int>)> grow = [&](std::vector<int> cand) {
    emit(set);
    std::vector<int> banned_here;
    while (!cand.empty()) {
      const int v = cand.back();
      cand.pop_back();
      if (banned[static_cast<std::size_t>(v)] || in[static_cast<std::size_t>(v)]) continue;
      in[static_cast<std::size_t>(v)] = 1;
      set.push_back(v);
      auto next = cand;
      for (auto [y, e] : g.adj[static_cast<std::size_t>(v)]) {
        (void)e;
        if (y > root && !in[static_cast<std::size_t>(y)] && !banned[static_cast<std::size_t>(y)]) next.push_back(y);
      }
      grow(std::move(next));
      set.pop_back();
      in[static_cast<std::size_t>(v)] = 0;
      banned[static_cast<std::size_t>(v)] = 1;
      banned_here.push_back(v);
    }
    for (int v : banned_here) banned[static_cast<std::size_t>(v)] = 0;
  };

  for (root = 0; root < n; ++root) {
    std::fill(banned.begin(), banned.end(), 0);
    in[static_cast<std::size_t>(root)] = 1;
    set.assign(1, root);
    std::vector<int> cand;
    for (auto [y, e] : g.adj[static_cast<std::size_t>(root)]) {
      (void)e;
      if (y > root) cand.push_back(y);
    }
    grow(std::move(cand));
    in[static_cast<std::size_t>(root)] = 0;
  }
}

/// Reference for the hyperbolic conformal gauge: minimum capacity at infinity
/// over connected sets, tabulated for all vertex pairs at once.
inline std::vector<std::vector<double>> oracle_hyperbolic_all(const geolie::MetricMeasureGraph& g, double Q) {
  const int n = g.vertex_count;
  constexpr double kInf = std::numeric_limits<double>::infinity();
  std::vector<char> at_infinity(static_cast<std::size_t>(n), 0);
  for (int v : g.infinity_boundary) at_infinity[static_cast<std::size_t>(v)] = 1;
  std::vector<std::vector<double>> h(static_cast<std::size_t>(n),
                                     std::vector<double>(static_cast<std::size_t>(n), kInf));
  for_each_connected_set(g, [&](const std::vector<int>& set) {
    for (int v : set)
      if (at_infinity[static_cast<std::size_t>(v)]) return;
    const double cap = geolie::p_capacity(g, {set, std::nullopt}, Q).value;
    for (int a : set)
      for (int b : set)
        h[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
            std::min(h[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)], cap);
  });
  return h;
}

/// True iff every connected component of the induced set contains an anchor.
inline bool components_anchored(const geolie::MetricMeasureGraph& g, const std::vector<char>& in,
                                const std::vector<char>& anchor) {
  const int n = g.vertex_count;
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (int s = 0; s < n; ++s) {
    if (!in[static_cast<std::size_t>(s)] || seen[static_cast<std::size_t>(s)]) continue;
    bool hit = false;
    std::queue<int> q;
    q.push(s);
    seen[static_cast<std::size_t>(s)] = 1;
    while (!q.empty()) {
      const int v = q.front();
      q.pop();
      if (anchor[static_cast<std::size_t>(v)]) hit = true;
      for (auto [y, e] : g.adj[static_cast<std::size_t>(v)]) {
        (void)e;
        if (in[static_cast<std::size_t>(y)] && !seen[static_cast<std::size_t>(y)]) {
          seen[static_cast<std::size_t>(y)] = 1;
          q.push(y);
        }
      }
    }
    if (!hit) return false;
  }
  return true;
}

/// Reference for the parabolic conformal gauge: minimize capacity over all
/// disjoint set pairs whose every component contains an infinity vertex,
/// scanning plate masks with nested subset loops.
inline double oracle_parabolic(const geolie::MetricMeasureGraph& g, int x, int y, double Q) {
  if (x == y) return 0.0;
  const int n = g.vertex_count;
  constexpr double kInf = std::numeric_limits<double>::infinity();
  std::vector<char> anchor(static_cast<std::size_t>(n), 0);
  for (int v : g.infinity_boundary) anchor[static_cast<std::size_t>(v)] = 1;
  double best = kInf;
  const std::uint32_t full = (1u << n) - 1u;
  for (std::uint32_t em = 1; em <= full; ++em) {
    if (!(em >> x & 1u) || (em >> y & 1u)) continue;
    std::vector<char> in_e(static_cast<std::size_t>(n), 0);
    std::vector<int> everts;
    for (int v = 0; v < n; ++v)
      if (em >> v & 1u) {
        in_e[static_cast<std::size_t>(v)] = 1;
        everts.push_back(v);
      }
    if (!components_anchored(g, in_e, anchor)) continue;
    const std::uint32_t rest = full & ~em;
    for (std::uint32_t fm = rest; fm != 0; fm = (fm - 1u) & rest) {
      if (!(fm >> y & 1u)) continue;
      std::vector<char> in_f(static_cast<std::size_t>(n), 0);
      std::vector<int> fverts;
      for (int v = 0; v < n; ++v)
        if (fm >> v & 1u) {
          in_f[static_cast<std::size_t>(v)] = 1;
          fverts.push_back(v);
        }
      if (!components_anchored(g, in_f, anchor)) continue;
      best = std::min(best, geolie::p_capacity(g, {everts, fverts}, Q).value);
    }
  }
  if (best == kInf) return 0.0;
  return std::pow(best, -1.0 / Q);
}

}  // namespace testsupport
