#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <queue>
#include <utility>
#include <vector>

#include "geolie/capacity.hpp"
#include "geolie/errors.hpp"
#include "geolie/graph.hpp"

namespace geolie {
namespace detail {

inline std::vector<std::uint32_t> neighbor_masks(const MetricMeasureGraph& g) {
  std::vector<std::uint32_t> nbr(static_cast<std::size_t>(g.vertex_count), 0);
  for (const auto& e : g.edges) {
    nbr[static_cast<std::size_t>(e.u)] |= 1u << e.v;
    nbr[static_cast<std::size_t>(e.v)] |= 1u << e.u;
  }
  return nbr;
}

inline bool mask_connected(const std::vector<std::uint32_t>& nbr, std::uint32_t mask) {
  if (mask == 0) return false;
  std::uint32_t reach = mask & (~mask + 1);
  for (;;) {
    std::uint32_t next = reach;
    std::uint32_t scan = reach;
    while (scan) {
      const int v = std::countr_zero(scan);
      scan &= scan - 1;
      next |= nbr[static_cast<std::size_t>(v)] & mask;
    }
    if (next == reach) break;
    reach = next;
  }
  return reach == mask;
}

/// True iff every connected component of the induced set meets the target.
inline bool every_component_meets(const std::vector<std::uint32_t>& nbr, std::uint32_t mask, std::uint32_t target) {
  std::uint32_t rest = mask;
  while (rest) {
    std::uint32_t reach = rest & (~rest + 1);
    for (;;) {
      std::uint32_t next = reach;
      std::uint32_t scan = reach;
      while (scan) {
        const int v = std::countr_zero(scan);
        scan &= scan - 1;
        next |= nbr[static_cast<std::size_t>(v)] & rest;
      }
      if (next == reach) break;
      reach = next;
    }
    if ((reach & target) == 0) return false;
    rest &= ~reach;
  }
  return true;
}

inline std::vector<int> mask_vertices(std::uint32_t mask) {
  std::vector<int> out;
  while (mask) {
    out.push_back(std::countr_zero(mask));
    mask &= mask - 1;
  }
  return out;
}

inline void check_ferrand_inputs(const MetricMeasureGraph& g, int x, int y, double Q) {
  if (x < 0 || x >= g.vertex_count || y < 0 || y >= g.vertex_count)
    throw Error(Err::BadInput, "vertex index out of range");
  if (!(Q > 1.0)) throw Error(Err::BadExponent, "conformal exponent must exceed 1");
  if (g.infinity_boundary.empty())
    throw Error(Err::NoInfinityBoundary, "Ferrand distances need a nonempty infinity boundary");
}

/// Simple paths from x to y in increasing length order: all shortest ones,
/// then a beam of near-shortest ones.
inline std::vector<std::vector<int>> near_shortest_paths(const MetricMeasureGraph& g, int x, int y) {
  using Partial = std::pair<double, std::vector<int>>;
  std::priority_queue<Partial, std::vector<Partial>, std::greater<>> heap;
  heap.push({0.0, {x}});
  std::vector<std::vector<int>> found;
  double best = std::numeric_limits<double>::infinity();
  int pops = 0;
  while (!heap.empty() && pops < 50000 && static_cast<int>(found.size()) < 256) {
    auto [len, path] = heap.top();
    heap.pop();
    ++pops;
    const int tail = path.back();
    if (tail == y) {
      if (found.size() >= 16 && len > best) break;
      best = std::min(best, len);
      found.push_back(path);
      continue;
    }
    std::vector<std::pair<int, int>> nbrs = g.adj[static_cast<std::size_t>(tail)];
    std::sort(nbrs.begin(), nbrs.end());
    for (auto [nv, e] : nbrs) {
      if (std::find(path.begin(), path.end(), nv) != path.end()) continue;
      auto ext = path;
      ext.push_back(nv);
      heap.push({len + g.edges[static_cast<std::size_t>(e)].length, std::move(ext)});
    }
  }
  return found;
}

/// Deterministic shortest-path tree from a single source.
inline std::pair<std::vector<double>, std::vector<int>> dijkstra_tree(const MetricMeasureGraph& g, int src) {
  constexpr double kInf = std::numeric_limits<double>::infinity();
  std::vector<double> dist(static_cast<std::size_t>(g.vertex_count), kInf);
  std::vector<int> parent(static_cast<std::size_t>(g.vertex_count), -1);
  using Item = std::pair<double, int>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  dist[static_cast<std::size_t>(src)] = 0.0;
  heap.push({0.0, src});
  while (!heap.empty()) {
    auto [d, v] = heap.top();
    heap.pop();
    if (d > dist[static_cast<std::size_t>(v)]) continue;
    for (auto [nv, e] : g.adj[static_cast<std::size_t>(v)]) {
      const double nd = d + g.edges[static_cast<std::size_t>(e)].length;
      if (nd < dist[static_cast<std::size_t>(nv)]) {
        dist[static_cast<std::size_t>(nv)] = nd;
        parent[static_cast<std::size_t>(nv)] = v;
        heap.push({nd, nv});
      }
    }
  }
  return {std::move(dist), std::move(parent)};
}

inline std::vector<int> tree_path(const std::vector<int>& parent, int src, int target) {
  std::vector<int> path;
  for (int v = target; v != -1; v = parent[static_cast<std::size_t>(v)]) {
    path.push_back(v);
    if (v == src) break;
  }
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace detail

/// All-pairs hyperbolic Ferrand distance by exact enumeration of connected
/// subsets, computing each subset's capacity at infinity once.
inline std::vector<std::vector<double>> ferrand_hyperbolic_all(const MetricMeasureGraph& g, double Q) {
  detail::check_ferrand_inputs(g, 0, 0, Q);
  const int n = g.vertex_count;
  if (n > 12) throw Error(Err::TooLargeForExact, "exact Ferrand enumeration is capped at 12 vertices");
  const auto nbr = detail::neighbor_masks(g);
  std::uint32_t infmask = 0;
  for (int v : g.infinity_boundary) infmask |= 1u << v;
  constexpr double kInf = std::numeric_limits<double>::infinity();
  std::vector<std::vector<double>> h(static_cast<std::size_t>(n),
                                     std::vector<double>(static_cast<std::size_t>(n), kInf));
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    if (mask & infmask) continue;
    if (!detail::mask_connected(nbr, mask)) continue;
    const auto verts = detail::mask_vertices(mask);
    const double cap = p_capacity(g, {verts, std::nullopt}, Q).value;
    for (int a : verts)
      for (int b : verts)
        h[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
            std::min(h[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)], cap);
  }
  return h;
}

/// Capacity-based conformal gauge: least capacity at infinity of a connected
/// set joining x and y. Exact mode enumerates; path_upper mode scans a beam
/// of near-shortest paths and is an upper bound.
inline double ferrand_hyperbolic(const MetricMeasureGraph& g, int x, int y, double Q, bool exact) {
  detail::check_ferrand_inputs(g, x, y, Q);
  constexpr double kInf = std::numeric_limits<double>::infinity();
  if (exact) {
    const int n = g.vertex_count;
    if (n > 12) throw Error(Err::TooLargeForExact, "exact Ferrand enumeration is capped at 12 vertices");
    const auto nbr = detail::neighbor_masks(g);
    std::uint32_t infmask = 0;
    for (int v : g.infinity_boundary) infmask |= 1u << v;
    const std::uint32_t want = (1u << x) | (1u << y);
    double best = kInf;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
      if ((mask & want) != want) continue;
      if (mask & infmask) continue;
      if (!detail::mask_connected(nbr, mask)) continue;
      best = std::min(best, p_capacity(g, {detail::mask_vertices(mask), std::nullopt}, Q).value);
    }
    return best;
  }
  double best = kInf;
  for (const auto& path : detail::near_shortest_paths(g, x, y)) {
    bool hits_infinity = false;
    for (int v : path)
      for (int w : g.infinity_boundary)
        if (v == w) hits_infinity = true;
    if (hits_infinity) continue;
    best = std::min(best, p_capacity(g, {path, std::nullopt}, Q).value);
  }
  return best;
}

/// Parabolic Ferrand gauge: reciprocal Q-th root of the least capacity over
/// disjoint pairs of sets containing x resp. y whose every component reaches
/// the infinity boundary.
inline double ferrand_parabolic(const MetricMeasureGraph& g, int x, int y, double Q, bool exact) {
  detail::check_ferrand_inputs(g, x, y, Q);
  if (x == y) return 0.0;
  constexpr double kInf = std::numeric_limits<double>::infinity();
  double best = kInf;
  if (exact) {
    const int n = g.vertex_count;
    if (n > 12) throw Error(Err::TooLargeForExact, "exact Ferrand enumeration is capped at 12 vertices");
    const auto nbr = detail::neighbor_masks(g);
    std::uint32_t infmask = 0;
    for (int v : g.infinity_boundary) infmask |= 1u << v;
    std::vector<int> digit(static_cast<std::size_t>(n), 0);
    for (;;) {
      if (digit[static_cast<std::size_t>(x)] == 1 && digit[static_cast<std::size_t>(y)] == 2) {
        std::uint32_t emask = 0;
        std::uint32_t fmask = 0;
        for (int v = 0; v < n; ++v) {
          if (digit[static_cast<std::size_t>(v)] == 1) emask |= 1u << v;
          if (digit[static_cast<std::size_t>(v)] == 2) fmask |= 1u << v;
        }
        if (detail::every_component_meets(nbr, emask, infmask) &&
            detail::every_component_meets(nbr, fmask, infmask)) {
          const double cap =
              p_capacity(g, {detail::mask_vertices(emask), detail::mask_vertices(fmask)}, Q).value;
          best = std::min(best, cap);
        }
      }
      int pos = 0;
      while (pos < n && digit[static_cast<std::size_t>(pos)] == 2) {
        digit[static_cast<std::size_t>(pos)] = 0;
        ++pos;
      }
      if (pos == n) break;
      ++digit[static_cast<std::size_t>(pos)];
    }
  } else {
    auto [dx, px] = detail::dijkstra_tree(g, x);
    auto [dy, py] = detail::dijkstra_tree(g, y);
    struct TargetPair {
      double cost;
      int a;
      int b;
    };
    std::vector<TargetPair> pairs;
    for (int a : g.infinity_boundary)
      for (int b : g.infinity_boundary)
        pairs.push_back({dx[static_cast<std::size_t>(a)] + dy[static_cast<std::size_t>(b)], a, b});
    std::sort(pairs.begin(), pairs.end(), [](const TargetPair& l, const TargetPair& r) {
      if (l.cost != r.cost) return l.cost < r.cost;
      if (l.a != r.a) return l.a < r.a;
      return l.b < r.b;
    });
    int tried = 0;
    int found = 0;
    for (const auto& pr : pairs) {
      if (++tried > 64 || found >= 8) break;
      auto pathx = detail::tree_path(px, x, pr.a);
      auto pathy = detail::tree_path(py, y, pr.b);
      bool disjoint = true;
      for (int v : pathx)
        for (int w : pathy)
          if (v == w) disjoint = false;
      if (!disjoint) continue;
      ++found;
      best = std::min(best, p_capacity(g, {pathx, pathy}, Q).value);
    }
  }
  if (best == kInf) return 0.0;
  return std::pow(best, -1.0 / Q);
}

}  // namespace geolie
