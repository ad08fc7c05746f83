#pragma once

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>
#include <queue>
#include <set>
#include <utility>
#include <vector>

#include "geolie/errors.hpp"
#include "geolie/rational.hpp"

namespace geolie {

struct GraphEdge {
  int u = 0;
  int v = 0;
  double length = 1.0;
  double weight = 1.0;
};

/// Finite connected weighted graph with edge lengths and vertex measures; the
/// discrete stand-in for a metric measure space. infinity_boundary marks the
/// vertices that play the ends of a non-compact space.
struct MetricMeasureGraph {
  int vertex_count = 0;
  std::vector<GraphEdge> edges;
  std::vector<double> measure;
  std::vector<int> infinity_boundary;                // sorted, unique
  std::vector<std::vector<std::pair<int, int>>> adj; // vertex -> (neighbor, edge index)

  [[nodiscard]] double total_measure() const {
    double t = 0.0;
    for (double m : measure) t += m;
    return t;
  }
};

inline MetricMeasureGraph make_graph(int vertex_count, std::vector<GraphEdge> edges,
                                     std::vector<double> measure, std::vector<int> infinity_boundary) {
  if (vertex_count <= 0) throw Error(Err::BadInput, "graph needs at least one vertex");
  if (measure.empty()) measure.assign(static_cast<std::size_t>(vertex_count), 1.0);
  if (static_cast<int>(measure.size()) != vertex_count)
    throw Error(Err::BadInput, "measure list does not match the vertex count");
  for (double m : measure)
    if (!(m > 0.0)) throw Error(Err::BadInput, "vertex measures must be positive");
  MetricMeasureGraph g;
  g.vertex_count = vertex_count;
  g.adj.resize(static_cast<std::size_t>(vertex_count));
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const GraphEdge& ed = edges[e];
    if (ed.u < 0 || ed.u >= vertex_count || ed.v < 0 || ed.v >= vertex_count)
      throw Error(Err::BadInput, "edge endpoint out of range");
    if (ed.u == ed.v) throw Error(Err::BadInput, "self-loops are not allowed");
    if (!(ed.length > 0.0)) throw Error(Err::BadInput, "edge lengths must be positive");
    if (!(ed.weight > 0.0)) throw Error(Err::BadInput, "edge weights must be positive");
    g.adj[static_cast<std::size_t>(ed.u)].push_back({ed.v, static_cast<int>(e)});
    g.adj[static_cast<std::size_t>(ed.v)].push_back({ed.u, static_cast<int>(e)});
  }
  g.edges = std::move(edges);
  g.measure = std::move(measure);
  std::set<int> ib;
  for (int v : infinity_boundary) {
    if (v < 0 || v >= vertex_count) throw Error(Err::BadInput, "infinity boundary vertex out of range");
    ib.insert(v);
  }
  g.infinity_boundary.assign(ib.begin(), ib.end());
  // Connectivity.
  std::vector<char> seen(static_cast<std::size_t>(vertex_count), 0);
  std::queue<int> bfs;
  bfs.push(0);
  seen[0] = 1;
  int reached = 1;
  while (!bfs.empty()) {
    const int x = bfs.front();
    bfs.pop();
    for (auto [y, e] : g.adj[static_cast<std::size_t>(x)])
      if (!seen[static_cast<std::size_t>(y)]) {
        seen[static_cast<std::size_t>(y)] = 1;
        ++reached;
        bfs.push(y);
      }
  }
  if (reached != vertex_count) throw Error(Err::BadInput, "graph is not connected");
  return g;
}

inline std::vector<char> to_mask(const MetricMeasureGraph& g, const std::vector<int>& vertices) {
  std::vector<char> mask(static_cast<std::size_t>(g.vertex_count), 0);
  for (int v : vertices) {
    if (v < 0 || v >= g.vertex_count) throw Error(Err::BadInput, "vertex index out of range");
    mask[static_cast<std::size_t>(v)] = 1;
  }
  return mask;
}

/// Shortest-path distances (edge lengths) from a set of sources; Dijkstra.
inline std::vector<double> shortest_path_distances(const MetricMeasureGraph& g, const std::vector<int>& sources) {
  constexpr double kInf = std::numeric_limits<double>::infinity();
  std::vector<double> dist(static_cast<std::size_t>(g.vertex_count), kInf);
  using Item = std::pair<double, int>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  for (int s : sources) {
    if (s < 0 || s >= g.vertex_count) throw Error(Err::BadInput, "source vertex out of range");
    dist[static_cast<std::size_t>(s)] = 0.0;
    heap.push({0.0, s});
  }
  while (!heap.empty()) {
    auto [d, x] = heap.top();
    heap.pop();
    if (d > dist[static_cast<std::size_t>(x)]) continue;
    for (auto [y, e] : g.adj[static_cast<std::size_t>(x)]) {
      const double nd = d + g.edges[static_cast<std::size_t>(e)].length;
      if (nd < dist[static_cast<std::size_t>(y)]) {
        dist[static_cast<std::size_t>(y)] = nd;
        heap.push({nd, y});
      }
    }
  }
  return dist;
}

/// External vertex boundary: vertices outside S adjacent to S.
inline std::vector<int> graph_boundary(const MetricMeasureGraph& g, const std::vector<int>& s) {
  auto mask = to_mask(g, s);
  std::set<int> out;
  for (int v : s)
    for (auto [y, e] : g.adj[static_cast<std::size_t>(v)])
      if (!mask[static_cast<std::size_t>(y)]) out.insert(y);
  return {out.begin(), out.end()};
}

/// Sum of w_e / len_e over edges crossing S.
inline double perimeter(const MetricMeasureGraph& g, const std::vector<int>& s) {
  auto mask = to_mask(g, s);
  double per = 0.0;
  for (const auto& e : g.edges)
    if (mask[static_cast<std::size_t>(e.u)] != mask[static_cast<std::size_t>(e.v)]) per += e.weight / e.length;
  return per;
}

/// Total variation sum (w_e / len_e) |u(x) - u(y)|.
inline double total_variation(const MetricMeasureGraph& g, const std::vector<double>& u) {
  double tv = 0.0;
  for (const auto& e : g.edges)
    tv += e.weight / e.length * std::abs(u[static_cast<std::size_t>(e.u)] - u[static_cast<std::size_t>(e.v)]);
  return tv;
}

/// Discrete p-energy sum w_e (|u(x) - u(y)| / len_e)^p.
inline double p_energy(const MetricMeasureGraph& g, const std::vector<double>& u, double p) {
  double total = 0.0;
  for (const auto& e : g.edges) {
    const double d = std::abs(u[static_cast<std::size_t>(e.u)] - u[static_cast<std::size_t>(e.v)]) / e.length;
    if (d > 0.0) total += e.weight * std::pow(d, p);
  }
  return total;
}

/// | integral of Per({u > t}) dt  -  TV(u) |, evaluated in exact rational
/// arithmetic over the finite value set. The layer-cake identity makes this
/// exactly zero; the return value is the honest residual.
inline double coarea_residual(const MetricMeasureGraph& g, const std::vector<double>& u) {
  if (static_cast<int>(u.size()) != g.vertex_count)
    throw Error(Err::DimensionMismatch, "function does not match the vertex count");
  std::vector<double> values = u;
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  Rat integral = 0;
  for (std::size_t j = 0; j + 1 < values.size(); ++j) {
    const double t = values[j];
    Rat per = 0;
    for (const auto& e : g.edges) {
      const bool cu = u[static_cast<std::size_t>(e.u)] > t;
      const bool cv = u[static_cast<std::size_t>(e.v)] > t;
      if (cu != cv) per += rat_from_double(e.weight) / rat_from_double(e.length);
    }
    integral += per * (rat_from_double(values[j + 1]) - rat_from_double(t));
  }
  Rat tv = 0;
  for (const auto& e : g.edges) {
    Rat diff = rat_from_double(u[static_cast<std::size_t>(e.u)]) - rat_from_double(u[static_cast<std::size_t>(e.v)]);
    if (diff < 0) diff = -diff;
    tv += rat_from_double(e.weight) / rat_from_double(e.length) * diff;
  }
  Rat res = integral - tv;
  if (res < 0) res = -res;
  return rat_to_double(res);
}

namespace detail {

/// Connected components of the induced subgraph on {v : mask[v]}.
inline std::vector<std::vector<int>> components_of(const MetricMeasureGraph& g, const std::vector<char>& mask) {
  std::vector<std::vector<int>> comps;
  std::vector<char> seen(static_cast<std::size_t>(g.vertex_count), 0);
  for (int start = 0; start < g.vertex_count; ++start) {
    if (!mask[static_cast<std::size_t>(start)] || seen[static_cast<std::size_t>(start)]) continue;
    std::vector<int> comp;
    std::queue<int> bfs;
    bfs.push(start);
    seen[static_cast<std::size_t>(start)] = 1;
    while (!bfs.empty()) {
      const int x = bfs.front();
      bfs.pop();
      comp.push_back(x);
      for (auto [y, e] : g.adj[static_cast<std::size_t>(x)])
        if (mask[static_cast<std::size_t>(y)] && !seen[static_cast<std::size_t>(y)]) {
          seen[static_cast<std::size_t>(y)] = 1;
          bfs.push(y);
        }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

inline bool touches_domain_complement(const MetricMeasureGraph& g, const std::vector<int>& comp,
                                      const std::vector<char>& domain) {
  for (int x : comp)
    for (auto [y, e] : g.adj[static_cast<std::size_t>(x)])
      if (!domain[static_cast<std::size_t>(y)]) return true;
  return false;
}

}  // namespace detail

/// Level-component monotonicity: every connected component of every strict
/// super- and sublevel set inside the domain must reach the domain's
/// complement (where its extreme would be attained).
inline bool is_monotone(const MetricMeasureGraph& g, const std::vector<double>& u,
                        const std::vector<int>& domain) {
  if (static_cast<int>(u.size()) != g.vertex_count)
    throw Error(Err::DimensionMismatch, "function does not match the vertex count");
  auto dom = to_mask(g, domain);
  std::vector<double> values;
  for (int v : domain) values.push_back(u[static_cast<std::size_t>(v)]);
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  for (double t : values) {
    for (int side = 0; side < 2; ++side) {
      std::vector<char> level(static_cast<std::size_t>(g.vertex_count), 0);
      bool any = false;
      for (int v = 0; v < g.vertex_count; ++v) {
        if (!dom[static_cast<std::size_t>(v)]) continue;
        const double x = u[static_cast<std::size_t>(v)];
        if (side == 0 ? x > t : x < t) {
          level[static_cast<std::size_t>(v)] = 1;
          any = true;
        }
      }
      if (!any) continue;
      for (const auto& comp : detail::components_of(g, level))
        if (!detail::touches_domain_complement(g, comp, dom)) return false;
    }
  }
  return true;
}

enum class StraightenOrder { Ascending, Descending };

/// Flattens every strict super/sublevel component trapped inside the domain
/// to the extreme value on its surrounding ring, until none remains. Leaves
/// the function unchanged outside the domain, never increases any p-energy
/// (each edge difference shrinks in absolute value), and strictly decreases
/// the total variation at every step, which bounds the iteration.
inline std::vector<double> straighten(const MetricMeasureGraph& g, std::vector<double> u,
                                      const std::vector<int>& domain,
                                      StraightenOrder order = StraightenOrder::Ascending) {
  if (static_cast<int>(u.size()) != g.vertex_count)
    throw Error(Err::DimensionMismatch, "function does not match the vertex count");
  auto dom = to_mask(g, domain);
  auto flatten_one = [&]() -> bool {
    std::vector<double> values;
    for (int v : domain) values.push_back(u[static_cast<std::size_t>(v)]);
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    if (order == StraightenOrder::Descending) std::reverse(values.begin(), values.end());
    for (double t : values) {
      for (int side = 0; side < 2; ++side) {
        std::vector<char> level(static_cast<std::size_t>(g.vertex_count), 0);
        bool any = false;
        for (int v = 0; v < g.vertex_count; ++v) {
          if (!dom[static_cast<std::size_t>(v)]) continue;
          const double x = u[static_cast<std::size_t>(v)];
          if (side == 0 ? x > t : x < t) {
            level[static_cast<std::size_t>(v)] = 1;
            any = true;
          }
        }
        if (!any) continue;
        for (const auto& comp : detail::components_of(g, level)) {
          if (detail::touches_domain_complement(g, comp, dom)) continue;
          auto in_comp = to_mask(g, comp);
          bool have = false;
          double ring = 0.0;
          for (int x : comp)
            for (auto [y, e] : g.adj[static_cast<std::size_t>(x)]) {
              if (in_comp[static_cast<std::size_t>(y)]) continue;
              const double val = u[static_cast<std::size_t>(y)];
              if (!have) {
                ring = val;
                have = true;
              } else {
                ring = side == 0 ? std::max(ring, val) : std::min(ring, val);
              }
            }
          if (!have) continue;  // whole graph inside the domain, nothing to attain
          for (int x : comp) u[static_cast<std::size_t>(x)] = ring;
          return true;
        }
      }
    }
    return false;
  };
  while (flatten_one()) {
  }
  return u;
}

/// Smallest external boundary over vertex sets holding at least v vertices
/// and at most half the graph (the half-volume cap keeps the finite-graph
/// problem from degenerating to the empty boundary of the full set).
/// Exact mode enumerates all subsets; heuristic mode grows distance balls
/// from every start and is an upper bound.
inline double isoperimetric_profile(const MetricMeasureGraph& g, double v, bool exact) {
  constexpr double kInf = std::numeric_limits<double>::infinity();
  if (!(v > 0.0)) throw Error(Err::BadInput, "profile volume must be positive");
  const int n = g.vertex_count;
  if (v > n) return kInf;
  const int need = static_cast<int>(std::ceil(v - 1e-12));
  const int cap = n / 2;
  if (need > cap) return kInf;
  if (exact) {
    if (n > 20) throw Error(Err::TooLargeForExact, "exact profile enumerates subsets of at most 20 vertices");
    std::vector<std::uint32_t> nbr(static_cast<std::size_t>(n), 0);
    for (const auto& e : g.edges) {
      nbr[static_cast<std::size_t>(e.u)] |= 1u << e.v;
      nbr[static_cast<std::size_t>(e.v)] |= 1u << e.u;
    }
    int best = n + 1;
    for (std::uint32_t s = 1; s < (1u << n); ++s) {
      const int size = std::popcount(s);
      if (size < need || size > cap) continue;
      std::uint32_t reach = 0;
      for (int x = 0; x < n; ++x)
        if (s & (1u << x)) reach |= nbr[static_cast<std::size_t>(x)];
      best = std::min(best, std::popcount(reach & ~s));
    }
    return best <= n ? static_cast<double>(best) : kInf;
  }
  int best = n + 1;
  for (int start = 0; start < n; ++start) {
    auto dist = shortest_path_distances(g, {start});
    std::vector<int> order(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      if (dist[static_cast<std::size_t>(a)] != dist[static_cast<std::size_t>(b)])
        return dist[static_cast<std::size_t>(a)] < dist[static_cast<std::size_t>(b)];
      return a < b;
    });
    std::vector<int> ball;
    for (int size = 1; size <= cap; ++size) {
      ball.push_back(order[static_cast<std::size_t>(size - 1)]);
      if (size < need) continue;
      best = std::min(best, static_cast<int>(graph_boundary(g, ball).size()));
    }
  }
  return best <= n ? static_cast<double>(best) : kInf;
}

}  // namespace geolie
