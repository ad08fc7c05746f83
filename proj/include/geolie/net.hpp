#pragma once

#include <algorithm>
#include <cmath>
#include <queue>
#include <vector>

#include "geolie/errors.hpp"
#include "geolie/graph.hpp"
#include "geolie/rng.hpp"

namespace geolie {

/// Finite metric space with per-point masses, given either by coordinates or
/// a full distance matrix.
struct PointCloud {
  std::vector<std::vector<double>> dist;
  std::vector<double> measure;

  [[nodiscard]] int size() const { return static_cast<int>(dist.size()); }
};

namespace detail {

inline void check_metric(const PointCloud& cloud) {
  const int n = cloud.size();
  constexpr double tol = 1e-9;
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(cloud.dist[static_cast<std::size_t>(i)].size()) != n)
      throw Error(Err::MetricViolation, "distance matrix is not square");
    if (std::abs(cloud.dist[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)]) > tol)
      throw Error(Err::MetricViolation, "distance matrix has a nonzero diagonal entry");
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const double dij = cloud.dist[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      if (dij < -tol) throw Error(Err::MetricViolation, "negative distance");
      if (std::abs(dij - cloud.dist[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)]) > tol)
        throw Error(Err::MetricViolation, "distance matrix is not symmetric");
    }
  // Triangle inequality: all triples on small clouds, a seeded sample on
  // large ones.
  auto check_triple = [&](int i, int j, int k) {
    const auto& d = cloud.dist;
    if (d[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] >
        d[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] +
            d[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)] + tol)
      throw Error(Err::MetricViolation, "triangle inequality fails on a sampled triple");
  };
  if (n <= 40) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) check_triple(i, j, k);
  } else {
    Rng rng(0x9D5F1C3B2A4E6D78ull);
    for (int t = 0; t < 5000; ++t)
      check_triple(rng.next_int(0, n - 1), rng.next_int(0, n - 1), rng.next_int(0, n - 1));
  }
}

inline void check_measure(PointCloud& cloud) {
  if (cloud.measure.empty()) cloud.measure.assign(static_cast<std::size_t>(cloud.size()), 1.0);
  if (static_cast<int>(cloud.measure.size()) != cloud.size())
    throw Error(Err::BadInput, "measure list does not match the point count");
  for (double m : cloud.measure)
    if (!(m > 0.0)) throw Error(Err::BadInput, "point masses must be positive");
}

}  // namespace detail

inline PointCloud cloud_from_points(const std::vector<std::vector<double>>& points,
                                    std::vector<double> measure = {}) {
  if (points.empty()) throw Error(Err::EmptyCloud, "point cloud is empty");
  const std::size_t dim = points.front().size();
  for (const auto& p : points)
    if (p.size() != dim) throw Error(Err::BadInput, "points have mixed dimensions");
  const int n = static_cast<int>(points.size());
  PointCloud cloud;
  cloud.dist.assign(static_cast<std::size_t>(n), std::vector<double>(static_cast<std::size_t>(n), 0.0));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      double s = 0.0;
      for (std::size_t c = 0; c < dim; ++c) {
        const double d = points[static_cast<std::size_t>(i)][c] - points[static_cast<std::size_t>(j)][c];
        s += d * d;
      }
      const double d = std::sqrt(s);
      cloud.dist[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = d;
      cloud.dist[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = d;
    }
  cloud.measure = std::move(measure);
  detail::check_measure(cloud);
  return cloud;
}

inline PointCloud cloud_from_matrix(std::vector<std::vector<double>> dist, std::vector<double> measure = {}) {
  if (dist.empty()) throw Error(Err::EmptyCloud, "point cloud is empty");
  PointCloud cloud;
  cloud.dist = std::move(dist);
  cloud.measure = std::move(measure);
  detail::check_metric(cloud);
  detail::check_measure(cloud);
  return cloud;
}

/// Mass of the ball around a cloud point; open=false uses d <= r.
inline double ball_mass(const PointCloud& cloud, int center, double r, bool open = false) {
  if (center < 0 || center >= cloud.size()) throw Error(Err::BadInput, "ball center out of range");
  double mass = 0.0;
  for (int i = 0; i < cloud.size(); ++i) {
    const double d = cloud.dist[static_cast<std::size_t>(center)][static_cast<std::size_t>(i)];
    if (open ? d < r : d <= r) mass += cloud.measure[static_cast<std::size_t>(i)];
  }
  return mass;
}

struct NetResult {
  MetricMeasureGraph graph;
  std::vector<int> net_indices;  // cloud index of each net vertex
};

/// Greedy maximal separated subset with edges at distance <= 3 epsilon.
/// Deterministic: points scanned in index order, cloud masses assigned to the
/// nearest net point with ties to the lower index.
inline NetResult build_net(const PointCloud& cloud, double epsilon) {
  if (cloud.size() == 0) throw Error(Err::EmptyCloud, "point cloud is empty");
  if (!(epsilon > 0.0)) throw Error(Err::BadInput, "net separation must be positive");
  const int n = cloud.size();
  std::vector<int> net;
  for (int i = 0; i < n; ++i) {
    bool separated = true;
    for (int s : net)
      if (cloud.dist[static_cast<std::size_t>(i)][static_cast<std::size_t>(s)] < epsilon) {
        separated = false;
        break;
      }
    if (separated) net.push_back(i);
  }
  const int m = static_cast<int>(net.size());
  std::vector<double> mass(static_cast<std::size_t>(m), 0.0);
  for (int i = 0; i < n; ++i) {
    int best = 0;
    double bestd = cloud.dist[static_cast<std::size_t>(i)][static_cast<std::size_t>(net[0])];
    for (int k = 1; k < m; ++k) {
      const double d = cloud.dist[static_cast<std::size_t>(i)][static_cast<std::size_t>(net[static_cast<std::size_t>(k)])];
      if (d < bestd) {
        bestd = d;
        best = k;
      }
    }
    mass[static_cast<std::size_t>(best)] += cloud.measure[static_cast<std::size_t>(i)];
  }
  std::vector<GraphEdge> edges;
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b) {
      const double d = cloud.dist[static_cast<std::size_t>(net[static_cast<std::size_t>(a)])]
                                 [static_cast<std::size_t>(net[static_cast<std::size_t>(b)])];
      if (d <= 3.0 * epsilon) {
        const double w = d * (mass[static_cast<std::size_t>(a)] + mass[static_cast<std::size_t>(b)]) / 2.0;
        edges.push_back({a, b, d, w});
      }
    }
  // Connectivity check first, so a sparse net fails with the right error.
  std::vector<std::vector<int>> nbrs(static_cast<std::size_t>(m));
  for (const auto& e : edges) {
    nbrs[static_cast<std::size_t>(e.u)].push_back(e.v);
    nbrs[static_cast<std::size_t>(e.v)].push_back(e.u);
  }
  std::vector<char> seen(static_cast<std::size_t>(m), 0);
  std::queue<int> bfs;
  bfs.push(0);
  seen[0] = 1;
  int reached = 1;
  while (!bfs.empty()) {
    const int x = bfs.front();
    bfs.pop();
    for (int y : nbrs[static_cast<std::size_t>(x)])
      if (!seen[static_cast<std::size_t>(y)]) {
        seen[static_cast<std::size_t>(y)] = 1;
        ++reached;
        bfs.push(y);
      }
  }
  if (reached != m)
    throw Error(Err::DisconnectedNet, "net is disconnected at this separation scale");
  NetResult out;
  out.graph = make_graph(m, std::move(edges), std::move(mass), {});
  out.net_indices = std::move(net);
  return out;
}

}  // namespace geolie
