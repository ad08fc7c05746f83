#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Sparse>
#include <Eigen/SparseCholesky>

#include "geolie/errors.hpp"
#include "geolie/graph.hpp"
#include "geolie/maxflow.hpp"

namespace geolie {

/// Condenser plates. F = nullopt means "at infinity": the graph's
/// infinity_boundary stands in for the complement of a large compact set.
struct Capacitor {
  std::vector<int> E;
  std::optional<std::vector<int>> F;
};

struct CapacityResult {
  double value = 0.0;  // may be +infinity
  std::vector<double> potential;
  double p = 2.0;
  int iterations = 0;
  double residual = 0.0;
};

namespace detail {

/// Differences at rounding scale count as exactly flat. For p < 2 the slope
/// of |d|^(p-1) is unbounded at zero, so last-ulp solver noise on an edge
/// that is flat at the minimizer would otherwise inject an O(1) gradient.
constexpr double kFlatSnap = 1e-13;

inline std::vector<double> energy_gradient(const MetricMeasureGraph& g, const std::vector<double>& u, double p) {
  std::vector<double> grad(u.size(), 0.0);
  for (const auto& e : g.edges) {
    const double a = e.weight / std::pow(e.length, p);
    const double d = u[static_cast<std::size_t>(e.u)] - u[static_cast<std::size_t>(e.v)];
    if (std::abs(d) <= kFlatSnap) continue;
    const double t = a * p * std::pow(std::abs(d), p - 1.0) * (d > 0.0 ? 1.0 : -1.0);
    grad[static_cast<std::size_t>(e.u)] += t;
    grad[static_cast<std::size_t>(e.v)] -= t;
  }
  return grad;
}

inline double energy_gradient_residual(const MetricMeasureGraph& g, const std::vector<double>& u, double p,
                                       const std::vector<int>& free_of) {
  const auto grad = energy_gradient(g, u, p);
  double res = 0.0;
  for (std::size_t v = 0; v < u.size(); ++v)
    if (free_of[v] >= 0) res = std::max(res, std::abs(grad[v]));
  return res;
}

/// Gauss-Seidel polish with exact single-vertex line solves. The one-variable
/// energy derivative is strictly increasing, so bisection finds its root to
/// machine precision; results within rounding distance of a neighbor value
/// snap onto it exactly. Rescues the endgame where reweighted steps go
/// ill-conditioned near flat edges (p < 2). Returns the final residual.
inline double polish_coordinates(const MetricMeasureGraph& g, std::vector<double>& u, double p,
                                 const std::vector<int>& free_of, double tolerance, int max_sweeps) {
  const auto slope = [&](int v, double t) {
    double s = 0.0;
    for (auto [y, e] : g.adj[static_cast<std::size_t>(v)]) {
      const auto& ed = g.edges[static_cast<std::size_t>(e)];
      const double a = ed.weight / std::pow(ed.length, p);
      const double d = t - u[static_cast<std::size_t>(y)];
      if (d == 0.0) continue;
      s += a * p * std::pow(std::abs(d), p - 1.0) * (d > 0.0 ? 1.0 : -1.0);
    }
    return s;
  };
  double residual = energy_gradient_residual(g, u, p, free_of);
  for (int sweep = 0; sweep < max_sweeps && residual > tolerance; ++sweep) {
    for (int v = 0; v < g.vertex_count; ++v) {
      if (free_of[static_cast<std::size_t>(v)] < 0) continue;
      double lo = 0.0, hi = 1.0;
      if (slope(v, lo) >= 0.0) {
        hi = lo;
      } else if (slope(v, hi) <= 0.0) {
        lo = hi;
      } else {
        for (int it = 0; it < 90 && hi - lo > 0.0; ++it) {
          const double mid = 0.5 * (lo + hi);
          if (slope(v, mid) < 0.0) {
            lo = mid;
          } else {
            hi = mid;
          }
        }
      }
      double t = 0.5 * (lo + hi);
      double gap = kFlatSnap;
      for (auto [y, e] : g.adj[static_cast<std::size_t>(v)]) {
        (void)e;
        const double w = u[static_cast<std::size_t>(y)];
        if (std::abs(t - w) <= gap) {
          gap = std::abs(t - w);
          t = w;
        }
      }
      u[static_cast<std::size_t>(v)] = t;
    }
    residual = energy_gradient_residual(g, u, p, free_of);
  }
  return residual;
}

/// Weighted-Laplacian Dirichlet solve on the free vertices. The boundary data
/// sits in {0,1}, so the solution obeys the min/max principle and no clamping
/// is needed.
class DirichletSolver {
 public:
  DirichletSolver(const MetricMeasureGraph& g, std::vector<int> free_of, int free_count)
      : g_(g), free_of_(std::move(free_of)), nf_(free_count), dense_(free_count <= 64) {
    vert_of_.resize(static_cast<std::size_t>(nf_), 0);
    for (std::size_t v = 0; v < free_of_.size(); ++v)
      if (free_of_[v] >= 0) vert_of_[static_cast<std::size_t>(free_of_[v])] = static_cast<int>(v);
    if (!dense_) {
      std::vector<Eigen::Triplet<double>> pattern;
      for (int i = 0; i < nf_; ++i) pattern.emplace_back(i, i, 1.0);
      for (const auto& e : g_.edges) {
        const int fu = free_of_[static_cast<std::size_t>(e.u)];
        const int fv = free_of_[static_cast<std::size_t>(e.v)];
        if (fu >= 0 && fv >= 0) {
          pattern.emplace_back(fu, fv, 1.0);
          pattern.emplace_back(fv, fu, 1.0);
        }
      }
      sparse_mat_.resize(nf_, nf_);
      sparse_mat_.setFromTriplets(pattern.begin(), pattern.end());
      sparse_solver_.analyzePattern(sparse_mat_);
    }
  }

  /// omega: one conductance per edge. Returns the harmonic extension on the
  /// free vertices, or nullopt if the factorization fails. The system is
  /// solved in correction form (unknown x - u, right-hand side the weighted
  /// residual at u): near convergence the correction is tiny, so solve error,
  /// which scales with the size of the unknown, stays far below it even when
  /// the reweighting makes the matrix badly conditioned.
  std::optional<std::vector<double>> solve(const std::vector<double>& omega, const std::vector<double>& u) {
    Eigen::VectorXd rhs = Eigen::VectorXd::Zero(nf_);
    Eigen::VectorXd delta;
    if (dense_) {
      Eigen::MatrixXd L = Eigen::MatrixXd::Zero(nf_, nf_);
      assemble(omega, u, rhs, [&](int i, int j, double w) { L(i, j) += w; });
      Eigen::LDLT<Eigen::MatrixXd> ldlt(L);
      if (ldlt.info() != Eigen::Success) return std::nullopt;
      delta = ldlt.solve(rhs);
    } else {
      std::vector<Eigen::Triplet<double>> trips;
      assemble(omega, u, rhs, [&](int i, int j, double w) { trips.emplace_back(i, j, w); });
      sparse_mat_.setFromTriplets(trips.begin(), trips.end());
      sparse_solver_.factorize(sparse_mat_);
      if (sparse_solver_.info() != Eigen::Success) return std::nullopt;
      delta = sparse_solver_.solve(rhs);
      if (sparse_solver_.info() != Eigen::Success) return std::nullopt;
    }
    std::vector<double> x(static_cast<std::size_t>(nf_));
    for (int i = 0; i < nf_; ++i)
      x[static_cast<std::size_t>(i)] = u[static_cast<std::size_t>(vert_of_[static_cast<std::size_t>(i)])] + delta(i);
    return x;
  }

 private:
  template <typename Add>
  void assemble(const std::vector<double>& omega, const std::vector<double>& u, Eigen::VectorXd& rhs, Add add) {
    for (std::size_t e = 0; e < g_.edges.size(); ++e) {
      const auto& ed = g_.edges[e];
      const double w = omega[e];
      const double d = u[static_cast<std::size_t>(ed.u)] - u[static_cast<std::size_t>(ed.v)];
      const int fu = free_of_[static_cast<std::size_t>(ed.u)];
      const int fv = free_of_[static_cast<std::size_t>(ed.v)];
      if (fu >= 0) {
        add(fu, fu, w);
        if (fv >= 0) add(fu, fv, -w);
        rhs(fu) -= w * d;
      }
      if (fv >= 0) {
        add(fv, fv, w);
        if (fu >= 0) add(fv, fu, -w);
        rhs(fv) += w * d;
      }
    }
  }

  const MetricMeasureGraph& g_;
  std::vector<int> free_of_;
  std::vector<int> vert_of_;
  int nf_;
  bool dense_;
  Eigen::SparseMatrix<double> sparse_mat_;
  Eigen::SimplicialLDLT<Eigen::SparseMatrix<double>> sparse_solver_;
};

}  // namespace detail

/// Energy of the distance-quotient potential u = d_E / (d_E + d_F); an upper
/// bound for the p-capacity, tight on paths.
inline double capacity_upper_teichmuller(const MetricMeasureGraph& g, const std::vector<int>& E,
                                         const std::vector<int>& F, double p) {
  if (p < 1.0) throw Error(Err::BadExponent, "capacity exponent must be at least 1");
  auto em = to_mask(g, E);
  auto fm = to_mask(g, F);
  for (int v = 0; v < g.vertex_count; ++v)
    if (em[static_cast<std::size_t>(v)] && fm[static_cast<std::size_t>(v)])
      throw Error(Err::OverlappingSets, "capacitor plates must be disjoint");
  if (E.empty() || F.empty()) return 0.0;
  auto de = shortest_path_distances(g, E);
  auto df = shortest_path_distances(g, F);
  std::vector<double> u(static_cast<std::size_t>(g.vertex_count), 0.0);
  for (int v = 0; v < g.vertex_count; ++v)
    u[static_cast<std::size_t>(v)] =
        de[static_cast<std::size_t>(v)] / (de[static_cast<std::size_t>(v)] + df[static_cast<std::size_t>(v)]);
  return p_energy(g, u, p);
}

inline CapacityResult p_capacity(const MetricMeasureGraph& g, const Capacitor& cap, double p,
                                 double tolerance = 1e-10) {
  if (p < 1.0) throw Error(Err::BadExponent, "capacity exponent must be at least 1");
  if (cap.E.empty()) throw Error(Err::BadInput, "capacitor plate E must be nonempty");
  std::vector<int> F;
  if (cap.F.has_value()) {
    F = *cap.F;
  } else {
    if (g.infinity_boundary.empty())
      throw Error(Err::NoInfinityBoundary, "capacity at infinity needs a nonempty infinity boundary");
    F = g.infinity_boundary;
  }
  auto em = to_mask(g, cap.E);
  auto fm = to_mask(g, F);

  CapacityResult out;
  out.p = p;
  out.potential.assign(static_cast<std::size_t>(g.vertex_count), 0.0);

  bool overlap = false;
  for (int v = 0; v < g.vertex_count; ++v)
    if (em[static_cast<std::size_t>(v)] && fm[static_cast<std::size_t>(v)]) overlap = true;
  if (overlap) {
    for (int v = 0; v < g.vertex_count; ++v)
      out.potential[static_cast<std::size_t>(v)] = em[static_cast<std::size_t>(v)] ? 1.0 : 0.0;
    out.value = std::numeric_limits<double>::infinity();
    return out;
  }
  if (F.empty()) {
    out.potential.assign(static_cast<std::size_t>(g.vertex_count), 1.0);
    out.value = 0.0;
    return out;
  }

  if (p == 1.0) {
    double total = 0.0;
    for (const auto& e : g.edges) total += e.weight / e.length;
    const int s = g.vertex_count;
    const int t = g.vertex_count + 1;
    detail::MaxFlow mf(g.vertex_count + 2);
    for (const auto& e : g.edges) {
      const double c = e.weight / e.length;
      mf.add_edge(e.u, e.v, c);
      mf.add_edge(e.v, e.u, c);
    }
    for (int v : cap.E) mf.add_edge(s, v, total + 1.0);
    for (int v : F) mf.add_edge(v, t, total + 1.0);
    mf.solve(s, t);
    const auto& side = mf.source_side();
    for (int v = 0; v < g.vertex_count; ++v)
      out.potential[static_cast<std::size_t>(v)] = side[static_cast<std::size_t>(v)] ? 1.0 : 0.0;
    out.value = p_energy(g, out.potential, 1.0);
    out.iterations = 1;
    return out;
  }

  // p > 1: iteratively reweighted least squares, damped on the true energy,
  // seeded with the distance-quotient potential.
  std::vector<int> free_of(static_cast<std::size_t>(g.vertex_count), -1);
  int nf = 0;
  for (int v = 0; v < g.vertex_count; ++v)
    if (!em[static_cast<std::size_t>(v)] && !fm[static_cast<std::size_t>(v)]) free_of[static_cast<std::size_t>(v)] = nf++;

  auto de = shortest_path_distances(g, cap.E);
  auto df = shortest_path_distances(g, F);
  std::vector<double> u(static_cast<std::size_t>(g.vertex_count), 0.0);
  for (int v = 0; v < g.vertex_count; ++v) {
    if (em[static_cast<std::size_t>(v)]) {
      u[static_cast<std::size_t>(v)] = 1.0;
    } else if (fm[static_cast<std::size_t>(v)]) {
      u[static_cast<std::size_t>(v)] = 0.0;
    } else {
      u[static_cast<std::size_t>(v)] =
          df[static_cast<std::size_t>(v)] / (de[static_cast<std::size_t>(v)] + df[static_cast<std::size_t>(v)]);
    }
  }

  if (nf == 0) {
    out.potential = u;
    out.value = p_energy(g, u, p);
    return out;
  }

  detail::DirichletSolver solver(g, free_of, nf);
  std::vector<double> omega(g.edges.size(), 0.0);
  const int max_iterations = 100000;
  constexpr double eps_floor = 1e-16;
  double eps = 1e-1;
  int iterations = 0;
  double residual = detail::energy_gradient_residual(g, u, p, free_of);

  while (residual > tolerance) {
    if (iterations >= max_iterations)
      throw Error(Err::SolverDiverged, "capacity solver did not reach the requested residual");
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
      const auto& ed = g.edges[e];
      const double a = ed.weight / std::pow(ed.length, p);
      const double d = u[static_cast<std::size_t>(ed.u)] - u[static_cast<std::size_t>(ed.v)];
      omega[e] = a * std::pow(d * d + eps * eps, (p - 2.0) / 2.0);
    }
    auto solved = solver.solve(omega, u);
    bool accepted = false;
    double step = 0.0;
    if (solved) {
      const double e0 = p_energy(g, u, p);
      double alpha = 1.0;
      while (alpha >= 1e-10) {
        std::vector<double> trial = u;
        double s = 0.0;
        for (int v = 0; v < g.vertex_count; ++v) {
          const int f = free_of[static_cast<std::size_t>(v)];
          if (f < 0) continue;
          const double nu = u[static_cast<std::size_t>(v)] +
                            alpha * ((*solved)[static_cast<std::size_t>(f)] - u[static_cast<std::size_t>(v)]);
          s = std::max(s, std::abs(nu - trial[static_cast<std::size_t>(v)]));
          trial[static_cast<std::size_t>(v)] = nu;
        }
        // A step must make progress, not merely not regress: for p > 2 the
        // undamped reweighted update can settle into a two-cycle around the
        // minimizer whose points have equal energy, so when the energy does
        // not strictly decrease the first-order residual has to.
        const double e1 = p_energy(g, trial, p);
        if (e1 <= e0 * (1.0 + 1e-15) + 1e-300) {
          const double r1 = detail::energy_gradient_residual(g, trial, p, free_of);
          if (e1 < e0 || r1 <= tolerance || r1 <= residual * (1.0 - 1e-3)) {
            u = std::move(trial);
            accepted = true;
            step = s;
            break;
          }
        }
        alpha *= 0.5;
      }
    }
    ++iterations;
    if (!accepted || step <= eps * 1e-2) {
      if (eps > eps_floor) {
        eps = std::max(eps * 0.1, eps_floor);
      } else if (!accepted) {
        // Projected gradient fallback; the box is safe because the true
        // minimizer lies in [0,1].
        const double e0 = p_energy(g, u, p);
        auto grad = detail::energy_gradient(g, u, p);
        double eta = 1.0;
        bool moved = false;
        while (eta >= 1e-14) {
          std::vector<double> trial = u;
          for (int v = 0; v < g.vertex_count; ++v) {
            if (free_of[static_cast<std::size_t>(v)] < 0) continue;
            trial[static_cast<std::size_t>(v)] =
                std::clamp(u[static_cast<std::size_t>(v)] - eta * grad[static_cast<std::size_t>(v)], 0.0, 1.0);
          }
          if (p_energy(g, trial, p) < e0) {
            u = std::move(trial);
            moved = true;
            break;
          }
          eta *= 0.5;
        }
        ++iterations;
        if (!moved) {
          residual = detail::polish_coordinates(g, u, p, free_of, tolerance, 2000);
          ++iterations;
          if (residual <= tolerance) break;
          throw Error(Err::SolverDiverged, "capacity solver stalled above the requested residual");
        }
      }
    }
    residual = detail::energy_gradient_residual(g, u, p, free_of);
  }

  out.potential = u;
  out.value = p_energy(g, u, p);
  out.iterations = iterations;
  out.residual = residual;
  return out;
}

/// Closed-form upper bound for the capacity of a metric annulus, in terms of
/// the measure growth constant C and the radii ratio.
inline double annulus_capacity_bound(double C, double q, double p, double rbar, double Rbar) {
  if (!(C > 0.0)) throw Error(Err::BadInput, "growth constant must be positive");
  if (!(q > 1.0) || !(p >= 1.0)) throw Error(Err::BadExponent, "annulus bound needs q > 1 and p >= 1");
  if (!(rbar > 0.0) || !(Rbar > rbar)) throw Error(Err::BadRadii, "annulus radii must satisfy 0 < r < R");
  const double L = std::log(Rbar / rbar);
  if (p == q) return C * (1.0 + q * L) / std::pow(L, q);
  return C * (-(q / (p - q)) * std::pow(Rbar, q - p) + (p / (p - q)) * std::pow(rbar, q - p)) / std::pow(L, p);
}

}  // namespace geolie
