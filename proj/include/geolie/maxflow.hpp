#pragma once

#include <limits>
#include <queue>
#include <vector>

namespace geolie {
namespace detail {

/// Dinic max-flow on doubles. Small graphs only; the epsilon guards keep
/// blocking-flow rounds from spinning on float dust.
class MaxFlow {
 public:
  explicit MaxFlow(int n) : head_(static_cast<std::size_t>(n), -1), level_(static_cast<std::size_t>(n)), it_(static_cast<std::size_t>(n)) {}

  void add_edge(int u, int v, double cap) {
    arcs_.push_back({v, head_[static_cast<std::size_t>(u)], cap});
    head_[static_cast<std::size_t>(u)] = static_cast<int>(arcs_.size()) - 1;
    arcs_.push_back({u, head_[static_cast<std::size_t>(v)], 0.0});
    head_[static_cast<std::size_t>(v)] = static_cast<int>(arcs_.size()) - 1;
  }

  double solve(int s, int t) {
    double flow = 0.0;
    while (build_levels(s, t)) {
      it_ = head_;
      double pushed;
      while ((pushed = augment(s, t, std::numeric_limits<double>::infinity())) > kEps) flow += pushed;
    }
    source_side_.assign(head_.size(), 0);
    mark(s);
    return flow;
  }

  /// Valid after solve(): vertices reachable from the source in the residual graph.
  [[nodiscard]] const std::vector<char>& source_side() const { return source_side_; }

 private:
  static constexpr double kEps = 1e-12;

  struct Arc {
    int to;
    int next;
    double cap;
  };

  bool build_levels(int s, int t) {
    std::fill(level_.begin(), level_.end(), -1);
    std::queue<int> bfs;
    level_[static_cast<std::size_t>(s)] = 0;
    bfs.push(s);
    while (!bfs.empty()) {
      const int x = bfs.front();
      bfs.pop();
      for (int a = head_[static_cast<std::size_t>(x)]; a != -1; a = arcs_[static_cast<std::size_t>(a)].next) {
        const Arc& arc = arcs_[static_cast<std::size_t>(a)];
        if (arc.cap > kEps && level_[static_cast<std::size_t>(arc.to)] == -1) {
          level_[static_cast<std::size_t>(arc.to)] = level_[static_cast<std::size_t>(x)] + 1;
          bfs.push(arc.to);
        }
      }
    }
    return level_[static_cast<std::size_t>(t)] != -1;
  }

  double augment(int x, int t, double limit) {
    if (x == t) return limit;
    for (int& a = it_[static_cast<std::size_t>(x)]; a != -1; a = arcs_[static_cast<std::size_t>(a)].next) {
      Arc& arc = arcs_[static_cast<std::size_t>(a)];
      if (arc.cap > kEps && level_[static_cast<std::size_t>(arc.to)] == level_[static_cast<std::size_t>(x)] + 1) {
        const double pushed = augment(arc.to, t, std::min(limit, arc.cap));
        if (pushed > kEps) {
          arc.cap -= pushed;
          arcs_[static_cast<std::size_t>(a ^ 1)].cap += pushed;
          return pushed;
        }
      }
    }
    return 0.0;
  }

  void mark(int s) {
    std::queue<int> bfs;
    source_side_[static_cast<std::size_t>(s)] = 1;
    bfs.push(s);
    while (!bfs.empty()) {
      const int x = bfs.front();
      bfs.pop();
      for (int a = head_[static_cast<std::size_t>(x)]; a != -1; a = arcs_[static_cast<std::size_t>(a)].next) {
        const Arc& arc = arcs_[static_cast<std::size_t>(a)];
        if (arc.cap > kEps && !source_side_[static_cast<std::size_t>(arc.to)]) {
          source_side_[static_cast<std::size_t>(arc.to)] = 1;
          bfs.push(arc.to);
        }
      }
    }
  }

  std::vector<Arc> arcs_;
  std::vector<int> head_;
  std::vector<int> level_;
  std::vector<int> it_;
  std::vector<char> source_side_;
};

}  // namespace detail
}  // namespace geolie
