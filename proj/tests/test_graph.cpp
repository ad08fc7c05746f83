#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <limits>
#include <vector>

#include "geolie/graph.hpp"
#include "geolie/rng.hpp"
#include "support/matchers.hpp"
#include "support/random_graph.hpp"

using namespace geolie;

namespace {

MetricMeasureGraph path_graph(int n) {
  std::vector<GraphEdge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1, 1.0, 1.0});
  return make_graph(n, edges, {}, {});
}

MetricMeasureGraph cycle_graph(int n) {
  std::vector<GraphEdge> edges;
  for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n, 1.0, 1.0});
  return make_graph(n, edges, {}, {});
}

}  // namespace

TEST_CASE("graph construction validates its inputs") {
  CHECK_THROWS_MATCHES(make_graph(0, {}, {}, {}), Error, ErrorCodeIs(Err::BadInput));
  CHECK_THROWS_MATCHES(make_graph(2, {{0, 0, 1.0, 1.0}}, {}, {}), Error, ErrorCodeIs(Err::BadInput));
  CHECK_THROWS_MATCHES(make_graph(2, {{0, 2, 1.0, 1.0}}, {}, {}), Error, ErrorCodeIs(Err::BadInput));
  CHECK_THROWS_MATCHES(make_graph(2, {{0, 1, 0.0, 1.0}}, {}, {}), Error, ErrorCodeIs(Err::BadInput));
  CHECK_THROWS_MATCHES(make_graph(2, {{0, 1, 1.0, -1.0}}, {}, {}), Error, ErrorCodeIs(Err::BadInput));
  CHECK_THROWS_MATCHES(make_graph(2, {{0, 1, 1.0, 1.0}}, {1.0, 0.0}, {}), Error, ErrorCodeIs(Err::BadInput));
  CHECK_THROWS_MATCHES(make_graph(2, {{0, 1, 1.0, 1.0}}, {1.0}, {}), Error, ErrorCodeIs(Err::BadInput));
  CHECK_THROWS_MATCHES(make_graph(3, {{0, 1, 1.0, 1.0}}, {}, {}), Error, ErrorCodeIs(Err::BadInput));
  CHECK_THROWS_MATCHES(make_graph(2, {{0, 1, 1.0, 1.0}}, {}, {2}), Error, ErrorCodeIs(Err::BadInput));
  auto g = make_graph(2, {{0, 1, 2.0, 3.0}}, {1.0, 4.0}, {1});
  CHECK(g.total_measure() == 5.0);
  CHECK(g.infinity_boundary == std::vector<int>{1});
}

TEST_CASE("shortest path distances respect edge lengths") {
  auto g = make_graph(4, {{0, 1, 1.0, 1.0}, {1, 2, 2.0, 1.0}, {0, 3, 5.0, 1.0}, {3, 2, 1.0, 1.0}}, {}, {});
  auto d = shortest_path_distances(g, {0});
  CHECK(d[0] == 0.0);
  CHECK(d[1] == 1.0);
  CHECK(d[2] == 3.0);
  CHECK(d[3] == 4.0);
  auto multi = shortest_path_distances(g, {0, 2});
  CHECK(multi[3] == 1.0);
}

TEST_CASE("boundary and perimeter of simple cuts") {
  auto path = path_graph(11);
  CHECK(graph_boundary(path, {0, 1, 2, 3, 4}) == std::vector<int>{5});
  CHECK(perimeter(path, {0, 1, 2, 3, 4}) == 1.0);

  auto cycle = cycle_graph(8);
  CHECK(graph_boundary(cycle, {1, 2, 3}) == std::vector<int>{0, 4});
  CHECK(perimeter(cycle, {1, 2, 3}) == 2.0);

  std::vector<int> all(8);
  for (int i = 0; i < 8; ++i) all[static_cast<std::size_t>(i)] = i;
  CHECK(graph_boundary(cycle, {}).empty());
  CHECK(graph_boundary(cycle, all).empty());
  CHECK(perimeter(cycle, {}) == 0.0);
  CHECK(perimeter(cycle, all) == 0.0);
}

TEST_CASE("variation and energy sums on a weighted path") {
  auto g = make_graph(3, {{0, 1, 2.0, 4.0}, {1, 2, 1.0, 1.0}}, {}, {});
  std::vector<double> u = {0.0, 1.0, 3.0};
  CHECK(total_variation(g, u) == Catch::Approx(2.0 + 2.0));
  CHECK(p_energy(g, u, 1.0) == Catch::Approx(total_variation(g, u)));
  CHECK(p_energy(g, u, 2.0) == Catch::Approx(4.0 * 0.25 + 4.0));
  CHECK(p_energy(g, std::vector<double>(3, 7.5), 2.0) == 0.0);
}

TEST_CASE("the layer-cake residual vanishes on random data") {
  Rng rng(0x2F3E4D5C6B7A8990ull);
  for (int trial = 0; trial < 120; ++trial) {
    auto g = testsupport::random_graph(rng, rng.next_int(2, 12));
    std::vector<double> u;
    for (int i = 0; i < g.vertex_count; ++i) u.push_back(rng.next_double() * 4.0 - 2.0);
    if (rng.next_bool(0.3)) u[0] = u[static_cast<std::size_t>(g.vertex_count - 1)];
    REQUIRE(coarea_residual(g, u) <= 1e-12);
  }
}

TEST_CASE("monotonicity detection on paths") {
  auto g = path_graph(5);
  std::vector<int> interior = {1, 2, 3};
  CHECK(is_monotone(g, {0, 1, 2, 3, 4}, interior));
  CHECK(is_monotone(g, {0, 0, 0, 0, 0}, interior));
  CHECK_FALSE(is_monotone(g, {0, 2, 1, 2, 4}, interior));
  CHECK(is_monotone(g, {0, -1, 0, 0, 0}, interior));
  CHECK_FALSE(is_monotone(g, {0, 0, -1, 0, 0}, interior));
  CHECK(is_monotone(g, {0, 2, 1, 2, 4}, {}));
  std::vector<int> everything = {0, 1, 2, 3, 4};
  CHECK(is_monotone(g, {0, 0, 0, 0, 0}, everything));
  CHECK_FALSE(is_monotone(g, {0, 1, 0, 0, 0}, everything));
}

TEST_CASE("flattening a bump keeps the boundary and lowers the variation") {
  auto g = path_graph(7);
  std::vector<double> u = {0.0, 0.25, 0.9, 0.25, 0.5, 0.75, 1.0};
  std::vector<int> domain = {1, 2, 3, 4, 5};
  auto out = straighten(g, u, domain);
  std::vector<double> expected = {0.0, 0.25, 0.25, 0.25, 0.5, 0.75, 1.0};
  REQUIRE(out.size() == expected.size());
  for (std::size_t i = 0; i < out.size(); ++i) REQUIRE(out[i] == Catch::Approx(expected[i]).margin(1e-15));
  CHECK(out[0] == u[0]);
  CHECK(out[6] == u[6]);
  CHECK(is_monotone(g, out, domain));
  CHECK(total_variation(g, out) < total_variation(g, u));
  auto again = straighten(g, out, domain);
  CHECK(again == out);
}

TEST_CASE("already monotone data is a fixpoint of the flattening") {
  auto g = path_graph(6);
  std::vector<double> u = {0.0, 0.1, 0.4, 0.4, 0.9, 1.0};
  std::vector<int> domain = {1, 2, 3, 4};
  CHECK(is_monotone(g, u, domain));
  CHECK(straighten(g, u, domain) == u);
  CHECK(straighten(g, u, {}) == u);
}

TEST_CASE("random flattenings preserve the complement and never raise the energy") {
  Rng rng(0x8899AABBCCDDEE01ull);
  int discrepancies = 0;
  for (int trial = 0; trial < 150; ++trial) {
    auto g = testsupport::random_graph(rng, rng.next_int(3, 14));
    std::vector<double> u;
    for (int i = 0; i < g.vertex_count; ++i) u.push_back(rng.next_double() * 2.0 - 1.0);
    std::vector<int> domain;
    for (int i = 0; i < g.vertex_count; ++i)
      if (rng.next_bool(0.6)) domain.push_back(i);
    auto out = straighten(g, u, domain);
    std::vector<char> in_domain(static_cast<std::size_t>(g.vertex_count), 0);
    for (int v : domain) in_domain[static_cast<std::size_t>(v)] = 1;
    for (int i = 0; i < g.vertex_count; ++i)
      if (!in_domain[static_cast<std::size_t>(i)]) REQUIRE(out[static_cast<std::size_t>(i)] == u[static_cast<std::size_t>(i)]);
    REQUIRE(is_monotone(g, out, domain));
    for (double p : {1.0, 2.0, 4.0})
      REQUIRE(p_energy(g, out, p) <= p_energy(g, u, p) * (1.0 + 1e-12) + 1e-12);
    auto desc = straighten(g, u, domain, StraightenOrder::Descending);
    if (desc != out) ++discrepancies;
  }
  if (discrepancies != 0) WARN("ascending and descending flattening orders disagreed on " << discrepancies << " of 150 trials");
}

TEST_CASE("profile of the eight cycle and the failure modes") {
  auto cycle = cycle_graph(8);
  CHECK(isoperimetric_profile(cycle, 3.0, true) == 2.0);
  CHECK(isoperimetric_profile(cycle, 1.0, true) == 2.0);
  CHECK(isoperimetric_profile(cycle, 4.0, true) == 2.0);
  CHECK(std::isinf(isoperimetric_profile(cycle, 5.0, true)));
  CHECK(std::isinf(isoperimetric_profile(cycle, 9.0, true)));

  auto path = path_graph(3);
  CHECK(isoperimetric_profile(path, 1.0, true) == 1.0);
  CHECK(isoperimetric_profile(path, 0.5, true) == 1.0);

  CHECK_THROWS_MATCHES(isoperimetric_profile(cycle, 0.0, true), Error, ErrorCodeIs(Err::BadInput));
  CHECK_THROWS_MATCHES(isoperimetric_profile(cycle, -1.0, true), Error, ErrorCodeIs(Err::BadInput));
  CHECK_THROWS_MATCHES(isoperimetric_profile(path_graph(21), 2.0, true), Error,
                       ErrorCodeIs(Err::TooLargeForExact));
  CHECK_NOTHROW(isoperimetric_profile(path_graph(21), 2.0, false));
}

TEST_CASE("the greedy profile never beats the exact one") {
  Rng rng2(0x445566778899AA01ull);
  for (int trial = 0; trial < 25; ++trial) {
    auto g = testsupport::random_graph(rng2, rng2.next_int(3, 12));
    for (int v = 1; v <= g.vertex_count / 2; ++v) {
      const double ex = isoperimetric_profile(g, static_cast<double>(v), true);
      const double heur = isoperimetric_profile(g, static_cast<double>(v), false);
      REQUIRE(heur >= ex);
    }
  }
}
