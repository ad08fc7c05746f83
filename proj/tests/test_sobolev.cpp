#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "geolie/graph.hpp"
#include "geolie/sobolev.hpp"
#include "support/matchers.hpp"
#include "support/random_graph.hpp"

using namespace geolie;

TEST_CASE("connected graphs admit a pure gradient bound") {
  auto g = testsupport::grid_graph(4, 4);
  const auto res = sobolev_constant_probe(g, 2.0, 1.0, 60, 0x51C2D3E4F5061728ull);
  CHECK(res.C_q_inf == 0.0);
  CHECK(res.C_q > 0.0);
  CHECK(res.violations == 0);
  CHECK(res.s == 2.0 * 1.0 / (2.0 - 1.0));
}

TEST_CASE("a single vertex forces the sup-norm term") {
  auto lone = make_graph(1, {}, {2.7}, {});
  const auto res = sobolev_constant_probe(lone, 3.0, 1.5, 40, 0xA1B2C3D4E5F60718ull);
  const double s = 3.0 * 1.5 / (3.0 - 1.5);
  CHECK(res.C_q_inf == Catch::Approx(std::pow(2.7, 1.0 / s)).epsilon(1e-12));
  CHECK(res.C_q == 0.0);
  CHECK(res.violations == 0);
}

TEST_CASE("probe results are deterministic in the seed") {
  auto g = testsupport::grid_graph(3, 5);
  const auto a = sobolev_constant_probe(g, 2.5, 1.2, 50, 0x1122334455667788ull);
  const auto b = sobolev_constant_probe(g, 2.5, 1.2, 50, 0x1122334455667788ull);
  CHECK(a.C_q == b.C_q);
  CHECK(a.C_q_inf == b.C_q_inf);

  const auto c = sobolev_constant_probe(g, 2.5, 1.2, 50, 0x8877665544332211ull);
  CHECK(a.C_q != c.C_q);

  const auto fewer = sobolev_constant_probe(g, 2.5, 1.2, 20, 0x1122334455667788ull);
  CHECK(fewer.C_q <= a.C_q);
}

TEST_CASE("probe exponents and sample counts are validated") {
  auto g = testsupport::grid_graph(2, 2);
  CHECK_THROWS_MATCHES(sobolev_constant_probe(g, 1.0, 1.0, 5, 1), Error, ErrorCodeIs(Err::BadExponent));
  CHECK_THROWS_MATCHES(sobolev_constant_probe(g, 2.0, 0.5, 5, 1), Error, ErrorCodeIs(Err::BadExponent));
  CHECK_THROWS_MATCHES(sobolev_constant_probe(g, 2.0, 2.0, 5, 1), Error, ErrorCodeIs(Err::BadExponent));
  CHECK_THROWS_MATCHES(sobolev_constant_probe(g, 2.0, 2.5, 5, 1), Error, ErrorCodeIs(Err::BadExponent));
  CHECK_THROWS_MATCHES(sobolev_constant_probe(g, 2.0, 1.0, -1, 1), Error, ErrorCodeIs(Err::BadInput));

  const auto empty = sobolev_constant_probe(g, 2.0, 1.0, 0, 1);
  CHECK(empty.C_q == 0.0);
  CHECK(empty.C_q_inf == 0.0);
  CHECK(empty.violations == 0);
}
