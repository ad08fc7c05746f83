#include <catch2/catch_amalgamated.hpp>

#include "geolie/alg_io.hpp"
#include "geolie/bch.hpp"
#include "geolie/capacity.hpp"
#include "geolie/classify.hpp"
#include "geolie/errors.hpp"
#include "geolie/ferrand.hpp"
#include "geolie/graph.hpp"
#include "geolie/graph_io.hpp"
#include "geolie/guivarch.hpp"
#include "geolie/lie_algebra.hpp"
#include "geolie/linalg.hpp"
#include "geolie/maxflow.hpp"
#include "geolie/net.hpp"
#include "geolie/qstraight.hpp"
#include "geolie/random_alg.hpp"
#include "geolie/rational.hpp"
#include "geolie/report.hpp"
#include "geolie/rng.hpp"
#include "geolie/sobolev.hpp"
#include "geolie/version.hpp"

using namespace geolie;

TEST_CASE("rational parsing accepts integers and fractions") {
  CHECK(parse_rational("3") == Rat(3));
  CHECK(parse_rational("-7") == Rat(-7));
  CHECK(parse_rational("1/2") == Rat(1) / 2);
  CHECK(parse_rational("-3/4") == Rat(-3) / 4);
  CHECK(parse_rational("6/4") == Rat(3) / 2);
}

TEST_CASE("rational parsing rejects junk") {
  CHECK_THROWS_AS(parse_rational(""), Error);
  CHECK_THROWS_AS(parse_rational("a/b"), Error);
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK_THROWS_AS(parse_rational("1.5"), Error);
}

TEST_CASE("rational formatting is explicit") {
  CHECK(format_rational(Rat(3)) == "3/1");
  CHECK(format_rational(Rat(-1) / 2) == "-1/2");
  CHECK(format_rational(Rat(0)) == "0/1");
}

TEST_CASE("doubles convert to rationals exactly") {
  for (double v : {0.0, 1.0, -2.5, 0.1, 1e-17, 123456.789, -3.0 / 7.0}) {
    CHECK(rat_to_double(rat_from_double(v)) == v);
  }
  CHECK(rat_from_double(0.5) == Rat(1) / 2);
  CHECK(rat_from_double(-0.25) == Rat(-1) / 4);
  CHECK(rat_from_double(3.0) == Rat(3));
}

TEST_CASE("vector helpers") {
  RatVec a = {Rat(1), Rat(2)};
  RatVec b = {Rat(3), Rat(-2)};
  CHECK(add_vec(a, b) == RatVec{Rat(4), Rat(0)});
  CHECK(scale_vec(Rat(2), a) == RatVec{Rat(2), Rat(4)});
  CHECK(is_zero_vec(zero_vec(3)));
  CHECK(!is_zero_vec(a));
}
