#include <catch2/catch_amalgamated.hpp>

#include <limits>
#include <string>

#include "geolie/report.hpp"

using namespace geolie;

TEST_CASE("reports are rendered byte-identically with sorted keys") {
  json a;
  a["beta"] = 2;
  a["alpha"] = 0.5;
  json b;
  b["alpha"] = 0.5;
  b["beta"] = 2;
  const std::string expected = "{\n  \"alpha\": 0.5,\n  \"beta\": 2\n}\n";
  CHECK(render_report(a) == expected);
  CHECK(render_report(b) == expected);
  CHECK(render_report(a) == render_report(a));
}

TEST_CASE("nested containers indent two spaces per level") {
  json inner;
  inner["t"] = true;
  inner["f"] = false;
  json j;
  j["nested"] = inner;
  j["items"] = json::array({1, 2, 3});
  j["empty_obj"] = json::object();
  j["empty_arr"] = json::array();
  const std::string expected =
      "{\n"
      "  \"empty_arr\": [],\n"
      "  \"empty_obj\": {},\n"
      "  \"items\": [\n"
      "    1,\n"
      "    2,\n"
      "    3\n"
      "  ],\n"
      "  \"nested\": {\n"
      "    \"f\": false,\n"
      "    \"t\": true\n"
      "  }\n"
      "}\n";
  CHECK(render_report(j) == expected);
}

TEST_CASE("floats carry seventeen significant digits") {
  json j;
  j["third"] = 1.0 / 3.0;
  j["tenth"] = 0.1;
  j["half"] = 0.5;
  j["big"] = 1e300;
  const std::string out = render_report(j);
  CHECK(out.find("\"third\": 0.33333333333333331") != std::string::npos);
  CHECK(out.find("\"tenth\": 0.10000000000000001") != std::string::npos);
  CHECK(out.find("\"half\": 0.5") != std::string::npos);
  CHECK(out.find("\"big\": 1.0000000000000001e+300") != std::string::npos);
}

TEST_CASE("non-finite values become strings") {
  json j;
  j["pos"] = std::numeric_limits<double>::infinity();
  j["neg"] = -std::numeric_limits<double>::infinity();
  j["undef"] = std::numeric_limits<double>::quiet_NaN();
  const std::string out = render_report(j);
  CHECK(out.find("\"pos\": \"inf\"") != std::string::npos);
  CHECK(out.find("\"neg\": \"-inf\"") != std::string::npos);
  CHECK(out.find("\"undef\": \"nan\"") != std::string::npos);
}

TEST_CASE("strings and keys are escaped") {
  json j;
  j["quote"] = "a\"b\\c\nd";
  j["we\"ird"] = 1;
  const std::string out = render_report(j);
  CHECK(out.find("\"quote\": \"a\\\"b\\\\c\\nd\"") != std::string::npos);
  CHECK(out.find("\"we\\\"ird\": 1") != std::string::npos);
}
