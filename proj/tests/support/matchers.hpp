#pragma once

#include <string>

#include <catch2/catch_amalgamated.hpp>

#include "geolie/errors.hpp"

struct ErrorCodeIs : Catch::Matchers::MatcherGenericBase {
  geolie::Err code;

  explicit ErrorCodeIs(geolie::Err c) : code(c) {}

  bool match(const geolie::Error& e) const { return e.code() == code; }

  std::string describe() const override { return std::string("has error code ") + geolie::err_name(code); }
};
