#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "geolie/errors.hpp"

namespace geolie {

using nlohmann::json;

inline std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Err::BadInput, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline json parse_json(const std::string& text, const std::string& what) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw Error(Err::MalformedSpec, what + ": " + e.what());
  }
}

inline const json& require_field(const json& j, const char* key, const std::string& what) {
  auto it = j.find(key);
  if (it == j.end()) throw Error(Err::MalformedSpec, what + ": missing field '" + key + "'");
  return *it;
}

inline int require_int(const json& j, const char* key, const std::string& what) {
  const json& f = require_field(j, key, what);
  if (!f.is_number_integer()) throw Error(Err::MalformedSpec, what + ": field '" + key + "' must be an integer");
  return f.get<int>();
}

inline double require_number(const json& j, const std::string& what) {
  if (!j.is_number()) throw Error(Err::MalformedSpec, what + " must be a number");
  return j.get<double>();
}

}  // namespace geolie
