#pragma once

#include <cmath>
#include <cstdio>
#include <string>

#include "geolie/json_io.hpp"

namespace geolie {
namespace detail {

inline void render_value(const json& j, std::string& out, int indent) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  const std::string pad_in(static_cast<std::size_t>(indent + 1) * 2, ' ');
  switch (j.type()) {
    case json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out += ",\n";
        first = false;
        out += pad_in;
        out += json(it.key()).dump();
        out += ": ";
        render_value(it.value(), out, indent + 1);
      }
      out += "\n" + pad + "}";
      return;
    }
    case json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      out += "[\n";
      bool first = true;
      for (const auto& entry : j) {
        if (!first) out += ",\n";
        first = false;
        out += pad_in;
        render_value(entry, out, indent + 1);
      }
      out += "\n" + pad + "]";
      return;
    }
    case json::value_t::string:
      out += j.dump();
      return;
    case json::value_t::boolean:
      out += j.get<bool>() ? "true" : "false";
      return;
    case json::value_t::number_integer:
    case json::value_t::number_unsigned:
      out += j.dump();
      return;
    case json::value_t::number_float: {
      const double v = j.get<double>();
      if (std::isinf(v)) {
        out += v > 0 ? "\"inf\"" : "\"-inf\"";
        return;
      }
      if (std::isnan(v)) {
        out += "\"nan\"";
        return;
      }
      char buf[64];
      std::snprintf(buf, sizeof(buf), "%.17g", v);
      out += buf;
      return;
    }
    default:
      out += "null";
      return;
  }
}

}  // namespace detail

/// Deterministic serialization: sorted keys (the underlying map is ordered),
/// floats at 17 significant digits, infinities as the string "inf". Byte
/// identical across runs for identical reports.
inline std::string render_report(const json& report) {
  std::string out;
  detail::render_value(report, out, 0);
  out += "\n";
  return out;
}

}  // namespace geolie
