#pragma once

#include <string>
#include <utility>
#include <vector>

#include "geolie/errors.hpp"
#include "geolie/graph.hpp"
#include "geolie/json_io.hpp"
#include "geolie/net.hpp"

namespace geolie {
namespace detail {

inline int json_vertex_index(const json& j, const std::string& what) {
  if (!j.is_number_integer()) throw Error(Err::MalformedSpec, what + " must be an integer vertex index");
  return j.get<int>();
}

inline std::vector<int> parse_vertex_list(const json& arr, const std::string& what) {
  if (!arr.is_array()) throw Error(Err::MalformedSpec, what + " must be an array of vertex indices");
  std::vector<int> out;
  for (const auto& entry : arr) out.push_back(json_vertex_index(entry, what));
  return out;
}

inline std::vector<double> parse_number_list(const json& arr, const std::string& what) {
  if (!arr.is_array()) throw Error(Err::MalformedSpec, what + " must be an array of numbers");
  std::vector<double> out;
  for (const auto& entry : arr) out.push_back(require_number(entry, what + " entry"));
  return out;
}

}  // namespace detail

/// Graph format: `vertices` (count), `edges` ([u, v], [u, v, length] or
/// [u, v, length, weight]; 0-based), optional `measure`, optional
/// `infinity_boundary`. A missing length defaults to 1; a missing weight
/// defaults to length * (mu_u + mu_v) / 2.
inline MetricMeasureGraph parse_graph_text(const std::string& text) {
  const std::string what = "graph file";
  json j = parse_json(text, what);
  if (!j.is_object()) throw Error(Err::MalformedSpec, what + " must be a JSON object");
  const int n = require_int(j, "vertices", what);
  if (n <= 0) throw Error(Err::MalformedSpec, what + ": vertex count must be positive");

  std::vector<double> measure;
  if (j.contains("measure")) measure = detail::parse_number_list(j["measure"], what + ": measure");
  if (measure.empty()) measure.assign(static_cast<std::size_t>(n), 1.0);
  if (static_cast<int>(measure.size()) != n)
    throw Error(Err::MalformedSpec, what + ": measure list does not match the vertex count");

  std::vector<GraphEdge> edges;
  const json& earr = require_field(j, "edges", what);
  if (!earr.is_array()) throw Error(Err::MalformedSpec, what + ": edges must be an array");
  for (const auto& entry : earr) {
    if (!entry.is_array() || entry.size() < 2 || entry.size() > 4)
      throw Error(Err::MalformedSpec, what + ": each edge must be [u, v], [u, v, len] or [u, v, len, w]");
    GraphEdge e;
    e.u = detail::json_vertex_index(entry[0], what + ": edge endpoint");
    e.v = detail::json_vertex_index(entry[1], what + ": edge endpoint");
    e.length = entry.size() >= 3 ? require_number(entry[2], what + ": edge length") : 1.0;
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n)
      throw Error(Err::MalformedSpec, what + ": edge endpoint out of range");
    if (entry.size() == 4) {
      e.weight = require_number(entry[3], what + ": edge weight");
    } else {
      e.weight = e.length *
                 (measure[static_cast<std::size_t>(e.u)] + measure[static_cast<std::size_t>(e.v)]) / 2.0;
    }
    edges.push_back(e);
  }

  std::vector<int> infinity;
  if (j.contains("infinity_boundary"))
    infinity = detail::parse_vertex_list(j["infinity_boundary"], what + ": infinity_boundary");

  return make_graph(n, std::move(edges), std::move(measure), std::move(infinity));
}

inline MetricMeasureGraph load_graph_file(const std::string& path) {
  return parse_graph_text(read_text_file(path));
}

/// Cloud format: `points` (coordinate arrays, Euclidean metric) or
/// `distance_matrix` (dense symmetric), optional `measure`.
inline PointCloud parse_cloud_text(const std::string& text) {
  const std::string what = "cloud file";
  json j = parse_json(text, what);
  if (!j.is_object()) throw Error(Err::MalformedSpec, what + " must be a JSON object");
  std::vector<double> measure;
  if (j.contains("measure")) measure = detail::parse_number_list(j["measure"], what + ": measure");
  if (j.contains("points") && j.contains("distance_matrix"))
    throw Error(Err::MalformedSpec, what + ": give either points or distance_matrix, not both");
  if (j.contains("points")) {
    const json& parr = j["points"];
    if (!parr.is_array() || parr.empty()) throw Error(Err::MalformedSpec, what + ": points must be a nonempty array");
    std::vector<std::vector<double>> points;
    for (const auto& entry : parr) points.push_back(detail::parse_number_list(entry, what + ": point"));
    return cloud_from_points(points, std::move(measure));
  }
  if (j.contains("distance_matrix")) {
    const json& marr = j["distance_matrix"];
    if (!marr.is_array() || marr.empty())
      throw Error(Err::MalformedSpec, what + ": distance_matrix must be a nonempty array");
    std::vector<std::vector<double>> rows;
    for (const auto& entry : marr) rows.push_back(detail::parse_number_list(entry, what + ": matrix row"));
    return cloud_from_matrix(std::move(rows), std::move(measure));
  }
  throw Error(Err::MalformedSpec, what + ": needs points or distance_matrix");
}

inline PointCloud load_cloud_file(const std::string& path) { return parse_cloud_text(read_text_file(path)); }

/// Vertex function file for straightening: `values` (one number per vertex)
/// and `domain` (vertex indices where modification is allowed).
struct FunctionSpec {
  std::vector<double> values;
  std::vector<int> domain;
};

inline FunctionSpec parse_function_text(const std::string& text) {
  const std::string what = "function file";
  json j = parse_json(text, what);
  if (!j.is_object()) throw Error(Err::MalformedSpec, what + " must be a JSON object");
  FunctionSpec spec;
  spec.values = detail::parse_number_list(require_field(j, "values", what), what + ": values");
  spec.domain = detail::parse_vertex_list(require_field(j, "domain", what), what + ": domain");
  return spec;
}

inline FunctionSpec load_function_file(const std::string& path) {
  return parse_function_text(read_text_file(path));
}

/// Sequence file for defect scans: `sequence` holds numbers (1D) or
/// coordinate arrays, all of one dimension; distances are Euclidean.
inline std::vector<std::vector<double>> parse_sequence_text(const std::string& text) {
  const std::string what = "sequence file";
  json j = parse_json(text, what);
  if (!j.is_object()) throw Error(Err::MalformedSpec, what + " must be a JSON object");
  const json& arr = require_field(j, "sequence", what);
  if (!arr.is_array() || arr.empty()) throw Error(Err::MalformedSpec, what + ": sequence must be a nonempty array");
  std::vector<std::vector<double>> points;
  for (const auto& entry : arr) {
    if (entry.is_number())
      points.push_back({entry.get<double>()});
    else
      points.push_back(detail::parse_number_list(entry, what + ": point"));
  }
  const std::size_t dim = points.front().size();
  for (const auto& p : points)
    if (p.size() != dim) throw Error(Err::MalformedSpec, what + ": sequence points have mixed dimensions");
  return points;
}

inline std::vector<std::vector<double>> load_sequence_file(const std::string& path) {
  return parse_sequence_text(read_text_file(path));
}

}  // namespace geolie
