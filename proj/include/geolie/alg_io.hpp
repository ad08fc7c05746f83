#pragma once

#include <optional>
#include <set>
#include <string>
#include <utility>

#include "geolie/classify.hpp"
#include "geolie/errors.hpp"
#include "geolie/json_io.hpp"
#include "geolie/lie_algebra.hpp"
#include "geolie/linalg.hpp"

namespace geolie {

/// An algebra file holds either a computable group (structure constants,
/// optional polarization, optional lattice rank) or a declared fixture with
/// user-supplied invariants.
struct ParsedAlgebraFile {
  std::optional<GroupSpec> group;
  std::optional<DeclaredFixture> declared;
};

namespace detail {

inline RatVec parse_rational_vector(const json& arr, int dim, const std::string& what) {
  if (!arr.is_array() || static_cast<int>(arr.size()) != dim)
    throw Error(Err::MalformedSpec, what + " must be an array of " + std::to_string(dim) + " rationals");
  RatVec v;
  for (const auto& entry : arr) {
    if (!entry.is_string()) throw Error(Err::MalformedSpec, what + " entries must be \"p/q\" strings");
    v.push_back(parse_rational(entry.get<std::string>()));
  }
  return v;
}

inline DeclaredFixture parse_declared(const json& j) {
  const std::string what = "declared fixture";
  DeclaredFixture fx;
  fx.name = require_field(j, "name", what).get<std::string>();
  fx.hausdorff_dim_Q = require_int(j, "Q", what);
  const json& n = require_field(j, "N", what);
  if (n.is_string() && n.get<std::string>() == "inf")
    fx.growth_dim_N = std::nullopt;
  else if (n.is_number_integer())
    fx.growth_dim_N = n.get<int>();
  else
    throw Error(Err::MalformedSpec, what + ": field 'N' must be an integer or \"inf\"");
  fx.conformal_type = parse_conformal_type(require_field(j, "conformal_type", what).get<std::string>());
  fx.nilpotent = require_field(j, "nilpotent", what).get<bool>();
  fx.simply_connected = require_field(j, "simply_connected", what).get<bool>();
  fx.unimodular = require_field(j, "unimodular", what).get<bool>();
  return fx;
}

}  // namespace detail

/// Parses the algebra file format: `dim`, optional `basis` labels, `brackets`
/// as [i, j, coeffs] triples with 1-based i < j and exact "p/q" coefficients,
/// optional `polarization` (spanning vectors; defaults to the full algebra),
/// optional `lattice_rank`, optional `name`. Jacobi is verified exactly.
inline ParsedAlgebraFile parse_algebra_text(const std::string& text) {
  json j = parse_json(text, "algebra file");
  if (!j.is_object()) throw Error(Err::MalformedSpec, "algebra file: top level must be an object");
  ParsedAlgebraFile out;
  if (j.contains("declared")) {
    out.declared = detail::parse_declared(j.at("declared"));
    report_from_declared(*out.declared);  // validates
    return out;
  }
  const std::string what = "algebra file";
  LieAlgebra alg;
  alg.dim = require_int(j, "dim", what);
  if (alg.dim <= 0) throw Error(Err::MalformedSpec, "algebra file: 'dim' must be positive");
  if (j.contains("basis")) {
    const json& basis = j.at("basis");
    if (!basis.is_array() || static_cast<int>(basis.size()) != alg.dim)
      throw Error(Err::MalformedSpec, "algebra file: 'basis' must list one label per dimension");
    for (const auto& label : basis) alg.basis_labels.push_back(label.get<std::string>());
  } else {
    for (int i = 0; i < alg.dim; ++i) alg.basis_labels.push_back("e" + std::to_string(i + 1));
  }
  std::set<std::pair<int, int>> seen;
  if (j.contains("brackets")) {
    for (const auto& entry : j.at("brackets")) {
      if (!entry.is_array() || entry.size() != 3)
        throw Error(Err::MalformedSpec, "algebra file: brackets entries are [i, j, coeffs] triples");
      if (!entry[0].is_number_integer() || !entry[1].is_number_integer())
        throw Error(Err::MalformedSpec, "algebra file: bracket indices must be integers");
      const int i = entry[0].get<int>(), jj = entry[1].get<int>();
      if (i < 1 || i > alg.dim || jj < 1 || jj > alg.dim)
        throw Error(Err::MalformedSpec, "algebra file: bracket index out of range");
      if (i == jj)
        throw Error(Err::AntisymmetryViolation,
                    "bracket of " + alg.label(i - 1) + " with itself must vanish");
      if (i > jj)
        throw Error(Err::MalformedSpec, "algebra file: bracket entries must have i < j");
      if (!seen.insert({i, jj}).second)
        throw Error(Err::MalformedSpec, "algebra file: duplicate bracket entry (" + std::to_string(i) + ", " +
                                            std::to_string(jj) + ")");
      RatVec coeffs = detail::parse_rational_vector(entry[2], alg.dim, "bracket coefficients");
      if (!is_zero_vec(coeffs)) alg.structure[{i - 1, jj - 1}] = std::move(coeffs);
    }
  }
  alg.validate();
  GroupSpec spec;
  spec.algebra = std::move(alg);
  if (j.contains("polarization")) {
    const json& pol = j.at("polarization");
    if (!pol.is_array() || pol.empty())
      throw Error(Err::MalformedSpec, "algebra file: 'polarization' must be a nonempty array of vectors");
    RatMat rows;
    for (const auto& vec : pol)
      rows.push_back(detail::parse_rational_vector(vec, spec.algebra.dim, "polarization vector"));
    spec.polarization = make_subspace(spec.algebra.dim, std::move(rows));
  } else {
    spec.polarization = full_subspace(spec.algebra.dim);
  }
  if (j.contains("lattice_rank")) spec.lattice_rank = require_int(j, "lattice_rank", what);
  if (j.contains("name")) spec.name = j.at("name").get<std::string>();
  spec.validate();
  out.group = std::move(spec);
  return out;
}

inline ParsedAlgebraFile load_algebra_file(const std::string& path) {
  return parse_algebra_text(read_text_file(path));
}

}  // namespace geolie
