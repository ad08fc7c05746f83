#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "geolie/errors.hpp"
#include "geolie/lie_algebra.hpp"
#include "geolie/linalg.hpp"
#include "geolie/rational.hpp"

namespace geolie {

enum class ConformalType { StrictlyParabolic, LiminalParabolic, Hyperbolic };

inline const char* conformal_type_name(ConformalType t) {
  switch (t) {
    case ConformalType::StrictlyParabolic: return "StrictlyParabolic";
    case ConformalType::LiminalParabolic: return "LiminalParabolic";
    case ConformalType::Hyperbolic: return "Hyperbolic";
  }
  return "?";
}

inline ConformalType parse_conformal_type(const std::string& s) {
  if (s == "StrictlyParabolic") return ConformalType::StrictlyParabolic;
  if (s == "LiminalParabolic") return ConformalType::LiminalParabolic;
  if (s == "Hyperbolic") return ConformalType::Hyperbolic;
  throw Error(Err::MalformedSpec, "unknown conformal type '" + s + "'");
}

/// Dimension that may be the infinity marker (spelled "inf" in reports).
using DimOrInf = std::optional<int>;  // nullopt = infinite

/// The invariants a group carries into the rigidity verdict. growth_dim_N,
/// parabolic_dim, and isoperimetric_dim coincide for every group this tool
/// classifies, and are populated identically.
struct ClassificationReport {
  int hausdorff_dim_Q = 0;
  DimOrInf growth_dim_N;
  DimOrInf parabolic_dim;
  DimOrInf isoperimetric_dim;
  bool bracket_generating = false;
  bool unimodular = false;
  bool nilpotent = false;
  bool carnot = false;
  ConformalType conformal_type = ConformalType::LiminalParabolic;
  bool fundamental_group_infinite = false;
};

/// Q = sum of k * dim(flag_k / flag_{k-1}) over the polarization flag.
/// A local invariant: the lattice rank plays no part.
inline int hausdorff_dimension(const GroupSpec& spec) {
  auto flag = polarization_flag(spec.algebra, spec.polarization);
  if (flag.back().rank() != spec.algebra.dim)
    throw Error(Err::NotBracketGenerating, "polarization does not generate the algebra");
  int q = 0, prev = 0;
  for (std::size_t k = 0; k < flag.size(); ++k) {
    q += static_cast<int>(k + 1) * (flag[k].rank() - prev);
    prev = flag[k].rank();
  }
  return q;
}

inline bool is_abelian(const LieAlgebra& alg) {
  for (const auto& [ij, coeffs] : alg.structure)
    if (!is_zero_vec(coeffs)) return false;
  return true;
}

/// N = sum of dim g^k over the lower central series (volume growth exponent).
/// Quotienting by a rank-k central lattice is supported in the abelian case
/// only, where it drops N by k.
inline int growth_dimension(const GroupSpec& spec) {
  auto series = lower_central_series(spec.algebra);
  if (series.back().rank() != 0) throw Error(Err::NotNilpotent, "growth exponent needs a nilpotent algebra");
  if (spec.lattice_rank > 0) {
    if (!is_abelian(spec.algebra))
      throw Error(Err::Unsupported, "growth of non-abelian quotients is not implemented");
    return spec.algebra.dim - spec.lattice_rank;
  }
  int n = 0;
  for (const auto& term : series) n += term.rank();
  return n;
}

/// True iff the polarization is the first layer of a stratification, decided
/// by the direct-sum test rank(flag_k) + rank(g^{k+1}) = dim for every k.
/// Equivalent to Q = N.
inline bool is_carnot_polarization(const GroupSpec& spec) {
  if (spec.lattice_rank > 0)
    throw Error(Err::Unsupported, "stratification test applies to simply connected groups only");
  auto series = lower_central_series(spec.algebra);
  if (series.back().rank() != 0) throw Error(Err::NotNilpotent, "stratification test needs a nilpotent algebra");
  auto flag = polarization_flag(spec.algebra, spec.polarization);
  if (flag.back().rank() != spec.algebra.dim)
    throw Error(Err::NotBracketGenerating, "polarization does not generate the algebra");
  const int step = static_cast<int>(series.size()) - 1;
  for (int k = 1; k <= step; ++k) {
    const int flag_rank = flag[static_cast<std::size_t>(std::min<int>(k, static_cast<int>(flag.size())) - 1)].rank();
    const int tail_rank = k < static_cast<int>(series.size()) ? series[static_cast<std::size_t>(k)].rank() : 0;
    if (flag_rank + tail_rank != spec.algebra.dim) return false;
  }
  return true;
}

inline ConformalType conformal_type_rule(int q, DimOrInf n) {
  if (!n) return ConformalType::Hyperbolic;
  if (*n < q) return ConformalType::StrictlyParabolic;
  if (*n == q) return ConformalType::LiminalParabolic;
  return ConformalType::Hyperbolic;
}

inline ClassificationReport classify_conformal_type(const GroupSpec& spec) {
  spec.validate();
  ClassificationReport rep;
  rep.hausdorff_dim_Q = hausdorff_dimension(spec);
  rep.bracket_generating = true;
  const int n = growth_dimension(spec);
  rep.growth_dim_N = n;
  rep.parabolic_dim = n;
  rep.isoperimetric_dim = n;
  rep.nilpotent = true;
  rep.unimodular = is_unimodular(spec.algebra);
  rep.carnot = spec.lattice_rank == 0 && is_carnot_polarization(spec);
  rep.conformal_type = conformal_type_rule(rep.hausdorff_dim_Q, rep.growth_dim_N);
  rep.fundamental_group_infinite = spec.lattice_rank > 0;
  return rep;
}

/// A fixture whose invariants are supplied instead of computed; used for
/// groups outside the computable class (non-nilpotent examples). The supplied
/// conformal type must agree with the N-versus-Q rule.
struct DeclaredFixture {
  std::string name;
  int hausdorff_dim_Q = 0;
  DimOrInf growth_dim_N;
  ConformalType conformal_type = ConformalType::LiminalParabolic;
  bool nilpotent = false;
  bool simply_connected = true;
  bool unimodular = true;
};

inline ClassificationReport report_from_declared(const DeclaredFixture& fx) {
  if (fx.hausdorff_dim_Q <= 0)
    throw Error(Err::MalformedSpec, "declared fixture needs a positive Hausdorff dimension");
  if (conformal_type_rule(fx.hausdorff_dim_Q, fx.growth_dim_N) != fx.conformal_type)
    throw Error(Err::MalformedSpec, "declared conformal type contradicts the N-versus-Q rule for fixture '" +
                                        fx.name + "'");
  ClassificationReport rep;
  rep.hausdorff_dim_Q = fx.hausdorff_dim_Q;
  rep.growth_dim_N = fx.growth_dim_N;
  rep.parabolic_dim = fx.growth_dim_N;
  rep.isoperimetric_dim = fx.growth_dim_N;
  rep.bracket_generating = true;
  rep.unimodular = fx.unimodular;
  rep.nilpotent = fx.nilpotent;
  rep.carnot = false;
  rep.conformal_type = fx.conformal_type;
  rep.fundamental_group_infinite = !fx.simply_connected;
  return rep;
}

enum class VerdictCase {
  QI_Forced_StrictParabolic,
  QI_Forced_Hyperbolic,
  QI_Forced_InfinitePi1,
  Liminal_CarnotRigidity,
  Liminal_Undecided,
  Obstructed,
};

inline const char* verdict_case_name(VerdictCase c) {
  switch (c) {
    case VerdictCase::QI_Forced_StrictParabolic: return "QI_Forced_StrictParabolic";
    case VerdictCase::QI_Forced_Hyperbolic: return "QI_Forced_Hyperbolic";
    case VerdictCase::QI_Forced_InfinitePi1: return "QI_Forced_InfinitePi1";
    case VerdictCase::Liminal_CarnotRigidity: return "Liminal_CarnotRigidity";
    case VerdictCase::Liminal_Undecided: return "Liminal_Undecided";
    case VerdictCase::Obstructed: return "Obstructed";
  }
  return "?";
}

struct Verdict {
  VerdictCase verdict_case = VerdictCase::Liminal_Undecided;
  std::string explanation;
  std::vector<std::pair<std::string, bool>> matched_invariants;
};

/// Decides what the existence of a quasi-conformal map between the two groups
/// would force. Obstructed exactly when an invariant (Q, N, or conformal
/// type) differs; otherwise an infinite fundamental group on either side wins
/// before the per-type cases.
inline Verdict qc_implies_qi_verdict(const ClassificationReport& a, const ClassificationReport& b) {
  Verdict v;
  const bool q_eq = a.hausdorff_dim_Q == b.hausdorff_dim_Q;
  const bool n_eq = a.growth_dim_N == b.growth_dim_N;
  const bool t_eq = a.conformal_type == b.conformal_type;
  v.matched_invariants = {{"hausdorff_dim_Q", q_eq}, {"growth_dim_N", n_eq}, {"conformal_type", t_eq}};
  if (!q_eq || !n_eq || !t_eq) {
    v.verdict_case = VerdictCase::Obstructed;
    std::string diffs;
    for (const auto& [name, matched] : v.matched_invariants) {
      if (matched) continue;
      if (!diffs.empty()) diffs += ", ";
      diffs += name;
    }
    v.explanation = "no quasi-conformal map can exist: the groups differ in " + diffs;
    return v;
  }
  if (a.fundamental_group_infinite || b.fundamental_group_infinite) {
    v.verdict_case = VerdictCase::QI_Forced_InfinitePi1;
    v.explanation = "an infinite fundamental group forces every quasi-conformal map to be a quasi-isometry";
    return v;
  }
  switch (a.conformal_type) {
    case ConformalType::StrictlyParabolic:
      v.verdict_case = VerdictCase::QI_Forced_StrictParabolic;
      v.explanation = "strictly parabolic type on both sides forces quasi-conformal maps to be quasi-isometries";
      return v;
    case ConformalType::Hyperbolic:
      v.verdict_case = VerdictCase::QI_Forced_Hyperbolic;
      v.explanation = "hyperbolic type on both sides forces quasi-conformal maps to be quasi-isometries";
      return v;
    case ConformalType::LiminalParabolic:
      break;
  }
  if (a.nilpotent && b.nilpotent) {
    v.verdict_case = VerdictCase::Liminal_CarnotRigidity;
    v.explanation =
        "liminal simply connected nilpotent pair: quasi-conformally equivalent groups are isomorphic "
        "bi-Lipschitz Carnot groups";
  } else {
    v.verdict_case = VerdictCase::Liminal_Undecided;
    v.explanation = "liminal parabolic pair outside the nilpotent simply connected case: no verdict";
  }
  return v;
}

inline Verdict qc_implies_qi_verdict(const GroupSpec& a, const GroupSpec& b) {
  return qc_implies_qi_verdict(classify_conformal_type(a), classify_conformal_type(b));
}

/// Points of the one-parameter subgroup through v in exponential coordinates:
/// the k-th element is k*v (the group product of av and bv is (a+b)v).
inline std::vector<RatVec> exp_line_sequence(const GroupSpec& spec, const RatVec& v, int k_min, int k_max) {
  if (static_cast<int>(v.size()) != spec.algebra.dim)
    throw Error(Err::DimensionMismatch, "direction vector does not fit the algebra");
  if (is_zero_vec(v)) throw Error(Err::ZeroVector, "one-parameter subgroup needs a nonzero direction");
  if (!is_nilpotent(spec.algebra))
    throw Error(Err::NotNilpotent, "exponential coordinates need a nilpotent algebra");
  std::vector<RatVec> out;
  for (int k = k_min; k <= k_max; ++k) out.push_back(scale_vec(Rat(k), v));
  return out;
}

}  // namespace geolie
