#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "geolie/errors.hpp"
#include "geolie/linalg.hpp"
#include "geolie/rational.hpp"

namespace geolie {

/// Finite-dimensional Lie algebra over Q given by structure constants.
/// Brackets are stored for basis index pairs i<j only (0-based); antisymmetry
/// supplies the rest. Construction via validate() checks the Jacobi identity
/// exactly on every basis triple.
struct LieAlgebra {
  int dim = 0;
  std::vector<std::string> basis_labels;
  std::map<std::pair<int, int>, RatVec> structure;  // (i,j) with i<j -> coeffs

  /// [e_i, e_j] for arbitrary basis indices.
  [[nodiscard]] RatVec bracket_basis(int i, int j) const {
    if (i == j) return zero_vec(dim);
    if (i < j) {
      auto it = structure.find({i, j});
      return it == structure.end() ? zero_vec(dim) : it->second;
    }
    auto it = structure.find({j, i});
    return it == structure.end() ? zero_vec(dim) : negate_vec(it->second);
  }

  /// Bilinear extension of the structure constants.
  [[nodiscard]] RatVec bracket(const RatVec& x, const RatVec& y) const {
    if (static_cast<int>(x.size()) != dim || static_cast<int>(y.size()) != dim)
      throw Error(Err::DimensionMismatch, "bracket operand length mismatch");
    RatVec out = zero_vec(dim);
    for (const auto& [ij, coeffs] : structure) {
      const auto [i, j] = ij;
      const Rat c = x[static_cast<std::size_t>(i)] * y[static_cast<std::size_t>(j)] -
                    x[static_cast<std::size_t>(j)] * y[static_cast<std::size_t>(i)];
      if (c == 0) continue;
      for (int k = 0; k < dim; ++k) out[static_cast<std::size_t>(k)] += c * coeffs[static_cast<std::size_t>(k)];
    }
    return out;
  }

  /// Throws JacobiViolation naming the first failing basis triple.
  void validate() const {
    for (int i = 0; i < dim; ++i)
      for (int j = i + 1; j < dim; ++j)
        for (int k = j + 1; k < dim; ++k) {
          RatVec sum = bracket(bracket_basis(i, j), basis_vector(k));
          sum = add_vec(sum, bracket(bracket_basis(j, k), basis_vector(i)));
          sum = add_vec(sum, bracket(bracket_basis(k, i), basis_vector(j)));
          if (!is_zero_vec(sum))
            throw Error(Err::JacobiViolation,
                        "Jacobi identity fails on basis triple (" + label(i) + ", " +
                            label(j) + ", " + label(k) + ")");
        }
  }

  [[nodiscard]] RatVec basis_vector(int i) const {
    RatVec v = zero_vec(dim);
    v[static_cast<std::size_t>(i)] = 1;
    return v;
  }

  [[nodiscard]] std::string label(int i) const {
    if (i >= 0 && i < static_cast<int>(basis_labels.size())) return basis_labels[static_cast<std::size_t>(i)];
    return "e" + std::to_string(i + 1);
  }
};

/// Span of all [a, b] with a, b running over the bases of two subspaces.
inline Subspace bracket_span(const LieAlgebra& alg, const Subspace& a, const Subspace& b) {
  RatMat rows;
  for (const auto& x : a.basis)
    for (const auto& y : b.basis) {
      RatVec v = alg.bracket(x, y);
      if (!is_zero_vec(v)) rows.push_back(std::move(v));
    }
  return make_subspace(alg.dim, std::move(rows));
}

/// Flag D^[1] in D^[2] in ... with D^[k+1] = D^[k] + [D, D^[k]], listed until
/// the rank stabilizes (the stabilized repeat is not appended).
inline std::vector<Subspace> polarization_flag(const LieAlgebra& alg, const Subspace& delta) {
  if (delta.ambient_dim != alg.dim)
    throw Error(Err::DimensionMismatch, "polarization ambient dimension mismatch");
  std::vector<Subspace> chain;
  chain.push_back(delta);
  while (true) {
    Subspace next = subspace_sum(chain.back(), bracket_span(alg, delta, chain.back()));
    if (next.rank() == chain.back().rank()) break;
    chain.push_back(std::move(next));
  }
  return chain;
}

/// Lower central series g^1, g^2 = [g, g^1], ... appended while the rank
/// strictly decreases. The last term has rank 0 iff the algebra is nilpotent.
inline std::vector<Subspace> lower_central_series(const LieAlgebra& alg) {
  std::vector<Subspace> series;
  series.push_back(full_subspace(alg.dim));
  while (true) {
    Subspace next = bracket_span(alg, series.front(), series.back());
    if (next.rank() >= series.back().rank()) break;
    series.push_back(std::move(next));
  }
  return series;
}

inline bool is_nilpotent(const LieAlgebra& alg) {
  return lower_central_series(alg).back().rank() == 0;
}

/// Nilpotency step s: the smallest s with g^{s+1} = 0.
inline int nilpotency_step(const LieAlgebra& alg) {
  auto series = lower_central_series(alg);
  if (series.back().rank() != 0) throw Error(Err::NotNilpotent, "algebra is not nilpotent");
  return static_cast<int>(series.size()) - 1;
}

inline bool is_bracket_generating(const LieAlgebra& alg, const Subspace& delta) {
  return polarization_flag(alg, delta).back().rank() == alg.dim;
}

/// trace(ad x) = 0 for every basis vector x, exactly.
inline bool is_unimodular(const LieAlgebra& alg) {
  for (int i = 0; i < alg.dim; ++i) {
    Rat trace = 0;
    for (int j = 0; j < alg.dim; ++j)
      trace += alg.bracket_basis(i, j)[static_cast<std::size_t>(j)];
    if (trace != 0) return false;
  }
  return true;
}

/// Center {x : [x, g] = 0} as a subspace: kernel of x -> (ad x applied to the basis).
inline Subspace center(const LieAlgebra& alg) {
  const int n = alg.dim;
  // Rows of the map x -> concat_j [x, e_j]; kernel computed over the transpose.
  RatMat system;  // (n*n) x n, entry [(j*n+k)][i] = coeff of e_k in [e_i, e_j]
  system.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), zero_vec(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      RatVec br = alg.bracket_basis(i, j);
      for (int k = 0; k < n; ++k)
        system[static_cast<std::size_t>(j * n + k)][static_cast<std::size_t>(i)] = br[static_cast<std::size_t>(k)];
    }
  std::vector<int> piv = rref(system);
  // Null space of the reduced system.
  std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
  for (int p : piv) is_pivot[static_cast<std::size_t>(p)] = true;
  RatMat kernel;
  for (int free = 0; free < n; ++free) {
    if (is_pivot[static_cast<std::size_t>(free)]) continue;
    RatVec v = zero_vec(n);
    v[static_cast<std::size_t>(free)] = 1;
    for (std::size_t r = 0; r < system.size(); ++r)
      v[static_cast<std::size_t>(piv[r])] = -system[r][static_cast<std::size_t>(free)];
    kernel.push_back(std::move(v));
  }
  return make_subspace(n, std::move(kernel));
}

/// A Lie algebra with a polarization and the rank of a quotiented-out central
/// lattice (0 means simply connected).
struct GroupSpec {
  LieAlgebra algebra;
  Subspace polarization;
  int lattice_rank = 0;
  std::string name;

  void validate() const {
    if (polarization.ambient_dim != algebra.dim)
      throw Error(Err::DimensionMismatch, "polarization does not fit the algebra");
    if (lattice_rank < 0) throw Error(Err::MalformedSpec, "negative lattice_rank");
    if (lattice_rank > center(algebra).rank())
      throw Error(Err::MalformedSpec, "lattice_rank exceeds the center's dimension");
  }
};

}  // namespace geolie
