#pragma once

#include <map>
#include <utility>
#include <vector>

#include "geolie/errors.hpp"
#include "geolie/lie_algebra.hpp"
#include "geolie/linalg.hpp"
#include "geolie/rational.hpp"
#include "geolie/rng.hpp"

namespace geolie {

/// Rewrites the structure constants in the basis f_i = P[i] (rows are the new
/// basis vectors in old coordinates). Exact; P must be invertible.
inline LieAlgebra transform_algebra(const LieAlgebra& alg, const RatMat& P) {
  if (static_cast<int>(P.size()) != alg.dim)
    throw Error(Err::DimensionMismatch, "basis change has wrong size");
  LieAlgebra out;
  out.dim = alg.dim;
  for (int i = 0; i < alg.dim; ++i) out.basis_labels.push_back("e" + std::to_string(i + 1));
  for (int i = 0; i < alg.dim; ++i)
    for (int j = i + 1; j < alg.dim; ++j) {
      RatVec br = alg.bracket(P[static_cast<std::size_t>(i)], P[static_cast<std::size_t>(j)]);
      if (is_zero_vec(br)) continue;
      auto coords = coordinates_in(P, br);
      if (!coords) throw Error(Err::BadInput, "basis change matrix is singular");
      out.structure[{i, j}] = std::move(*coords);
    }
  return out;
}

/// Integer matrix with determinant +-1, built from a few random row operations.
inline RatMat random_unimodular_matrix(Rng& rng, int n, int ops) {
  RatMat p = identity_mat(n);
  if (n < 2) return p;
  for (int t = 0; t < ops; ++t) {
    const int kind = rng.next_int(0, 3);
    const int i = rng.next_int(0, n - 1);
    int j = rng.next_int(0, n - 2);
    if (j >= i) ++j;
    if (kind == 0) {
      std::swap(p[static_cast<std::size_t>(i)], p[static_cast<std::size_t>(j)]);
    } else if (kind == 1) {
      for (auto& x : p[static_cast<std::size_t>(i)]) x = -x;
    } else {
      Rat c(rng.next_int(1, 2) * (rng.next_bool() ? 1 : -1));
      for (int k = 0; k < n; ++k)
        p[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)] +=
            c * p[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)];
    }
  }
  return p;
}

namespace detail {

inline LieAlgebra blank_algebra(int dim) {
  LieAlgebra alg;
  alg.dim = dim;
  for (int i = 0; i < dim; ++i) alg.basis_labels.push_back("e" + std::to_string(i + 1));
  return alg;
}

/// Sparse rational vector supported on indices [lo, dim).
inline RatVec random_tail_vector(Rng& rng, int dim, int lo, double density) {
  RatVec v = zero_vec(dim);
  for (int k = lo; k < dim; ++k)
    if (rng.next_bool(density)) v[static_cast<std::size_t>(k)] = rng.next_rational(3, 2);
  return v;
}

inline LieAlgebra random_two_step(Rng& rng, int dim) {
  LieAlgebra alg = blank_algebra(dim);
  const int n1 = rng.next_int(1, dim - 1);
  for (int i = 0; i < n1; ++i)
    for (int j = i + 1; j < n1; ++j) {
      RatVec v = random_tail_vector(rng, dim, n1, 0.6);
      if (!is_zero_vec(v)) alg.structure[{i, j}] = std::move(v);
    }
  return alg;
}

inline LieAlgebra filiform(int dim) {
  // [e1, e_i] = e_{i+1} for i = 2..dim-1; nilpotency step dim-1.
  LieAlgebra alg = blank_algebra(dim);
  for (int i = 1; i + 1 < dim; ++i) {
    RatVec v = zero_vec(dim);
    v[static_cast<std::size_t>(i + 1)] = 1;
    alg.structure[{0, i}] = std::move(v);
  }
  return alg;
}

inline LieAlgebra filiform_with_padding(Rng& rng, int dim) {
  const int m = rng.next_int(3, dim);
  LieAlgebra alg = blank_algebra(dim);
  for (int i = 1; i + 1 < m; ++i) {
    RatVec v = zero_vec(dim);
    v[static_cast<std::size_t>(i + 1)] = 1;
    alg.structure[{0, i}] = std::move(v);
  }
  return alg;
}

inline LieAlgebra heisenberg_with_padding(Rng& rng, int dim) {
  // H_{2k+1} on the first h coordinates, abelian factor on the rest.
  const int h = (dim >= 5 && rng.next_bool()) ? 5 : 3;
  const int k = (h - 1) / 2;
  LieAlgebra alg = blank_algebra(dim);
  for (int i = 0; i < k; ++i) {
    RatVec v = zero_vec(dim);
    v[static_cast<std::size_t>(h - 1)] = 1;
    alg.structure[{2 * i, 2 * i + 1}] = std::move(v);
  }
  return alg;
}

/// Strictly triangular constants make the algebra nilpotent whenever Jacobi
/// holds; dense samples rarely do, so try a few sparse draws and give up.
inline LieAlgebra random_triangular(Rng& rng, int dim) {
  for (int attempt = 0; attempt < 5; ++attempt) {
    LieAlgebra alg = blank_algebra(dim);
    for (int i = 0; i < dim; ++i)
      for (int j = i + 1; j < dim; ++j) {
        if (!rng.next_bool(0.25)) continue;
        RatVec v = random_tail_vector(rng, dim, j + 1, 0.5);
        if (!is_zero_vec(v)) alg.structure[{i, j}] = std::move(v);
      }
    try {
      alg.validate();
      return alg;
    } catch (const Error&) {
    }
  }
  return random_two_step(rng, dim);
}

}  // namespace detail

/// Random nilpotent algebra of the given dimension: a family draw (abelian,
/// two-step, filiform, Heisenberg factor, sparse triangular) followed by an
/// optional random integer change of basis. Always passes validate().
inline LieAlgebra random_nilpotent_algebra(Rng& rng, int dim) {
  if (dim < 2) throw Error(Err::BadInput, "random algebras start at dimension 2");
  LieAlgebra alg;
  switch (rng.next_int(0, 9)) {
    case 0:
      alg = detail::blank_algebra(dim);
      break;
    case 1:
    case 2:
    case 3:
      alg = detail::random_two_step(rng, dim);
      break;
    case 4:
    case 5:
      alg = dim >= 3 ? detail::filiform(dim) : detail::blank_algebra(dim);
      break;
    case 6:
      alg = dim >= 3 ? detail::filiform_with_padding(rng, dim) : detail::blank_algebra(dim);
      break;
    case 7:
      alg = dim >= 3 ? detail::heisenberg_with_padding(rng, dim) : detail::blank_algebra(dim);
      break;
    default:
      alg = detail::random_triangular(rng, dim);
      break;
  }
  if (rng.next_bool())
    alg = transform_algebra(alg, random_unimodular_matrix(rng, dim, rng.next_int(2, 6)));
  return alg;
}

/// Random polarization guaranteed to generate: an invertibly mixed complement
/// of [g, g] (its projection mod [g, g] stays onto), sheared by vectors of
/// [g, g], plus optional extra directions.
inline Subspace random_bracket_generating_polarization(Rng& rng, const LieAlgebra& alg) {
  auto series = lower_central_series(alg);
  const Subspace derived = series.size() > 1 ? series[1] : zero_subspace(alg.dim);
  RatMat gens = complement_in(derived, full_subspace(alg.dim));
  const int r = static_cast<int>(gens.size());
  RatMat mix = random_unimodular_matrix(rng, r, rng.next_int(1, 4));
  RatMat rows;
  for (int i = 0; i < r; ++i) {
    RatVec u = zero_vec(alg.dim);
    for (int j = 0; j < r; ++j)
      if (mix[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] != 0)
        u = add_vec(u, scale_vec(mix[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)],
                                 gens[static_cast<std::size_t>(j)]));
    for (const auto& drow : derived.basis)
      if (rng.next_bool(0.3)) u = add_vec(u, scale_vec(rng.next_rational(2, 2), drow));
    rows.push_back(std::move(u));
  }
  const int extras = rng.next_bool(0.4) ? rng.next_int(1, 2) : 0;
  for (int t = 0; t < extras; ++t) {
    RatVec u = zero_vec(alg.dim);
    for (int k = 0; k < alg.dim; ++k)
      if (rng.next_bool(0.5)) u[static_cast<std::size_t>(k)] = rng.next_rational(2, 2);
    rows.push_back(std::move(u));
  }
  return make_subspace(alg.dim, std::move(rows));
}

}  // namespace geolie
