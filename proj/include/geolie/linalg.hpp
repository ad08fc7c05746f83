#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "geolie/errors.hpp"
#include "geolie/rational.hpp"

namespace geolie {

/// Reduces m to reduced row echelon form in place, drops zero rows.
/// Returns the pivot column of each surviving row.
inline std::vector<int> rref(RatMat& m) {
  std::vector<int> pivots;
  if (m.empty()) return pivots;
  const std::size_t cols = m[0].size();
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
    std::size_t sel = row;
    while (sel < m.size() && m[sel][col] == 0) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[row], m[sel]);
    const Rat inv = Rat(1) / m[row][col];
    for (std::size_t c = col; c < cols; ++c) m[row][c] *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][col] == 0) continue;
      const Rat f = m[r][col];
      for (std::size_t c = col; c < cols; ++c) m[r][c] -= f * m[row][c];
    }
    pivots.push_back(static_cast<int>(col));
    ++row;
  }
  m.resize(row);
  return pivots;
}

/// A linear subspace of Q^ambient_dim held by its canonical reduced basis.
struct Subspace {
  int ambient_dim = 0;
  RatMat basis;  // reduced row echelon rows
  std::vector<int> pivots;

  [[nodiscard]] int rank() const { return static_cast<int>(basis.size()); }

  bool operator==(const Subspace& other) const {
    return ambient_dim == other.ambient_dim && basis == other.basis;
  }
};

inline Subspace make_subspace(int ambient_dim, RatMat spanning) {
  for (const auto& v : spanning)
    if (static_cast<int>(v.size()) != ambient_dim)
      throw Error(Err::DimensionMismatch, "spanning vector length mismatch");
  Subspace s;
  s.ambient_dim = ambient_dim;
  s.basis = std::move(spanning);
  s.pivots = rref(s.basis);
  return s;
}

inline Subspace zero_subspace(int ambient_dim) { return make_subspace(ambient_dim, {}); }

inline Subspace full_subspace(int ambient_dim) {
  RatMat rows;
  for (int i = 0; i < ambient_dim; ++i) {
    RatVec v = zero_vec(ambient_dim);
    v[static_cast<std::size_t>(i)] = 1;
    rows.push_back(std::move(v));
  }
  return make_subspace(ambient_dim, std::move(rows));
}

/// Reduces v against the subspace basis; the remainder is zero iff v lies in s.
inline RatVec reduce_against(const Subspace& s, RatVec v) {
  for (std::size_t r = 0; r < s.basis.size(); ++r) {
    const int p = s.pivots[r];
    if (v[static_cast<std::size_t>(p)] == 0) continue;
    const Rat f = v[static_cast<std::size_t>(p)];
    for (std::size_t c = 0; c < v.size(); ++c) v[c] -= f * s.basis[r][c];
  }
  return v;
}

inline bool contains(const Subspace& s, const RatVec& v) {
  if (static_cast<int>(v.size()) != s.ambient_dim)
    throw Error(Err::DimensionMismatch, "vector length mismatch");
  return is_zero_vec(reduce_against(s, v));
}

inline bool contains_subspace(const Subspace& outer, const Subspace& inner) {
  for (const auto& row : inner.basis)
    if (!contains(outer, row)) return false;
  return true;
}

inline Subspace subspace_sum(const Subspace& a, const Subspace& b) {
  RatMat rows = a.basis;
  rows.insert(rows.end(), b.basis.begin(), b.basis.end());
  return make_subspace(a.ambient_dim, std::move(rows));
}

/// Basis vectors of a complement of inner within outer, chosen greedily from
/// outer's canonical basis (echelon completion). Requires inner inside outer.
inline RatMat complement_in(const Subspace& inner, const Subspace& outer) {
  RatMat result;
  Subspace accum = inner;
  for (const auto& row : outer.basis) {
    if (contains(accum, row)) continue;
    result.push_back(row);
    accum = subspace_sum(accum, make_subspace(outer.ambient_dim, {row}));
  }
  return result;
}

/// Coordinates of v in the given (independent) basis rows, if v lies in their span.
inline std::optional<RatVec> coordinates_in(const RatMat& rows, const RatVec& v) {
  if (rows.empty()) return is_zero_vec(v) ? std::optional<RatVec>(RatVec{}) : std::nullopt;
  const std::size_t n = rows[0].size();
  const std::size_t k = rows.size();
  // Solve c * rows = v by eliminating the transposed augmented system.
  RatMat aug(n, RatVec(k + 1, Rat(0)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < k; ++j) aug[i][j] = rows[j][i];
    aug[i][k] = v[i];
  }
  std::vector<int> piv = rref(aug);
  RatVec coeff(k, Rat(0));
  for (std::size_t r = 0; r < aug.size(); ++r) {
    if (piv[r] == static_cast<int>(k)) return std::nullopt;  // inconsistent row
    coeff[static_cast<std::size_t>(piv[r])] = aug[r][k];
  }
  return coeff;
}

inline RatMat identity_mat(int n) {
  RatMat m(static_cast<std::size_t>(n), zero_vec(n));
  for (int i = 0; i < n; ++i) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
  return m;
}

inline RatVec mat_vec(const RatMat& m, const RatVec& v) {
  RatVec out(m.size(), Rat(0));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) out[i] += m[i][j] * v[j];
  return out;
}

inline RatMat mat_mul(const RatMat& a, const RatMat& b) {
  const std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
  RatMat out(n, RatVec(m, Rat(0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < k; ++l) {
      if (a[i][l] == 0) continue;
      for (std::size_t j = 0; j < m; ++j) out[i][j] += a[i][l] * b[l][j];
    }
  return out;
}

inline RatMat mat_inverse(const RatMat& m) {
  const std::size_t n = m.size();
  RatMat aug(n, RatVec(2 * n, Rat(0)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = m[i][j];
    aug[i][n + i] = 1;
  }
  rref(aug);
  if (aug.size() != n) throw Error(Err::BadInput, "singular matrix");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (aug[i][j] != (i == j ? 1 : 0)) throw Error(Err::BadInput, "singular matrix");
  RatMat inv(n, RatVec(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
  return inv;
}

}  // namespace geolie
