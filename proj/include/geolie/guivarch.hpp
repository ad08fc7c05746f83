#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "geolie/errors.hpp"
#include "geolie/lie_algebra.hpp"
#include "geolie/linalg.hpp"
#include "geolie/rational.hpp"

namespace geolie {

/// Weighted direct-sum decomposition of a nilpotent algebra: layer m is a
/// complement of g^{m+1} inside g^m, and carries weight m under dilations.
struct GuivarchData {
  int ambient_dim = 0;
  std::vector<RatMat> layers;        // layers[m-1]: basis rows of V_m
  std::vector<double> weights;       // a_m, default 1

  [[nodiscard]] int step() const { return static_cast<int>(layers.size()); }
};

/// Canonical echelon-completion splitting along the lower central series.
inline GuivarchData guivarch_splitting(const LieAlgebra& alg) {
  auto series = lower_central_series(alg);
  if (series.back().rank() != 0) throw Error(Err::NotNilpotent, "splitting needs a nilpotent algebra");
  GuivarchData data;
  data.ambient_dim = alg.dim;
  for (std::size_t m = 0; m + 1 < series.size(); ++m) {
    data.layers.push_back(complement_in(series[m + 1], series[m]));
    data.weights.push_back(1.0);
  }
  return data;
}

/// Components v_m (ambient coordinates) of v = sum v_m along the layers,
/// together with the coefficient vectors in each layer basis.
struct LayerDecomposition {
  std::vector<RatVec> components;    // ambient coordinates per layer
  std::vector<RatVec> coefficients;  // coordinates in the layer bases
};

inline LayerDecomposition decompose(const GuivarchData& data, const RatVec& v) {
  if (static_cast<int>(v.size()) != data.ambient_dim)
    throw Error(Err::DimensionMismatch, "vector does not fit the splitting");
  RatMat all_rows;
  for (const auto& layer : data.layers)
    all_rows.insert(all_rows.end(), layer.begin(), layer.end());
  auto coords = coordinates_in(all_rows, v);
  if (!coords) throw Error(Err::BadInput, "splitting layers do not span the ambient space");
  LayerDecomposition out;
  std::size_t offset = 0;
  for (const auto& layer : data.layers) {
    RatVec comp = zero_vec(data.ambient_dim);
    RatVec coeff;
    for (const auto& row : layer) {
      const Rat c = (*coords)[offset++];
      coeff.push_back(c);
      if (c != 0)
        for (std::size_t k = 0; k < row.size(); ++k) comp[k] += c * row[k];
    }
    out.components.push_back(std::move(comp));
    out.coefficients.push_back(std::move(coeff));
  }
  return out;
}

/// Quasi-norm sum a_m ||v_m||^{1/m} with Euclidean norms taken in the layer
/// coefficient coordinates. Homogeneous of degree 1 under the dilations that
/// scale layer m by t^m.
inline double guivarch_quasinorm(const GuivarchData& data, const RatVec& v) {
  auto dec = decompose(data, v);
  double total = 0.0;
  for (std::size_t m = 0; m < dec.coefficients.size(); ++m) {
    double sq = 0.0;
    for (const auto& c : dec.coefficients[m]) {
      const double x = rat_to_double(c);
      sq += x * x;
    }
    if (sq == 0.0) continue;
    total += data.weights[m] * std::pow(std::sqrt(sq), 1.0 / static_cast<double>(m + 1));
  }
  return total;
}

/// Dilation by t: scales the layer-m component by t^m.
inline RatVec dilate(const GuivarchData& data, const Rat& t, const RatVec& v) {
  auto dec = decompose(data, v);
  RatVec out = zero_vec(data.ambient_dim);
  Rat power = 1;
  for (std::size_t m = 0; m < dec.components.size(); ++m) {
    power *= t;
    for (std::size_t k = 0; k < out.size(); ++k) out[k] += power * dec.components[m][k];
  }
  return out;
}

}  // namespace geolie
