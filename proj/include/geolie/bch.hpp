#pragma once

#include <map>
#include <utility>
#include <vector>

#include "geolie/errors.hpp"
#include "geolie/lie_algebra.hpp"
#include "geolie/rational.hpp"

namespace geolie {

namespace detail {

constexpr int kMaxBchStep = 6;

/// Words in two letters (0 and 1) with exact coefficients. A word
/// l_1 l_2 ... l_m stands for the right-nested bracket
/// [l_1, [l_2, [..., [l_{m-1}, l_m]...]]]; a single letter stands for itself.
struct BchWord {
  std::vector<int> letters;
  Rat coeff;
};

inline Rat factorial(int n) {
  Rat f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

/// Dynkin's series for log(exp x * exp y): sum over n >= 1 of
/// (-1)^{n-1}/n times, for every tuple of pairs (r_i, s_i) with r_i + s_i >= 1,
/// the nested bracket of x^{r_1} y^{s_1} ... x^{r_n} y^{s_n} divided by
/// m * prod r_i! s_i! where m is the total letter count. Terms sharing a word
/// are merged; words longer than kMaxBchStep are dropped (they vanish in any
/// algebra of step <= kMaxBchStep).
inline const std::vector<BchWord>& bch_word_table() {
  static const std::vector<BchWord> table = [] {
    std::map<std::vector<int>, Rat> merged;
    std::vector<int> word;
    // Depth-first over tuples of pairs; denom accumulates prod r_i! s_i!.
    auto extend = [&](auto&& self, int pairs_used, int n, const Rat& denom) -> void {
      const int len = static_cast<int>(word.size());
      if (pairs_used == n) {
        if (len == 0) return;
        Rat c = Rat((n % 2 == 1) ? 1 : -1) / (Rat(n) * Rat(len) * denom);
        merged[word] += c;
        return;
      }
      const int room = kMaxBchStep - len - (n - pairs_used - 1);
      for (int r = 0; r <= room; ++r) {
        for (int s = (r == 0 ? 1 : 0); r + s <= room; ++s) {
          for (int i = 0; i < r; ++i) word.push_back(0);
          for (int i = 0; i < s; ++i) word.push_back(1);
          self(self, pairs_used + 1, n, denom * factorial(r) * factorial(s));
          word.resize(static_cast<std::size_t>(len));
        }
      }
    };
    for (int n = 1; n <= kMaxBchStep; ++n) extend(extend, 0, n, Rat(1));
    std::vector<BchWord> flat;
    for (auto& [w, c] : merged)
      if (c != 0) flat.push_back({w, c});
    return flat;
  }();
  return table;
}

}  // namespace detail

/// Group product in exponential coordinates of a nilpotent algebra: the exact
/// Baker-Campbell-Hausdorff series truncated at the nilpotency step.
/// Supported up to step 6.
inline RatVec bch_product(const LieAlgebra& alg, const RatVec& x, const RatVec& y) {
  if (static_cast<int>(x.size()) != alg.dim || static_cast<int>(y.size()) != alg.dim)
    throw Error(Err::DimensionMismatch, "group product operand length mismatch");
  const int step = nilpotency_step(alg);  // throws NotNilpotent
  if (step > detail::kMaxBchStep)
    throw Error(Err::Unsupported, "group product implemented up to nilpotency step 6, algebra has step " +
                                      std::to_string(step));
  RatVec out = zero_vec(alg.dim);
  for (const auto& term : detail::bch_word_table()) {
    if (static_cast<int>(term.letters.size()) > step) continue;
    RatVec acc = term.letters.back() == 0 ? x : y;
    for (int i = static_cast<int>(term.letters.size()) - 2; i >= 0; --i) {
      acc = alg.bracket(term.letters[static_cast<std::size_t>(i)] == 0 ? x : y, acc);
      if (is_zero_vec(acc)) break;
    }
    if (is_zero_vec(acc)) continue;
    for (int k = 0; k < alg.dim; ++k)
      out[static_cast<std::size_t>(k)] += term.coeff * acc[static_cast<std::size_t>(k)];
  }
  return out;
}

}  // namespace geolie
