#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <cmath>
#include <string>
#include <vector>

#include "geolie/errors.hpp"

namespace geolie {

/// Exact rational scalar used throughout the Lie-algebra engine.
using Rat = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

using RatVec = std::vector<Rat>;
using RatMat = std::vector<RatVec>;

namespace detail {
inline bool is_integer_literal(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}
}  // namespace detail

/// Parses "p/q" or a bare integer "p". The denominator must be nonzero.
inline Rat parse_rational(const std::string& text) {
  auto slash = text.find('/');
  if (slash == std::string::npos) {
    if (!detail::is_integer_literal(text))
      throw Error(Err::MalformedSpec, "bad rational literal '" + text + "'");
    return Rat(BigInt(text));
  }
  std::string num = text.substr(0, slash);
  std::string den = text.substr(slash + 1);
  if (!detail::is_integer_literal(num) || !detail::is_integer_literal(den))
    throw Error(Err::MalformedSpec, "bad rational literal '" + text + "'");
  BigInt d(den);
  if (d == 0) throw Error(Err::MalformedSpec, "zero denominator in '" + text + "'");
  return Rat(BigInt(num)) / Rat(d);
}

/// Serializes bit-exactly, always with an explicit denominator ("3/1", "-1/2").
inline std::string format_rational(const Rat& r) {
  return numerator(r).str() + "/" + denominator(r).str();
}

inline double rat_to_double(const Rat& r) { return r.template convert_to<double>(); }

/// Exact conversion: every finite double is a rational with a power-of-two
/// denominator.
inline Rat rat_from_double(double d) {
  if (!std::isfinite(d)) throw Error(Err::BadInput, "non-finite value has no rational form");
  if (d == 0.0) return Rat(0);
  int exp = 0;
  const double mant = std::frexp(d, &exp);  // d = mant * 2^exp, |mant| in [1/2, 1)
  const auto scaled = static_cast<long long>(std::ldexp(mant, 53));
  Rat r(scaled);
  const int shift = exp - 53;
  if (shift >= 0)
    r *= Rat(BigInt(1) << shift);
  else
    r /= Rat(BigInt(1) << (-shift));
  return r;
}

inline RatVec zero_vec(int n) { return RatVec(static_cast<std::size_t>(n), Rat(0)); }

inline bool is_zero_vec(const RatVec& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

inline RatVec add_vec(const RatVec& a, const RatVec& b) {
  RatVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

inline RatVec scale_vec(const Rat& c, const RatVec& v) {
  RatVec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = c * v[i];
  return out;
}

inline RatVec negate_vec(const RatVec& v) { return scale_vec(Rat(-1), v); }

}  // namespace geolie
