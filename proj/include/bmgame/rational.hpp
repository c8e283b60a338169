// Copyright 2026 The bmgame Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef BMGAME_RATIONAL_HPP
#define BMGAME_RATIONAL_HPP

#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "bmgame/error.hpp"

namespace bmgame {

using BigInt = boost::multiprecision::cpp_int;
// Always normalized: lowest terms, positive denominator.
using Rational = boost::multiprecision::cpp_rational;

inline BigInt numerator_of(const Rational& r) {
  return boost::multiprecision::numerator(r);
}
inline BigInt denominator_of(const Rational& r) {
  return boost::multiprecision::denominator(r);
}
inline bool is_integral(const Rational& r) { return denominator_of(r) == 1; }

/// Parses a decimal integer with optional leading '-'. Returns nullopt on
/// anything else (no '+', no whitespace, no leading zeros check).
inline std::optional<BigInt> parse_bigint(std::string_view text) {
  std::size_t pos = 0;
  if (!text.empty() && text[0] == '-') pos = 1;
  if (pos == text.size()) return std::nullopt;
  for (std::size_t i = pos; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9') return std::nullopt;
  }
  return BigInt(std::string(text));
}

/// Accepts "n" or "n/d" with d > 0.
inline std::optional<Rational> parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    auto n = parse_bigint(text);
    if (!n) return std::nullopt;
    return Rational(*n);
  }
  auto n = parse_bigint(text.substr(0, slash));
  auto d = parse_bigint(text.substr(slash + 1));
  if (!n || !d || *d <= 0) return std::nullopt;
  return Rational(*n, *d);
}

/// Integers print bare, everything else as "num/den".
inline std::string format_rational(const Rational& r) {
  if (is_integral(r)) return numerator_of(r).str();
  return numerator_of(r).str() + "/" + denominator_of(r).str();
}

inline bool fits_int64(const BigInt& v) {
  return v <= std::numeric_limits<std::int64_t>::max() &&
         v >= std::numeric_limits<std::int64_t>::min();
}

inline BigInt lcm_of_denominators(std::span<const Rational> values) {
  BigInt l = 1;
  for (const auto& v : values) {
    l = boost::multiprecision::lcm(l, denominator_of(v));
  }
  return l;
}

/// A list of rationals brought to a common integer scale:
/// value[i] == scaled[i] / scale exactly.
struct ScaledValues {
  BigInt scale = 1;
  std::vector<BigInt> scaled;
};

inline ScaledValues scale_to_integers(std::span<const Rational> values) {
  ScaledValues out;
  out.scale = lcm_of_denominators(values);
  out.scaled.reserve(values.size());
  for (const auto& v : values) {
    out.scaled.push_back(numerator_of(v) * (out.scale / denominator_of(v)));
  }
  return out;
}

namespace detail {

// Conversions between the two integer representations the solvers are
// instantiated with.
template <class Int>
Int from_big(const BigInt& v) {
  if constexpr (std::is_same_v<Int, BigInt>) {
    return v;
  } else {
    return static_cast<Int>(v);
  }
}

template <class Int>
BigInt to_big(const Int& v) {
  return BigInt(v);
}

// Largest magnitude we allow on the int64 fast path; leaves headroom for a
// handful of additions before anything could wrap.
inline const BigInt& int64_safe_bound() {
  static const BigInt bound = BigInt(1) << 60;
  return bound;
}

}  // namespace detail

}  // namespace bmgame

#endif  // BMGAME_RATIONAL_HPP
