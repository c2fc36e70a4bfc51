#pragma once

#include <optional>
#include <span>
#include <vector>

#include "latpoly/arith.hpp"
#include "latpoly/matrix.hpp"

namespace latpoly {

using RationalVector = std::vector<Rational>;

RationalVector to_rational(std::span<const Int> v);

/// Convex weights c (c >= 0, sum c = 1) with sum c_i p_i = x, found by an exact Phase-I simplex
/// with Bland's rule. nullopt when x lies outside conv(points).
std::optional<RationalVector> convex_weights(std::span<const IntVector> points, std::span<const Rational> x);

inline bool in_convex_hull(std::span<const IntVector> points, std::span<const Rational> x) {
  return convex_weights(points, x).has_value();
}

}  // namespace latpoly
