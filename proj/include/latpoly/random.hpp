#pragma once

#include <cstdint>
#include <random>

#include "latpoly/polytope.hpp"

namespace latpoly {

using Rng = std::mt19937_64;

Int random_int(Rng& rng, Int lo, Int hi);
/// Product of `steps` random elementary operations (row additions with ±1, swaps, negations).
IntMatrix random_unimodular_matrix(Rng& rng, std::size_t d, int steps = 8);
UnimodularMap random_unimodular_map(Rng& rng, std::size_t d, Int shift = 5, int steps = 8);
/// d+1 affinely independent points with coordinates in [lo, hi].
std::vector<IntVector> random_simplex(Rng& rng, std::size_t d, Int lo, Int hi);

}  // namespace latpoly
