#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "latpoly/matrix.hpp"

namespace testsupport {

using latpoly::Int;
using latpoly::IntMatrix;
using latpoly::IntVector;

inline std::mt19937_64& rng() {
  static std::mt19937_64 gen(20240601);
  return gen;
}

inline Int uniform(Int lo, Int hi) { return std::uniform_int_distribution<Int>(lo, hi)(rng()); }

inline IntMatrix random_matrix(std::size_t rows, std::size_t cols, Int lo, Int hi) {
  IntMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = uniform(lo, hi);
  return m;
}

// Product of random elementary operations: unimodular by construction.
inline IntMatrix random_unimodular(std::size_t n, int steps = 12) {
  IntMatrix u = IntMatrix::identity(n);
  if (n < 2) {
    if (n == 1 && uniform(0, 1)) u.negate_row(0);
    return u;
  }
  for (int s = 0; s < steps; ++s) {
    const auto a = static_cast<std::size_t>(uniform(0, static_cast<Int>(n) - 1));
    auto b = static_cast<std::size_t>(uniform(0, static_cast<Int>(n) - 2));
    if (b >= a) ++b;
    switch (uniform(0, 2)) {
      case 0: u.add_row_multiple(a, b, uniform(0, 1) ? 1 : -1); break;
      case 1: u.swap_rows(a, b); break;
      default: u.negate_row(a); break;
    }
  }
  return u;
}

// Leibniz-formula determinant; independent of the elimination code.
inline Int leibniz_det(const IntMatrix& m) {
  const std::size_t n = m.rows();
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  Int total = 0;
  do {
    Int term = 1;
    for (std::size_t i = 0; i < n; ++i) term *= m(i, perm[i]);
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
    total += (inversions % 2) ? -term : term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

}  // namespace testsupport
