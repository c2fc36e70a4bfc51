#include "latpoly/random.hpp"

namespace latpoly {

Int random_int(Rng& rng, Int lo, Int hi) { return std::uniform_int_distribution<Int>(lo, hi)(rng); }

IntMatrix random_unimodular_matrix(Rng& rng, std::size_t d, int steps) {
  IntMatrix u = IntMatrix::identity(d);
  if (d == 0) return u;
  for (int s = 0; s < steps; ++s) {
    const auto a = static_cast<std::size_t>(random_int(rng, 0, static_cast<Int>(d) - 1));
    switch (d == 1 ? 2 : random_int(rng, 0, 3)) {
      case 0:
      case 1: {
        auto b = static_cast<std::size_t>(random_int(rng, 0, static_cast<Int>(d) - 2));
        if (b >= a) ++b;
        if (random_int(rng, 0, 2) == 0) {
          u.swap_rows(a, b);
        } else {
          u.add_row_multiple(a, b, random_int(rng, 0, 1) ? 1 : -1);
        }
        break;
      }
      default:
        u.negate_row(a);
    }
  }
  return u;
}

UnimodularMap random_unimodular_map(Rng& rng, std::size_t d, Int shift, int steps) {
  IntVector t(d);
  for (auto& x : t) x = random_int(rng, -shift, shift);
  return UnimodularMap{random_unimodular_matrix(rng, d, steps), std::move(t)};
}

std::vector<IntVector> random_simplex(Rng& rng, std::size_t d, Int lo, Int hi) {
  for (;;) {
    std::vector<IntVector> pts(d + 1, IntVector(d));
    for (auto& p : pts)
      for (auto& x : p) x = random_int(rng, lo, hi);
    if (affine_dimension(pts) == d) return pts;
  }
}

}  // namespace latpoly
