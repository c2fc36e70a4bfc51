#include "latpoly/lp.hpp"

#include <cstddef>

namespace latpoly {

RationalVector to_rational(std::span<const Int> v) {
  RationalVector out;
  out.reserve(v.size());
  for (Int x : v) out.emplace_back(x);
  return out;
}

std::optional<RationalVector> convex_weights(std::span<const IntVector> points, std::span<const Rational> x) {
  const std::size_t n = points.size();
  const std::size_t d = x.size();
  if (n == 0) return std::nullopt;
  for (const auto& p : points)
    if (p.size() != d) throw InvalidArgument("convex_weights: dimension mismatch");

  // Rows: d coordinate equations plus the affine one. Columns: n weights, m artificials, rhs.
  const std::size_t m = d + 1;
  const std::size_t cols = n + m + 1;
  std::vector<RationalVector> t(m + 1, RationalVector(cols));
  for (std::size_t r = 0; r < m; ++r) {
    Rational rhs = r < d ? x[r] : Rational(1);
    const bool flip = rhs.sign() < 0;
    for (std::size_t j = 0; j < n; ++j) {
      Rational a = r < d ? Rational(points[j][r]) : Rational(1);
      t[r][j] = flip ? -a : a;
    }
    t[r][n + r] = 1;
    t[r][cols - 1] = flip ? -rhs : rhs;
  }
  // Objective row holds the reduced costs of minimizing the sum of artificials.
  RationalVector& obj = t[m];
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t j = 0; j < cols; ++j)
      if (j < n || j == cols - 1) obj[j] -= t[r][j];

  std::vector<std::size_t> basis(m);
  for (std::size_t r = 0; r < m; ++r) basis[r] = n + r;

  for (;;) {
    std::size_t enter = cols;
    for (std::size_t j = 0; j + 1 < cols; ++j)
      if (obj[j].sign() < 0) {
        enter = j;
        break;
      }
    if (enter == cols) break;
    std::size_t leave = m;
    Rational best;
    for (std::size_t r = 0; r < m; ++r) {
      if (t[r][enter].sign() <= 0) continue;
      Rational ratio = t[r][cols - 1] / t[r][enter];
      if (leave == m || ratio < best || (ratio == best && basis[r] < basis[leave])) {
        leave = r;
        best = ratio;
      }
    }
    if (leave == m) break;  // unbounded cannot happen for Phase I; defensive
    const Rational piv = t[leave][enter];
    for (auto& v : t[leave]) v /= piv;
    for (std::size_t r = 0; r <= m; ++r) {
      if (r == leave || t[r][enter].sign() == 0) continue;
      const Rational f = t[r][enter];
      for (std::size_t j = 0; j < cols; ++j)
        if (t[leave][j].sign() != 0) t[r][j] -= f * t[leave][j];
    }
    basis[leave] = enter;
  }
  if (obj[cols - 1].sign() != 0) return std::nullopt;

  RationalVector w(n);
  for (std::size_t r = 0; r < m; ++r)
    if (basis[r] < n) w[basis[r]] = t[r][cols - 1];
  return w;
}

}  // namespace latpoly
