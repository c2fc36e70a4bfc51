#pragma once

#include <algorithm>
#include <vector>

#include "latpoly/polytope.hpp"
#include "support.hpp"

namespace testsupport {

using latpoly::LatticePolytope;

inline LatticePolytope random_polytope(std::size_t d, std::size_t npts, Int lo, Int hi) {
  for (;;) {
    std::vector<IntVector> pts;
    for (std::size_t i = 0; i < npts; ++i) {
      IntVector p(d);
      for (auto& v : p) v = uniform(lo, hi);
      pts.push_back(p);
    }
    LatticePolytope p(d, pts);
    if (latpoly::is_full_dimensional(p)) return p;
  }
}

inline std::vector<IntVector> random_simplex_vertices(std::size_t d, Int lo, Int hi) {
  for (;;) {
    std::vector<IntVector> pts;
    for (std::size_t i = 0; i <= d; ++i) {
      IntVector p(d);
      for (auto& v : p) v = uniform(lo, hi);
      pts.push_back(p);
    }
    IntMatrix m(d + 1, d + 1);
    for (std::size_t i = 0; i <= d; ++i) {
      for (std::size_t c = 0; c < d; ++c) m(i, c) = pts[i][c];
      m(i, d) = 1;
    }
    if (leibniz_det(m) != 0) return pts;
  }
}

inline LatticePolytope image(const LatticePolytope& p, const IntMatrix& u, const IntVector& t) {
  std::vector<IntVector> out;
  for (const auto& v : p.vertices()) {
    IntVector w = latpoly::row_times(v, u);
    for (std::size_t i = 0; i < w.size(); ++i) w[i] += t[i];
    out.push_back(w);
  }
  return LatticePolytope(p.dim(), out);
}

// Brute force over the bounding box of nP, testing facet slacks directly.
inline Int box_count(const LatticePolytope& p, Int n, bool interior) {
  const std::size_t d = p.dim();
  const auto fs = latpoly::facets(p);
  IntVector lo(d), hi(d);
  for (std::size_t c = 0; c < d; ++c) {
    lo[c] = hi[c] = p.vertices()[0][c];
    for (const auto& v : p.vertices()) {
      lo[c] = std::min(lo[c], v[c]);
      hi[c] = std::max(hi[c], v[c]);
    }
    lo[c] *= n;
    hi[c] *= n;
  }
  IntVector x = lo;
  Int count = 0;
  for (;;) {
    bool ok = true;
    for (const auto& f : fs) {
      const Int s = f.offset * n - latpoly::dot(f.normal, x);
      if (s < 0 || (interior && s == 0)) ok = false;
    }
    count += ok;
    std::size_t c = 0;
    while (c < d && x[c] == hi[c]) {
      x[c] = lo[c];
      ++c;
    }
    if (c == d) break;
    ++x[c];
  }
  return count;
}

}  // namespace testsupport
