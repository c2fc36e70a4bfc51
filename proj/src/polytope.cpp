#include "latpoly/polytope.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <set>
#include <sstream>

namespace latpoly {

namespace {

IntVector subtract(std::span<const Int> a, std::span<const Int> b) {
  IntVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = checked_sub(a[i], b[i]);
  return out;
}

// Advance idx to the next k-combination of {0..n-1} in lexicographic order.
bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
  const std::size_t k = idx.size();
  std::size_t i = k;
  while (i > 0) {
    --i;
    if (idx[i] < n - k + i) {
      ++idx[i];
      for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

void pull(const std::vector<IntVector>& all, const std::vector<std::size_t>& s, std::size_t k,
          std::vector<std::vector<std::size_t>>& out) {
  if (s.size() == k + 1) {
    out.push_back(s);
    return;
  }
  std::vector<IntVector> pts;
  pts.reserve(s.size());
  for (std::size_t i : s) pts.push_back(all[i]);
  const AffineLattice frame = affine_hull_lattice(pts);
  std::vector<IntVector> local;
  local.reserve(pts.size());
  for (const auto& p : pts) local.push_back(*frame.local_coordinates(p));
  for (const Facet& f : facets_of_points(local, k)) {
    if (f.slack(local[0]) == 0) continue;
    std::vector<std::size_t> face;
    for (std::size_t i = 0; i < local.size(); ++i)
      if (f.slack(local[i]) == 0) face.push_back(s[i]);
    std::vector<std::vector<std::size_t>> sub;
    pull(all, face, k - 1, sub);
    for (auto& cell : sub) {
      cell.push_back(s[0]);
      std::sort(cell.begin(), cell.end());
      out.push_back(std::move(cell));
    }
  }
}

}  // namespace

std::vector<IntVector> reduce_to_vertices(std::vector<IntVector> points) {
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  if (points.size() <= 2) return points;
  std::vector<IntVector> kept;
  std::vector<IntVector> others;
  for (std::size_t i = 0; i < points.size(); ++i) {
    others.clear();
    for (std::size_t j = 0; j < points.size(); ++j)
      if (j != i) others.push_back(points[j]);
    if (!in_convex_hull(others, to_rational(points[i]))) kept.push_back(points[i]);
  }
  return kept;
}

LatticePolytope::LatticePolytope(std::size_t dim, std::vector<IntVector> points, std::string name)
    : dim_(dim), name_(std::move(name)) {
  if (points.empty()) throw InvalidArgument("a polytope needs at least one point");
  for (const auto& p : points)
    if (p.size() != dim) throw InvalidArgument("point length does not match the ambient dimension");
  vertices_ = reduce_to_vertices(std::move(points));
}

std::string LatticePolytope::to_string() const {
  std::ostringstream os;
  os << "conv(";
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    os << (i ? ",(" : "(");
    for (std::size_t c = 0; c < dim_; ++c) os << (c ? "," : "") << vertices_[i][c];
    os << ')';
  }
  os << ')';
  return os.str();
}

std::size_t affine_dimension(std::span<const IntVector> points) {
  if (points.size() <= 1) return 0;
  const std::size_t d = points[0].size();
  IntMatrix diff(points.size() - 1, d);
  for (std::size_t i = 1; i < points.size(); ++i)
    for (std::size_t c = 0; c < d; ++c) diff(i - 1, c) = checked_sub(points[i][c], points[0][c]);
  return rank(diff);
}

UnimodularMap UnimodularMap::identity(std::size_t d) { return {IntMatrix::identity(d), IntVector(d, 0)}; }

UnimodularMap UnimodularMap::translation_by(IntVector w) {
  const std::size_t d = w.size();
  return {IntMatrix::identity(d), std::move(w)};
}

UnimodularMap UnimodularMap::make(IntMatrix matrix, IntVector translation) {
  if (matrix.rows() != matrix.cols()) throw InvalidArgument("map matrix must be square");
  if (translation.size() != matrix.rows()) throw InvalidArgument("translation length does not match the matrix");
  const Int det = determinant(matrix);
  if (det != 1 && det != -1) throw InvalidArgument("map matrix is not unimodular (det " + std::to_string(det) + ")");
  return {std::move(matrix), std::move(translation)};
}

IntVector UnimodularMap::apply(std::span<const Int> x) const {
  IntVector y = row_times(x, matrix);
  for (std::size_t i = 0; i < y.size(); ++i) y[i] = checked_add(y[i], translation[i]);
  return y;
}

UnimodularMap UnimodularMap::inverse() const {
  IntMatrix inv = unimodular_inverse(matrix);
  IntVector t = row_times(translation, inv);
  for (Int& v : t) v = checked_neg(v);
  return {std::move(inv), std::move(t)};
}

UnimodularMap UnimodularMap::then(const UnimodularMap& next) const {
  if (next.dim() != dim()) throw InvalidArgument("composing maps of different dimensions");
  IntVector t = row_times(translation, next.matrix);
  for (std::size_t i = 0; i < t.size(); ++i) t[i] = checked_add(t[i], next.translation[i]);
  return {matrix * next.matrix, std::move(t)};
}

LatticePolytope apply_map(const UnimodularMap& t, const LatticePolytope& p) {
  if (t.dim() != p.dim()) throw InvalidArgument("map and polytope dimensions differ");
  std::vector<IntVector> image;
  image.reserve(p.num_vertices());
  for (const auto& v : p.vertices()) image.push_back(t.apply(v));
  LatticePolytope q(p.dim(), std::move(image), p.name());
  if (q.num_vertices() != p.num_vertices()) throw Error("apply_map: vertex count changed under a unimodular map");
  return q;
}

std::optional<IntVector> AffineLattice::local_coordinates(std::span<const Int> x) const {
  if (x.size() != origin.size()) throw InvalidArgument("local_coordinates: dimension mismatch");
  const IntVector diff = subtract(x, origin);
  if (basis.rows() == 0) {
    if (std::all_of(diff.begin(), diff.end(), [](Int v) { return v == 0; })) return IntVector{};
    return std::nullopt;
  }
  return solve_row_combination(basis, diff);
}

IntVector AffineLattice::embed(std::span<const Int> y) const {
  if (y.size() != basis.rows()) throw InvalidArgument("embed: dimension mismatch");
  IntVector x = origin;
  if (basis.rows() == 0) return x;
  const IntVector lin = row_times(y, basis);
  for (std::size_t i = 0; i < x.size(); ++i) x[i] = checked_add(x[i], lin[i]);
  return x;
}

AffineLattice affine_hull_lattice(std::span<const IntVector> points) {
  if (points.empty()) throw InvalidArgument("affine hull of an empty set");
  const std::size_t d = points[0].size();
  AffineLattice out{points[0], IntMatrix(0, d)};
  if (points.size() == 1 || d == 0) return out;
  IntMatrix diff(points.size() - 1, d);
  for (std::size_t i = 1; i < points.size(); ++i)
    for (std::size_t c = 0; c < d; ++c) diff(i - 1, c) = checked_sub(points[i][c], points[0][c]);
  const SmithDecomposition snf = smith_normal_form(diff);
  if (snf.rank == 0) return out;
  // The leading rows of right^{-1} span the saturation of the difference lattice.
  const IntMatrix rinv = unimodular_inverse(snf.right);
  IntMatrix basis(snf.rank, d);
  for (std::size_t r = 0; r < snf.rank; ++r)
    for (std::size_t c = 0; c < d; ++c) basis(r, c) = rinv(r, c);
  out.basis = hermite_normal_form(basis).h;
  return out;
}

Normalization affine_lattice_normalize(const LatticePolytope& p) {
  const std::size_t d = p.dim();
  if (is_full_dimensional(p)) return {p, {IntVector(d, 0), IntMatrix::identity(d)}, true};
  AffineLattice frame = affine_hull_lattice(p.vertices());
  std::vector<IntVector> local;
  local.reserve(p.num_vertices());
  for (const auto& v : p.vertices()) local.push_back(*frame.local_coordinates(v));
  return {LatticePolytope(frame.rank(), std::move(local), p.name()), std::move(frame), false};
}

std::vector<Facet> facets_of_points(std::span<const IntVector> points, std::size_t dim) {
  if (dim == 0) return {};
  const std::size_t n = points.size();
  if (n < dim + 1) throw InvalidArgument("facets_of_points: points are not full-dimensional");
  std::set<Facet> found;
  std::vector<std::size_t> idx(dim);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  IntMatrix diff(dim - 1, dim);
  do {
    for (std::size_t i = 1; i < dim; ++i)
      for (std::size_t c = 0; c < dim; ++c) diff(i - 1, c) = checked_sub(points[idx[i]][c], points[idx[0]][c]);
    const IntMatrix ker = integer_kernel(diff);
    if (ker.rows() != 1) continue;
    IntVector a = ker.row(0);
    Int b = dot(a, points[idx[0]]);
    int side = 0;
    bool supporting = true;
    for (const auto& p : points) {
      const Int s = checked_sub(dot(a, p), b);
      const int sg = (s > 0) - (s < 0);
      if (sg == 0) continue;
      if (side == 0) side = sg;
      else if (side != sg) {
        supporting = false;
        break;
      }
    }
    if (!supporting || side == 0) continue;
    if (side > 0) {
      for (Int& v : a) v = checked_neg(v);
      b = checked_neg(b);
    }
    found.insert(Facet{std::move(a), b});
  } while (next_combination(idx, n));
  return {found.begin(), found.end()};
}

bool point_in_polytope(const LatticePolytope& p, std::span<const Rational> x) {
  if (x.size() != p.dim()) throw InvalidArgument("point_in_polytope: dimension mismatch");
  return in_convex_hull(p.vertices(), x);
}

std::vector<std::vector<std::size_t>> pulling_triangulation(const LatticePolytope& p) {
  if (!is_full_dimensional(p)) throw InvalidArgument("pulling_triangulation needs a full-dimensional polytope");
  std::vector<std::size_t> all(p.num_vertices());
  std::iota(all.begin(), all.end(), std::size_t{0});
  std::vector<std::vector<std::size_t>> cells;
  pull(p.vertices(), all, p.dim(), cells);
  std::sort(cells.begin(), cells.end());
  return cells;
}

Int simplex_normalized_volume(std::span<const IntVector> vertices) {
  if (vertices.empty()) throw InvalidArgument("empty simplex");
  const std::size_t d = vertices[0].size();
  if (vertices.size() != d + 1) throw InvalidArgument("simplex_normalized_volume needs d+1 points in R^d");
  IntMatrix m(d, d);
  for (std::size_t i = 1; i <= d; ++i)
    for (std::size_t c = 0; c < d; ++c) m(i - 1, c) = checked_sub(vertices[i][c], vertices[0][c]);
  return checked_abs(determinant(m));
}

Int normalized_volume(const LatticePolytope& p) {
  const Normalization norm = affine_lattice_normalize(p);
  const LatticePolytope& q = norm.polytope;
  if (q.dim() == 0) return 1;
  Int total = 0;
  std::vector<IntVector> cell;
  for (const auto& idx : pulling_triangulation(q)) {
    cell.clear();
    for (std::size_t i : idx) cell.push_back(q.vertices()[i]);
    total = checked_add(total, simplex_normalized_volume(cell));
  }
  return total;
}

PointEnumerator::PointEnumerator(const LatticePolytope& p) : dim_(p.dim()) {
  if (!is_full_dimensional(p)) throw InvalidArgument("PointEnumerator needs a full-dimensional polytope");
  levels_.resize(dim_);
  for (std::size_t j = 0; j < dim_; ++j) {
    std::vector<IntVector> proj;
    proj.reserve(p.num_vertices());
    for (const auto& v : p.vertices()) proj.emplace_back(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(j + 1));
    std::sort(proj.begin(), proj.end());
    proj.erase(std::unique(proj.begin(), proj.end()), proj.end());
    levels_[j] = facets_of_points(proj, j + 1);
  }
}

void PointEnumerator::for_each(Int n, bool interior, const std::function<void(std::span<const Int>)>& fn) const {
  if (n < 0) throw InvalidArgument("dilation factor must be non-negative");
  IntVector x(dim_, 0);
  if (dim_ == 0) {
    fn(x);
    return;
  }
  const Int strict = interior ? 1 : 0;
  std::function<void(std::size_t)> rec = [&](std::size_t j) {
    Int lo = std::numeric_limits<Int>::min();
    Int hi = std::numeric_limits<Int>::max();
    for (const Facet& f : levels_[j]) {
      Int r = checked_sub(checked_mul(n, f.offset), strict);
      for (std::size_t i = 0; i < j; ++i) r = checked_sub(r, checked_mul(f.normal[i], x[i]));
      const Int a = f.normal[j];
      if (a == 0) {
        if (r < 0) return;
      } else if (a > 0) {
        hi = std::min(hi, floor_div(r, a));
      } else {
        lo = std::max(lo, ceil_div(r, a));
      }
    }
    for (Int v = lo; v <= hi; ++v) {
      x[j] = v;
      if (j + 1 == dim_) fn(x);
      else rec(j + 1);
    }
  };
  rec(0);
}

Int PointEnumerator::count(Int n, bool interior) const {
  Int total = 0;
  for_each(n, interior, [&](std::span<const Int>) { total = checked_add(total, 1); });
  return total;
}

std::vector<IntVector> PointEnumerator::points(Int n, bool interior) const {
  std::vector<IntVector> out;
  for_each(n, interior, [&](std::span<const Int> x) { out.emplace_back(x.begin(), x.end()); });
  return out;
}

Int count_lattice_points(const LatticePolytope& p, Int n) {
  if (n == 0) return 1;
  return PointEnumerator(affine_lattice_normalize(p).polytope).count(n);
}

std::vector<IntVector> lattice_points(const LatticePolytope& p) {
  const Normalization norm = affine_lattice_normalize(p);
  std::vector<IntVector> out;
  PointEnumerator(norm.polytope).for_each(1, false, [&](std::span<const Int> y) {
    out.push_back(norm.identity ? IntVector(y.begin(), y.end()) : norm.frame.embed(y));
  });
  std::sort(out.begin(), out.end());
  return out;
}

Int count_points_box(const LatticePolytope& p, Int n) {
  if (!is_full_dimensional(p)) throw InvalidArgument("count_points_box needs a full-dimensional polytope");
  if (n < 0) throw InvalidArgument("dilation factor must be non-negative");
  if (n == 0) return 1;
  const std::size_t d = p.dim();
  IntVector lo(d), hi(d);
  for (std::size_t c = 0; c < d; ++c) {
    lo[c] = hi[c] = p.vertices()[0][c];
    for (const auto& v : p.vertices()) {
      lo[c] = std::min(lo[c], v[c]);
      hi[c] = std::max(hi[c], v[c]);
    }
    lo[c] = checked_mul(lo[c], n);
    hi[c] = checked_mul(hi[c], n);
  }
  Int total = 0;
  IntVector x = lo;
  RationalVector q(d);
  for (;;) {
    for (std::size_t c = 0; c < d; ++c) q[c] = Rational(x[c], n);
    if (in_convex_hull(p.vertices(), q)) ++total;
    std::size_t c = 0;
    while (c < d && x[c] == hi[c]) {
      x[c] = lo[c];
      ++c;
    }
    if (c == d) break;
    ++x[c];
  }
  return total;
}

}  // namespace latpoly
