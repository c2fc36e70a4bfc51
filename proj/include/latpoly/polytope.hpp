#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "latpoly/arith.hpp"
#include "latpoly/lp.hpp"
#include "latpoly/matrix.hpp"

namespace latpoly {

/// Convex hull of finitely many lattice points. Construction drops duplicates and every point lying
/// in the hull of the others, so `vertices()` is exactly the vertex set, sorted lexicographically.
class LatticePolytope {
 public:
  LatticePolytope() = default;
  LatticePolytope(std::size_t dim, std::vector<IntVector> points, std::string name = {});

  std::size_t dim() const { return dim_; }
  const std::vector<IntVector>& vertices() const { return vertices_; }
  std::size_t num_vertices() const { return vertices_.size(); }
  const std::string& name() const { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }

  friend bool operator==(const LatticePolytope& a, const LatticePolytope& b) {
    return a.dim_ == b.dim_ && a.vertices_ == b.vertices_;
  }

  std::string to_string() const;

 private:
  std::size_t dim_ = 0;
  std::vector<IntVector> vertices_;
  std::string name_;
};

/// Sort, deduplicate, and drop points inside the convex hull of the remaining ones.
std::vector<IntVector> reduce_to_vertices(std::vector<IntVector> points);

std::size_t affine_dimension(std::span<const IntVector> points);
inline std::size_t affine_dimension(const LatticePolytope& p) { return affine_dimension(p.vertices()); }
inline bool is_full_dimensional(const LatticePolytope& p) { return affine_dimension(p) == p.dim(); }
inline bool is_simplex(const LatticePolytope& p) { return p.num_vertices() == affine_dimension(p) + 1; }

/// x -> x * matrix + translation, with |det(matrix)| = 1.
struct UnimodularMap {
  IntMatrix matrix;
  IntVector translation;

  static UnimodularMap identity(std::size_t d);
  static UnimodularMap translation_by(IntVector w);
  /// Validates squareness, |det| = 1 and the translation length.
  static UnimodularMap make(IntMatrix matrix, IntVector translation);

  std::size_t dim() const { return matrix.rows(); }
  IntVector apply(std::span<const Int> x) const;
  UnimodularMap inverse() const;
  /// The map x -> next(this(x)).
  UnimodularMap then(const UnimodularMap& next) const;

  friend bool operator==(const UnimodularMap&, const UnimodularMap&) = default;
};

LatticePolytope apply_map(const UnimodularMap& t, const LatticePolytope& p);

/// Affine lattice origin + Z-span(rows of basis); basis rows are a lattice basis of Z^d ∩ (its span).
struct AffineLattice {
  IntVector origin;
  IntMatrix basis;

  std::size_t rank() const { return basis.rows(); }
  std::size_t ambient_dim() const { return origin.size(); }
  /// Coordinates y with x = origin + y * basis, or nullopt when x is not in the affine lattice.
  std::optional<IntVector> local_coordinates(std::span<const Int> x) const;
  IntVector embed(std::span<const Int> y) const;

  friend bool operator==(const AffineLattice&, const AffineLattice&) = default;
};

/// Saturated affine lattice Z^d ∩ aff(points). The origin is the first point.
AffineLattice affine_hull_lattice(std::span<const IntVector> points);

struct Normalization {
  LatticePolytope polytope;  ///< full-dimensional, in dimension dim(aff P)
  AffineLattice frame;       ///< polytope = local coordinates of P in frame
  bool identity = false;     ///< true when P was already full-dimensional (frame is the standard one)
};

Normalization affine_lattice_normalize(const LatticePolytope& p);

/// Facet inequality normal . x <= offset with a primitive integer normal.
struct Facet {
  IntVector normal;
  Int offset = 0;

  Int slack(std::span<const Int> x) const { return checked_sub(offset, dot(normal, x)); }
  friend bool operator==(const Facet&, const Facet&) = default;
  friend auto operator<=>(const Facet&, const Facet&) = default;
};

/// Facets of conv(points); the points must affinely span R^dim. Sorted, deterministic.
std::vector<Facet> facets_of_points(std::span<const IntVector> points, std::size_t dim);
inline std::vector<Facet> facets(const LatticePolytope& p) { return facets_of_points(p.vertices(), p.dim()); }

bool point_in_polytope(const LatticePolytope& p, std::span<const Rational> x);

/// Pulling triangulation of a full-dimensional polytope; cells are sorted vertex-index lists.
std::vector<std::vector<std::size_t>> pulling_triangulation(const LatticePolytope& p);

/// |det(v_1 - v_0, ..., v_d - v_0)| for d+1 points in R^d.
Int simplex_normalized_volume(std::span<const IntVector> vertices);

/// Normalized volume with respect to the affine lattice of P (sum over a pulling triangulation).
Int normalized_volume(const LatticePolytope& p);

/// Lattice points of dilates of a full-dimensional polytope, swept coordinate by coordinate with
/// exact bounds taken from the facets of each coordinate projection.
class PointEnumerator {
 public:
  explicit PointEnumerator(const LatticePolytope& p);

  Int count(Int n, bool interior = false) const;
  void for_each(Int n, bool interior, const std::function<void(std::span<const Int>)>& fn) const;
  std::vector<IntVector> points(Int n, bool interior = false) const;

 private:
  std::size_t dim_ = 0;
  std::vector<std::vector<Facet>> levels_;
};

/// Lattice points in nP for any P (lower-dimensional P counted in its own affine lattice).
Int count_lattice_points(const LatticePolytope& p, Int n);
std::vector<IntVector> lattice_points(const LatticePolytope& p);

/// Reference counter: bounding box of nP with one exact LP membership test per box point.
Int count_points_box(const LatticePolytope& p, Int n);

}  // namespace latpoly
