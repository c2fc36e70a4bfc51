#pragma once

#include <array>
#include <string>
#include <vector>

#include "latpoly/polytope.hpp"

namespace latpoly {

/// (δ_0, ..., δ_d). Index i is the coefficient of t^i.
struct DeltaVector {
  std::vector<Int> entries;

  std::size_t dim() const { return entries.empty() ? 0 : entries.size() - 1; }
  /// s = max{i : δ_i != 0}.
  std::size_t degree() const;
  Int volume() const;
  /// Each i >= 1 repeated δ_i times, ascending: the exponent tuple (i_1, ..., i_{V-1}).
  std::vector<Int> exponents() const;
  /// Same polynomial seen in dimension d >= dim() (trailing zeros appended).
  DeltaVector padded(std::size_t d) const;
  /// "1+2t+t^2"
  std::string polynomial() const;

  friend bool operator==(const DeltaVector&, const DeltaVector&) = default;
};

/// The δ-vector in dimension d of 1 + t^{e_1} + ... for the given exponents.
DeltaVector delta_from_exponents(std::span<const Int> exponents, std::size_t d);

/// |nP ∩ Z^d| for full-dimensional P.
Int count_points(const LatticePolytope& p, Int n);
/// Interior lattice points of nP for full-dimensional P.
Int interior_count(const LatticePolytope& p, Int n);

/// Solve L(n) = Σ δ_i C(n+d-i, d), n = 0..d, by forward substitution. Throws Error when the
/// result is not a valid δ-vector.
DeltaVector delta_from_count_sequence(std::span<const Int> counts, std::size_t d);

/// δ of P with respect to its own affine lattice (lower-dimensional input is normalized first).
DeltaVector delta_from_counts(const LatticePolytope& p);

Int ehrhart_from_delta(const DeltaVector& delta, Int n);

struct DeltaBasicsReport {
  /// [0] δ_0 = 1, δ_1 = |P ∩ Z^d| - (d+1), δ_d = interior points, δ_1 >= δ_d
  /// [1] δ_i >= 0
  /// [2] δ_d != 0 implies δ_i >= δ_1 for 1 <= i <= d-1
  /// [3] Σ δ_i equals the normalized volume from a triangulation
  std::array<bool, 4> pass{};
  std::array<std::string, 4> details;
  bool all() const { return pass[0] && pass[1] && pass[2] && pass[3]; }
};

DeltaBasicsReport check_delta_basics(const LatticePolytope& p);

/// δ_0 + ... + δ_i <= δ_s + ... + δ_{s-i} for 0 <= i <= floor(s/2).
bool stanley_inequalities(const DeltaVector& delta);
/// δ_{d-1} + ... + δ_{d-i} <= δ_2 + ... + δ_{i+1} for 1 <= i <= floor((d-1)/2).
bool hibi_inequalities(const DeltaVector& delta);

/// L_P(n) = L_T1(n) + L_T2(n) - L_Δ(n) for n = 0..d+2, all counts taken in Z^d.
bool triangulation_split_check(const LatticePolytope& p, const LatticePolytope& t1, const LatticePolytope& t2,
                               const LatticePolytope& common);

/// δ of Q as a subpolytope of R^d: the intrinsic δ of Q padded to length d+1.
DeltaVector delta_in_ambient(const LatticePolytope& q);

/// Componentwise δ(P) >= δ(Q). Throws InvalidArgument unless Q ⊆ P.
bool monotonicity_check(const LatticePolytope& p, const LatticePolytope& q);

}  // namespace latpoly
