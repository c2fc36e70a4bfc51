#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "latpoly/ehrhart.hpp"
#include "latpoly/matrix.hpp"

namespace latpoly {

/// Element of (Q/Z)^{d+1} stored as numerators in [0, q) over the group exponent q.
struct GroupElement {
  IntVector residues;
  Int height = 0;
  Int order = 1;
};

/// Finite subgroup of (Q/Z)^{d+1} whose elements all have integral coordinate sum.
class LambdaGroup {
 public:
  /// `elements` are numerator vectors over `denominator`; they must form a group (checked).
  LambdaGroup(std::size_t dim, Int denominator, std::vector<IntVector> elements);

  std::size_t dim() const { return dim_; }
  Int denominator() const { return q_; }
  std::size_t order() const { return elements_.size(); }
  /// Sorted by residues; the zero element comes first.
  const std::vector<GroupElement>& elements() const { return elements_; }
  bool contains(std::span<const Int> residues) const;

 private:
  std::size_t dim_ = 0;
  Int q_ = 1;
  std::vector<GroupElement> elements_;
};

/// Closure of the given generators (numerators over q, any integers) in (Q/Z)^{d+1}. The
/// returned group uses the smallest common denominator.
LambdaGroup generated_group(std::size_t dim, Int q, std::span<const IntVector> generators);

/// Λ_Δ for the ordered vertices v_0..v_d of a full-dimensional simplex in R^d.
LambdaGroup lambda_group_of_simplex(std::span<const IntVector> vertices);

DeltaVector delta_from_group(const LambdaGroup& g);

/// A coordinate that vanishes on every element, if any (the simplex is then a lattice pyramid with
/// that vertex as apex).
std::optional<std::size_t> pyramid_coordinate(const LambdaGroup& g);
inline bool is_pyramid_simplex(const LambdaGroup& g) { return pyramid_coordinate(g).has_value(); }

/// ⟨(1/2, ..., 1/2)⟩ in dimension d (d+1 even).
LambdaGroup build_lambda_half(std::size_t d);
/// ⟨(1/3 × a, 2/3 × b)⟩.
LambdaGroup build_lambda_ab(Int a, Int b);
/// ⟨(1/4 × a, 1/2 × b, 3/4 × c)⟩.
LambdaGroup build_lambda1_abc(Int a, Int b, Int c);
/// ⟨(1/2 on blocks a and b), (1/2 on blocks b and c)⟩ (Klein four-group).
LambdaGroup build_lambda2_abc(Int a, Int b, Int c);

enum class GroupCase { V3, V4_1, V4_2, V4_Lambda2 };

/// Multiplicities (a, b[, c]) for the given ascending exponents. Throws InvalidArgument when the
/// case does not apply (negative multiplicity, or i_1 < i_2 < i_3 violated for V4_1).
std::vector<Int> group_params_from_exponents(GroupCase c, std::span<const Int> exponents);

/// Invariant factors n_1 | n_2 | ... (all > 1) of the abstract group.
std::vector<Int> invariant_factors(const LambdaGroup& g);

struct CanonicalGroupForm {
  std::string key;
  /// order[i] is the original coordinate placed at position i of the canonical form.
  std::vector<std::size_t> order;
};

/// Encoding invariant under permuting coordinates: equal keys iff the groups coincide after a
/// coordinate permutation. Minimizes over every isomorphism from the standard abelian group.
CanonicalGroupForm canonical_group_form(const LambdaGroup& g);

}  // namespace latpoly
