#pragma once

#include <string>
#include <vector>

#include "latpoly/catalog.hpp"
#include "latpoly/simplex_group.hpp"

namespace latpoly {

inline constexpr std::size_t kMaxEnumerationDim = 9;

struct SimplexClass {
  LatticePolytope simplex;  ///< conv(0, rows of a lower-triangular column-HNF matrix)
  std::string key;          ///< canonical group form
  DeltaVector delta;
  Int volume = 0;
};

struct SimplexSweepStats {
  std::size_t candidates = 0;
  std::size_t expected_candidates = 0;  ///< divisor-product formula
  std::size_t pyramids = 0;
  std::size_t reroot_mismatches = 0;
};

/// Number of d x d column-HNF matrices with determinant det.
std::size_t hnf_count(std::size_t d, Int det);

/// Column HNF: H = A U with U unimodular, H lower triangular, 0 <= H(i,j) < H(i,i) for j < i.
IntMatrix column_hnf(const IntMatrix& a);

/// Non-pyramid simplices of dimension d with 2 <= Vol <= vmax up to unimodular equivalence, sorted by key.
std::vector<SimplexClass> enumerate_simplices(std::size_t d, Int vmax, SimplexSweepStats* stats = nullptr,
                                              std::size_t workers = 0);

struct GroupClass {
  LambdaGroup group;
  std::string key;
  DeltaVector delta;
};

/// Order-2, order-3, cyclic order-4 and Klein-four subgroups of (Q/Z)^{d+1} with integral heights and no
/// zero coordinate, up to coordinate permutation and automorphism, sorted by key.
std::vector<GroupClass> enumerate_groups(std::size_t d, Int vmax);

/// The named families ⟨(1/2,...,1/2)⟩, Λ(a,b), Λ1(a,b,c), Λ2(a,b,c) at dimension d, deduplicated.
std::vector<GroupClass> family_groups(std::size_t d, Int vmax);

struct CrossValidationRow {
  std::size_t d = 0;
  std::size_t hnf_candidates = 0;
  std::size_t hnf_expected = 0;
  std::size_t hnf_classes = 0;
  std::size_t group_classes = 0;
  std::size_t family_classes = 0;
  std::size_t table1_instances = 0;
  std::size_t reroot_mismatches = 0;
  std::vector<std::string> problems;
};

struct CrossValidationReport {
  std::vector<CrossValidationRow> rows;
  /// (V, exponents, d) where the derived predicate and the enumeration disagree.
  std::vector<std::string> feasibility_mismatches;
  /// Same comparison for the printed V=3 condition.
  std::vector<std::string> printed_inconsistencies;
  std::size_t feasibility_checked = 0;

  bool ok() const;
};

/// Checks dimensions dmin..dmax; feasibility is compared over the same range.
CrossValidationReport cross_validate(std::size_t dmin, std::size_t dmax, Int vmax, std::size_t workers = 0);

}  // namespace latpoly
