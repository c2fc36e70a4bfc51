#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "latpoly/polytope.hpp"

namespace latpoly {

struct EquivalenceWitness {
  UnimodularMap map;
  /// correspondence[i] = index of the image of source vertex i among the target vertices.
  std::vector<std::size_t> correspondence;
};

enum class EquivalenceStatus { Equivalent, NotEquivalent, Indeterminate };
const char* to_string(EquivalenceStatus s);

struct EquivalenceResult {
  EquivalenceStatus status = EquivalenceStatus::NotEquivalent;
  std::optional<EquivalenceWitness> witness;
  std::string reason;
  std::size_t nodes = 0;
};

inline constexpr std::size_t kDefaultSearchBudget = 1'000'000;

/// Both polytopes must be full-dimensional in the same ambient dimension.
EquivalenceResult are_equivalent(const LatticePolytope& p, const LatticePolytope& q,
                                 std::size_t budget = kDefaultSearchBudget);

/// The affine map sending src[i] to dst[i] (src: d+1 affinely independent points of Z^d), if it is
/// integral and unimodular.
std::optional<UnimodularMap> map_from_correspondence(std::span<const IntVector> src, std::span<const IntVector> dst);

bool simplex_equivalent(const LatticePolytope& a, const LatticePolytope& b);
/// Witness between two full-dimensional simplices built from their canonical group forms.
std::optional<EquivalenceWitness> simplex_witness(const LatticePolytope& a, const LatticePolytope& b);

/// Candidate polytopes of the non-spanning case analysis: group 'A' (indices 1..10, d = 2k or 2k+1)
/// and group 'B' (indices 1..7, d = 2k). Index 8 in group 'B' is candidate 7 with v = sum_{j<=d-2} e_j + 2e_d.
LatticePolytope case_candidate(char group, int index, Int k);

/// target = f_U(source) + translation, with U and the translation instantiated at k.
struct ClaimedIdentity {
  std::string name;
  char group = 'A';
  int target = 0;
  int source = 0;
  std::function<IntMatrix(Int k)> matrix;
  std::function<IntVector(Int k)> translation;
  std::string note;
  /// Set when the entry tests a reading of the source that differs from the literal display.
  bool hypothesis = false;
};

const std::vector<ClaimedIdentity>& claimed_identities();

enum class IdentityStatus { Verified, DetFail, MapFail };
const char* to_string(IdentityStatus s);

struct IdentityCheck {
  IdentityStatus status = IdentityStatus::MapFail;
  Int det = 0;
  /// Only meaningful on map-fail: whether the claimed equivalence holds with some other witness.
  EquivalenceStatus fallback = EquivalenceStatus::NotEquivalent;
};

IdentityCheck verify_claimed_identity(const ClaimedIdentity& c, Int k);

/// The two-cell triangulation of a full-dimensional polytope with d+2 vertices read off its circuit.
struct RadonSplit {
  LatticePolytope first;
  LatticePolytope second;
  LatticePolytope common;
};

std::optional<RadonSplit> radon_triangulate(const LatticePolytope& p);

}  // namespace latpoly
