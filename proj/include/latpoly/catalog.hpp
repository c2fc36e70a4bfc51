#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "latpoly/ehrhart.hpp"
#include "latpoly/polytope.hpp"

namespace latpoly {

/// Named family plus parameters. `params` holds (i1[,i2,i3]) for simplices, (k) for A4_*/B4 and is
/// empty for the Table-2 polytopes and "Point".
struct CatalogEntry {
  std::string family;
  std::vector<Int> params;
  std::size_t pyramids = 0;

  std::string to_string() const;
  friend bool operator==(const CatalogEntry&, const CatalogEntry&) = default;
};

enum class FamilyKind { Point, Simplex, Spanning, NonSpanning };

/// Canonical id for a family name, accepting ASCII aliases ("Delta41", "D4_1", "d41" all give "Δ41").
std::optional<std::string> canonical_family_id(std::string_view name);
FamilyKind family_kind(const std::string& family);
std::vector<std::string> parameter_names(const std::string& family);
const std::vector<std::string>& table1_ids();
const std::vector<std::string>& table2_ids();
const std::vector<std::string>& table3_ids();

/// Ambient dimension of a Table-1 simplex; throws InvalidArgument on violated conditions.
std::size_t simplex_dimension(const std::string& family, std::span<const Int> exponents);
LatticePolytope make_simplex(const std::string& family, std::span<const Int> exponents);
LatticePolytope make_table2(const std::string& id);
LatticePolytope make_table3(const std::string& id, Int k);
/// Catalog polytope for an entry, with `pyramids` pyramid layers on top.
LatticePolytope make_entry(const CatalogEntry& entry);
/// The δ-vector the catalog claims for an entry (pyramids ignored, so in the core dimension).
DeltaVector claimed_delta(const CatalogEntry& entry);

/// Every feasible Table-1 parameter tuple with d <= dmax, in a fixed order.
std::vector<CatalogEntry> table1_instances(std::size_t dmax);

LatticePolytope pyramid(const LatticePolytope& p);

/// One step of a classification witness. Restrict maps the points lying in `frame` to their local
/// coordinates and drops the others; Map applies a unimodular map.
struct WitnessStep {
  enum class Kind { Restrict, Map };
  Kind kind = Kind::Map;
  AffineLattice frame;
  UnimodularMap map;
};

LatticePolytope apply_witness(std::span<const WitnessStep> steps, const LatticePolytope& p);

struct PyramidStrip {
  LatticePolytope core;
  std::size_t apexes = 0;
  std::vector<WitnessStep> steps;
};

PyramidStrip strip_pyramids(const LatticePolytope& p);

bool spans_lattice(const LatticePolytope& p);
Int half_sum_invariant(const LatticePolytope& p);

/// Feasibility of 1 + t^{i1} + ... for V = 2, 3, 4 at dimension d. `as_printed` selects the V=3 condition
/// exactly as stated (i2 <= 2 i1 and i2 <= floor((d+1)/2)) instead of the derived one.
bool feasible_delta(int volume, std::span<const Int> exponents, Int d, bool as_printed = false);

}  // namespace latpoly
