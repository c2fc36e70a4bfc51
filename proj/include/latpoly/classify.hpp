#pragma once

#include <vector>

#include "latpoly/catalog.hpp"
#include "latpoly/equivalence.hpp"

namespace latpoly {

struct ClassificationResult {
  bool in_scope = false;  ///< false when the normalized volume exceeds 4
  Int volume = 0;
  CatalogEntry entry;
  /// Normalization, pyramid stripping, then the final unimodular map onto make_entry(entry) without pyramids.
  std::vector<WitnessStep> witness;
};

/// Throws Error when a volume <= 4 polytope matches nothing in the catalog, BudgetExceeded when the
/// equivalence search gives up.
ClassificationResult classify(const LatticePolytope& p, std::size_t budget = kDefaultSearchBudget);

}  // namespace latpoly
