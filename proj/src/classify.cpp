#include "latpoly/classify.hpp"

#include "latpoly/simplex_group.hpp"

namespace latpoly {

namespace {

std::vector<std::string> simplex_families(Int volume) {
  if (volume == 2) return {"Δ2"};
  if (volume == 3) return {"Δ3"};
  return {"Δ41", "Δ42", "Δ43"};
}

std::optional<EquivalenceWitness> match_simplex(const LatticePolytope& core, Int volume, CatalogEntry& entry) {
  const DeltaVector delta = delta_from_group(lambda_group_of_simplex(core.vertices()));
  const std::vector<Int> exps = delta.exponents();
  for (const auto& family : simplex_families(volume)) {
    try {
      if (simplex_dimension(family, exps) != core.dim()) continue;
    } catch (const InvalidArgument&) {
      continue;
    }
    auto w = simplex_witness(core, make_simplex(family, exps));
    if (w) {
      entry.family = family;
      entry.params = exps;
      return w;
    }
  }
  return std::nullopt;
}

std::optional<EquivalenceWitness> match_non_simplex(const LatticePolytope& core, std::size_t budget,
                                                    CatalogEntry& entry) {
  const DeltaVector delta = delta_from_counts(core);
  const bool spans = spans_lattice(core);
  const Int half = half_sum_invariant(core);
  std::vector<CatalogEntry> candidates;
  for (const auto& id : table2_ids()) candidates.push_back({id, {}, 0});
  const auto exps = delta.exponents();
  if (exps.size() == 3 && exps[0] == 1 && exps[1] >= 2)
    for (const auto& id : table3_ids()) candidates.push_back({id, {exps[1]}, 0});
  bool indeterminate = false;
  for (const auto& c : candidates) {
    LatticePolytope target;
    try {
      target = make_entry(c);
    } catch (const InvalidArgument&) {
      continue;
    }
    if (target.dim() != core.dim() || target.num_vertices() != core.num_vertices()) continue;
    if (claimed_delta(c) != delta) continue;
    if (spans_lattice(target) != spans || half_sum_invariant(target) != half) continue;
    auto res = are_equivalent(core, target, budget);
    if (res.status == EquivalenceStatus::Indeterminate) indeterminate = true;
    if (res.witness) {
      entry.family = c.family;
      entry.params = c.params;
      return res.witness;
    }
  }
  if (indeterminate) throw BudgetExceeded("classify: equivalence search budget exceeded");
  return std::nullopt;
}

}  // namespace

ClassificationResult classify(const LatticePolytope& p, std::size_t budget) {
  ClassificationResult out;
  const Normalization norm = affine_lattice_normalize(p);
  if (!norm.identity) out.witness.push_back({WitnessStep::Kind::Restrict, norm.frame, {}});
  out.volume = normalized_volume(norm.polytope);
  if (out.volume > 4) return out;
  out.in_scope = true;

  PyramidStrip strip = strip_pyramids(norm.polytope);
  out.witness.insert(out.witness.end(), strip.steps.begin(), strip.steps.end());
  out.entry.pyramids = strip.apexes;
  const LatticePolytope& core = strip.core;

  std::optional<EquivalenceWitness> w;
  if (core.dim() == 0) {
    out.entry.family = "Point";
  } else if (is_simplex(core)) {
    w = match_simplex(core, out.volume, out.entry);
  } else {
    w = match_non_simplex(core, budget, out.entry);
  }
  if (core.dim() != 0 && !w)
    throw Error("classify: no catalog match for a polytope of volume " + std::to_string(out.volume) + ": " +
                core.to_string());
  if (w) out.witness.push_back({WitnessStep::Kind::Map, {}, w->map});

  CatalogEntry bare = out.entry;
  bare.pyramids = 0;
  if (!(apply_witness(out.witness, p) == make_entry(bare))) throw Error("classify: witness does not replay");
  return out;
}

}  // namespace latpoly
