#include "latpoly/report.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <random>
#include <sstream>

#include "latpoly/catalog.hpp"
#include "latpoly/classify.hpp"
#include "latpoly/ehrhart.hpp"
#include "latpoly/enumeration.hpp"
#include "latpoly/parallel.hpp"
#include "latpoly/random.hpp"
#include "latpoly/simplex_group.hpp"

namespace latpoly {

namespace {

using Clock = std::chrono::steady_clock;

Check make_check(std::string id, bool ok, std::string details, Json witness = nullptr) {
  return {std::move(id), ok ? CheckStatus::Pass : CheckStatus::Fail, std::move(details), std::move(witness)};
}

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

Rng seeded(std::uint64_t seed, std::size_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
  return Rng(seq);
}

std::vector<CatalogEntry> catalog_entries(std::size_t dmax, Int kmax) {
  std::vector<CatalogEntry> out = table1_instances(dmax);
  for (const auto& id : table2_ids()) out.push_back({id, {}, 0});
  for (Int k = 2; k <= kmax; ++k)
    for (const auto& id : table3_ids()) out.push_back({id, {k}, 0});
  return out;
}

/// Runs one check per item on the worker pool, keeping the item order.
std::vector<Check> run_checks(std::size_t n, const std::function<Check(std::size_t)>& fn, std::size_t workers) {
  std::vector<Check> out(n);
  parallel_for(
      n,
      [&](std::size_t i) {
        try {
          out[i] = fn(i);
        } catch (const std::exception& e) {
          out[i] = {"item " + std::to_string(i), CheckStatus::Fail, std::string("error: ") + e.what(), nullptr};
        }
      },
      workers);
  return out;
}

void append(std::vector<Check>& to, std::vector<Check> from) {
  to.insert(to.end(), std::make_move_iterator(from.begin()), std::make_move_iterator(from.end()));
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

Json string_array(const std::vector<std::string>& v) {
  Json out = Json::array();
  for (const auto& s : v) out.push_back(s);
  return out;
}

/// L_P(n) against inclusion-exclusion over the triangulation {conv(V \ {i}) : i in I} of a circuit, where I
/// is the smaller side of the affine dependence.
bool circuit_split_check(const LatticePolytope& p, std::string& how) {
  const std::size_t d = p.dim();
  IntMatrix a(d + 1, d + 2);
  for (std::size_t i = 0; i < d + 2; ++i) {
    for (std::size_t c = 0; c < d; ++c) a(c, i) = p.vertices()[i][c];
    a(d, i) = 1;
  }
  const IntMatrix ker = integer_kernel(a);
  if (ker.rows() != 1) throw Error("vertex set is not a circuit");
  std::vector<std::size_t> pos, neg;
  for (std::size_t i = 0; i < d + 2; ++i) {
    if (ker(0, i) > 0) pos.push_back(i);
    if (ker(0, i) < 0) neg.push_back(i);
  }
  const auto& side = pos.size() <= neg.size() ? pos : neg;
  how = "no two-cell triangulation (circuit sides " + std::to_string(pos.size()) + "+" + std::to_string(neg.size()) +
        "); inclusion-exclusion over the " + std::to_string(side.size()) + "-cell triangulation";
  std::vector<std::pair<LatticePolytope, Int>> terms;
  for (std::size_t mask = 1; mask < (std::size_t{1} << side.size()); ++mask) {
    std::vector<IntVector> pts;
    for (std::size_t i = 0; i < d + 2; ++i) {
      bool drop = false;
      for (std::size_t b = 0; b < side.size(); ++b)
        if ((mask >> b & 1U) && side[b] == i) drop = true;
      if (!drop) pts.push_back(p.vertices()[i]);
    }
    terms.emplace_back(LatticePolytope(d, std::move(pts)), __builtin_popcountll(mask) % 2 == 1 ? 1 : -1);
  }
  for (Int n = 0; n <= static_cast<Int>(d) + 2; ++n) {
    Int rhs = 0;
    for (const auto& [cell, sign] : terms) rhs = checked_add(rhs, checked_mul(sign, count_lattice_points(cell, n)));
    if (rhs != count_lattice_points(p, n)) return false;
  }
  return true;
}

}  // namespace

const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Indeterminate: return "indeterminate";
  }
  return "?";
}

std::size_t Report::count(CheckStatus s) const {
  return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [&](const Check& c) { return c.status == s; }));
}

Json Report::to_json() const {
  Json j;
  j["suite"] = suite;
  j["status"] = passed() ? "pass" : "fail";
  j["seconds"] = seconds;
  j["counts"] = {{"pass", count(CheckStatus::Pass)},
                 {"fail", count(CheckStatus::Fail)},
                 {"indeterminate", count(CheckStatus::Indeterminate)}};
  j["notes"] = string_array(notes);
  Json checks_json = Json::array();
  for (const auto& c : checks) {
    Json cj{{"id", c.id}, {"status", to_string(c.status)}, {"details", c.details}};
    if (!c.witness.is_null()) cj["witness"] = c.witness;
    checks_json.push_back(std::move(cj));
  }
  j["checks"] = std::move(checks_json);
  return j;
}

std::string Report::to_text(bool verbose) const {
  std::ostringstream os;
  for (const auto& n : notes) os << "  " << n << "\n";
  for (const auto& c : checks)
    if (verbose || c.status != CheckStatus::Pass) os << "  [" << to_string(c.status) << "] " << c.id << ": " << c.details << "\n";
  os << suite << ": " << (passed() ? "PASS" : "FAIL") << " (" << count(CheckStatus::Pass) << " pass, "
     << count(CheckStatus::Fail) << " fail, " << count(CheckStatus::Indeterminate) << " indeterminate) in ";
  os.precision(2);
  os << std::fixed << seconds << " s\n";
  return os.str();
}

Report verify_table1(const SuiteOptions& opts) {
  const auto t0 = Clock::now();
  const std::size_t dmax = opts.dmax ? opts.dmax : 9;
  const auto entries = table1_instances(dmax);
  Report r{"table1", {}, {}, 0};
  r.checks = run_checks(
      entries.size(),
      [&](std::size_t i) {
        const auto& e = entries[i];
        const auto p = make_entry(e);
        const auto claimed = claimed_delta(e);
        const auto counted = delta_from_counts(p);
        const auto group = lambda_group_of_simplex(p.vertices());
        const auto via_group = delta_from_group(group);
        const Int vol = normalized_volume(p);
        const Int expected_vol = static_cast<Int>(e.params.size()) + 1;
        const bool group_pyramid = is_pyramid_simplex(group);
        const std::size_t apexes = strip_pyramids(p).apexes;
        std::vector<std::string> bad;
        if (counted != claimed) bad.push_back("counted δ " + counted.polynomial() + " != claimed " + claimed.polynomial());
        if (via_group != claimed) bad.push_back("group δ " + via_group.polynomial() + " != claimed");
        if (vol != expected_vol) bad.push_back("Vol " + std::to_string(vol) + " != " + std::to_string(expected_vol));
        if (group_pyramid) bad.push_back("group test finds a pyramid");
        if (apexes) bad.push_back("geometric test finds " + std::to_string(apexes) + " apexes");
        std::string details = "d=" + std::to_string(p.dim()) + " δ=" + counted.polynomial() + " Vol=" + std::to_string(vol);
        if (!bad.empty()) details += "; " + join(bad, "; ");
        return make_check("table1/" + e.to_string(), bad.empty(), details, bad.empty() ? Json() : polytope_to_json(p));
      },
      opts.workers);
  std::map<std::size_t, std::size_t> per_d;
  for (const auto& e : entries) ++per_d[make_entry(e).dim()];
  std::vector<std::string> parts;
  for (const auto& [d, n] : per_d) parts.push_back("d=" + std::to_string(d) + ":" + std::to_string(n));
  r.notes.push_back(std::to_string(entries.size()) + " Table-1 instances with d <= " + std::to_string(dmax) + " (" +
                    join(parts, " ") + ")");
  r.seconds = seconds_since(t0);
  return r;
}

Report verify_table2(const SuiteOptions& opts) {
  const auto t0 = Clock::now();
  const auto& ids = table2_ids();
  Report r{"table2", {}, {}, 0};
  r.checks = run_checks(
      ids.size(),
      [&](std::size_t i) {
        const auto p = make_table2(ids[i]);
        const auto claimed = claimed_delta({ids[i], {}, 0});
        const auto counted = delta_from_counts(p);
        const bool spans = spans_lattice(p);
        const std::size_t apexes = strip_pyramids(p).apexes;
        const Int vol = normalized_volume(p);
        std::vector<std::string> bad;
        if (counted != claimed) bad.push_back("counted δ " + counted.polynomial() + " != claimed " + claimed.polynomial());
        if (vol != claimed.volume()) bad.push_back("Vol " + std::to_string(vol));
        if (!spans) bad.push_back("does not span the lattice");
        if (apexes) bad.push_back(std::to_string(apexes) + " pyramid layers");
        if (!is_full_dimensional(p)) bad.push_back("not full-dimensional");
        std::string details = "d=" + std::to_string(p.dim()) + " δ=" + counted.polynomial() + " spans=" + (spans ? "true" : "false") +
                              " pyramids=" + std::to_string(apexes);
        if (!bad.empty()) details += "; " + join(bad, "; ");
        return make_check("table2/" + ids[i], bad.empty(), details, bad.empty() ? Json() : polytope_to_json(p));
      },
      opts.workers);
  r.checks.push_back(make_check("table2/count", ids.size() == 24, std::to_string(ids.size()) + " polytopes"));

  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  std::vector<LatticePolytope> polys;
  for (const auto& id : ids) polys.push_back(make_table2(id));
  for (std::size_t a = 0; a < ids.size(); ++a)
    for (std::size_t b = a + 1; b < ids.size(); ++b)
      if (polys[a].dim() == polys[b].dim()) pairs.emplace_back(a, b);
  std::vector<EquivalenceStatus> verdicts(pairs.size());
  parallel_for(
      pairs.size(),
      [&](std::size_t i) { verdicts[i] = are_equivalent(polys[pairs[i].first], polys[pairs[i].second], opts.budget).status; },
      opts.workers);
  Check distinct{"table2/pairwise-inequivalent", CheckStatus::Pass, "", nullptr};
  std::vector<std::string> clashes, unknown;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const std::string label = ids[pairs[i].first] + "~" + ids[pairs[i].second];
    if (verdicts[i] == EquivalenceStatus::Equivalent) clashes.push_back(label);
    if (verdicts[i] == EquivalenceStatus::Indeterminate) unknown.push_back(label);
  }
  distinct.details = std::to_string(pairs.size()) + " same-dimension pairs compared";
  if (!unknown.empty()) {
    distinct.status = CheckStatus::Indeterminate;
    distinct.details += "; search budget exhausted for " + join(unknown, ", ");
  }
  if (!clashes.empty()) {
    distinct.status = CheckStatus::Fail;
    distinct.details += "; equivalent: " + join(clashes, ", ");
  }
  r.checks.push_back(std::move(distinct));

  std::map<std::string, std::vector<std::string>> grouping;
  for (const auto& id : ids) grouping[claimed_delta({id, {}, 0}).polynomial()].push_back(id);
  r.notes.push_back(std::to_string(grouping.size()) + " distinct δ-polynomials among the 24 spanning polytopes");
  r.seconds = seconds_since(t0);
  return r;
}

Report verify_table3(const SuiteOptions& opts) {
  const auto t0 = Clock::now();
  const Int kmax = opts.kmax ? opts.kmax : 4;
  const auto& ids = table3_ids();
  std::vector<std::pair<std::string, Int>> items;
  for (Int k = 2; k <= kmax; ++k)
    for (const auto& id : ids) items.emplace_back(id, k);
  Report r{"table3", {}, {}, 0};
  r.checks = run_checks(
      items.size(),
      [&](std::size_t i) {
        const auto& [id, k] = items[i];
        const auto p = make_table3(id, k);
        const bool is_b = id == "B4";
        const std::vector<Int> exps = is_b ? std::vector<Int>{1, k, k} : std::vector<Int>{1, k, k + 1};
        const auto expected = delta_from_exponents(exps, p.dim());
        const auto counted = delta_from_counts(p);
        const bool spans = spans_lattice(p);
        const std::size_t apexes = strip_pyramids(p).apexes;
        const Int half = half_sum_invariant(p);
        std::vector<std::string> bad;
        if (counted != expected) bad.push_back("δ " + counted.polynomial() + " != " + expected.polynomial());
        if (claimed_delta({id, {k}, 0}) != expected) bad.push_back("catalog claim differs");
        if (spans) bad.push_back("spans the lattice");
        if (apexes) bad.push_back(std::to_string(apexes) + " pyramid layers");
        if (!is_b) {
          const Int want = 2 * k + 2 * static_cast<Int>(std::find(ids.begin(), ids.end(), id) - ids.begin());
          if (half != want) bad.push_back("half-sum " + std::to_string(half) + " != " + std::to_string(want));
        }
        std::string details = "d=" + std::to_string(p.dim()) + " δ=" + counted.polynomial() +
                              " spans=" + (spans ? "true" : "false") + " pyramids=" + std::to_string(apexes) +
                              " half-sum=" + std::to_string(half);
        if (!bad.empty()) details += "; " + join(bad, "; ");
        return make_check("table3/" + id + " k=" + std::to_string(k), bad.empty(), details,
                          bad.empty() ? Json() : polytope_to_json(p));
      },
      opts.workers);
  r.seconds = seconds_since(t0);
  return r;
}

Report verify_matrices(const SuiteOptions& opts) {
  const auto t0 = Clock::now();
  const Int kmax = opts.kmax ? opts.kmax : 5;
  const auto& ids = claimed_identities();
  std::vector<std::pair<std::size_t, Int>> items;
  for (std::size_t i = 0; i < ids.size(); ++i)
    for (Int k = 2; k <= kmax; ++k) items.emplace_back(i, k);
  std::vector<IdentityCheck> results(items.size());
  parallel_for(
      items.size(), [&](std::size_t i) { results[i] = verify_claimed_identity(ids[items[i].first], items[i].second); },
      opts.workers);
  auto result_of = [&](const std::string& name, Int k) -> const IdentityCheck* {
    for (std::size_t i = 0; i < items.size(); ++i)
      if (ids[items[i].first].name == name && items[i].second == k) return &results[i];
    return nullptr;
  };
  Report r{"matrices", {}, {}, 0};
  for (std::size_t i = 0; i < items.size(); ++i) {
    const auto& c = ids[items[i].first];
    const Int k = items[i].second;
    const auto& res = results[i];
    Check chk{c.name + " k=" + std::to_string(k), CheckStatus::Fail, "", nullptr};
    std::string claim = std::string(1, c.group) + std::to_string(c.target) + " = f(" + std::string(1, c.group) +
                        std::to_string(c.source) + ") + t";
    chk.details = claim + ", det=" + std::to_string(res.det) + ", " + to_string(res.status);
    if (res.status == IdentityStatus::Verified) {
      chk.status = CheckStatus::Pass;
    } else if (res.status == IdentityStatus::MapFail) {
      chk.details += std::string(", are_equivalent: ") + to_string(res.fallback);
      if (res.fallback == EquivalenceStatus::Equivalent) {
        chk.status = CheckStatus::Pass;
        chk.details += " (displayed map wrong, equivalence confirmed with another witness)";
      } else if (res.fallback == EquivalenceStatus::Indeterminate) {
        chk.status = CheckStatus::Indeterminate;
      } else if (!c.hypothesis) {
        const auto* alt = result_of(c.name + "*", k);
        if (alt && alt->status == IdentityStatus::Verified) {
          chk.status = CheckStatus::Pass;
          chk.details += "; the source polytope as displayed is not equivalent to the target, the corrected reading " +
                         c.name + "* verifies";
        }
      }
    }
    if (!c.note.empty()) chk.details += "; " + c.note;
    r.checks.push_back(std::move(chk));
  }
  for (const auto& c : ids) {
    if (c.note.empty()) continue;
    r.notes.push_back(c.name + ": " + c.note);
  }
  for (std::size_t i = 0; i < items.size(); ++i)
    if (results[i].status != IdentityStatus::Verified && items[i].second == 2)
      r.notes.push_back("discrepancy: " + ids[items[i].first].name + " displayed identity does not hold exactly");
  r.seconds = seconds_since(t0);
  return r;
}

Report verify_oracle(const SuiteOptions& opts) {
  const auto t0 = Clock::now();
  const std::size_t samples = opts.samples ? opts.samples : 500;
  const std::size_t dmax = opts.dmax ? opts.dmax : 5;
  struct Sample {
    std::size_t d = 0;
    Int vol = 0;
    bool ok = false;
    std::string problem;
    Json witness;
  };
  std::vector<Sample> out(samples);
  parallel_for(
      samples,
      [&](std::size_t i) {
        Rng rng = seeded(opts.seed, i);
        Sample& s = out[i];
        s.d = 1 + i % dmax;
        std::vector<IntVector> verts;
        do {
          verts = random_simplex(rng, s.d, -3, 3);
          s.vol = simplex_normalized_volume(verts);
        } while (s.vol > 12);
        const LatticePolytope p(s.d, verts);
        const auto group = lambda_group_of_simplex(verts);
        const auto via_group = delta_from_group(group);
        const auto via_counts = delta_from_counts(p);
        s.ok = via_group == via_counts && static_cast<Int>(group.order()) == s.vol;
        if (!s.ok) {
          s.problem = "group δ " + via_group.polynomial() + " counted δ " + via_counts.polynomial() +
                      " |Λ|=" + std::to_string(group.order()) + " Vol=" + std::to_string(s.vol);
          s.witness = polytope_to_json(p);
        }
      },
      opts.workers);
  Report r{"oracle", {}, {}, 0};
  for (std::size_t d = 1; d <= dmax; ++d) {
    std::size_t n = 0, bad = 0;
    Int vmin = 0, vmax = 0;
    Json witness;
    std::string problem;
    for (const auto& s : out) {
      if (s.d != d) continue;
      vmin = n ? std::min(vmin, s.vol) : s.vol;
      vmax = n ? std::max(vmax, s.vol) : s.vol;
      ++n;
      if (!s.ok && bad++ == 0) {
        witness = s.witness;
        problem = s.problem;
      }
    }
    std::string details = std::to_string(n) + " simplices, Vol " + std::to_string(vmin) + ".." + std::to_string(vmax);
    if (bad) details += ", " + std::to_string(bad) + " disagree; first: " + problem;
    r.checks.push_back(make_check("oracle/d=" + std::to_string(d), bad == 0, details, witness));
  }
  r.notes.push_back(std::to_string(samples) + " seeded simplices, coordinates in [-3,3], Vol <= 12, seed " +
                    std::to_string(opts.seed));
  r.seconds = seconds_since(t0);
  return r;
}

Report verify_enumeration(const SuiteOptions& opts) {
  const auto t0 = Clock::now();
  const std::size_t dmax = opts.dmax ? opts.dmax : 5;
  const auto rep = cross_validate(1, dmax, 4, opts.workers);
  Report r{"enumeration", {}, {}, 0};
  for (const auto& row : rep.rows) {
    const bool ok = row.problems.empty() && row.hnf_candidates == row.hnf_expected && row.reroot_mismatches == 0 &&
                    row.hnf_classes == row.group_classes && row.hnf_classes == row.family_classes &&
                    row.hnf_classes == row.table1_instances;
    std::string details = "HNF candidates " + std::to_string(row.hnf_candidates) + "/" + std::to_string(row.hnf_expected) +
                          ", classes: HNF sweep " + std::to_string(row.hnf_classes) + ", group sweep " +
                          std::to_string(row.group_classes) + ", named families " + std::to_string(row.family_classes) +
                          ", Table 1 " + std::to_string(row.table1_instances);
    if (!row.problems.empty()) details += "; " + join(row.problems, "; ");
    r.notes.push_back("d=" + std::to_string(row.d) + ": " + details);
    r.checks.push_back(make_check("enumeration/d=" + std::to_string(row.d), ok, details,
                                  row.problems.empty() ? Json() : string_array(row.problems)));
  }
  r.seconds = seconds_since(t0);
  return r;
}

Report verify_feasibility(const SuiteOptions& opts) {
  const auto t0 = Clock::now();
  const std::size_t dmax = opts.dmax ? opts.dmax : 6;
  const auto rep = cross_validate(1, dmax, 4, opts.workers);
  Report r{"feasibility", {}, {}, 0};
  r.checks.push_back(make_check(
      "feasibility/derived", rep.feasibility_mismatches.empty() && rep.feasibility_checked > 0,
      std::to_string(rep.feasibility_checked) + " (V, exponents, d) cases with V <= 4, d <= " + std::to_string(dmax) +
          ", " + std::to_string(rep.feasibility_mismatches.size()) + " mismatches",
      rep.feasibility_mismatches.empty() ? Json() : string_array(rep.feasibility_mismatches)));

  const std::vector<Int> exps{1, 2};
  const auto p = make_simplex("Δ3", exps);
  const auto counted = delta_from_counts(p);
  const bool realized = p.dim() == 2 && counted == delta_from_exponents(exps, 2) && strip_pyramids(p).apexes == 0;
  const bool printed = feasible_delta(3, exps, 2, true);
  const bool derived = feasible_delta(3, exps, 2, false);
  const bool listed = std::find(rep.printed_inconsistencies.begin(), rep.printed_inconsistencies.end(),
                                "V=3 (1,2) d=2 realized but printed condition false") != rep.printed_inconsistencies.end();
  const bool demonstrated = realized && !printed && derived && (listed || dmax < 2);
  std::string details = "printed V=3 condition is inconsistent: Δ3 (i1=1,i2=2) is a non-pyramid simplex of dimension " +
                        std::to_string(p.dim()) + " with δ=" + counted.polynomial() + ", yet the printed condition " +
                        (printed ? "accepts" : "rejects") + " (1,2) at d=2; " +
                        std::to_string(rep.printed_inconsistencies.size()) + " printed-form inconsistencies for d <= " +
                        std::to_string(dmax);
  Json witness{{"polytope", polytope_to_json(p)}, {"inconsistencies", string_array(rep.printed_inconsistencies)}};
  r.checks.push_back(make_check("feasibility/printed-v3-inconsistent", demonstrated, details, witness));
  r.notes.push_back(details);
  r.seconds = seconds_since(t0);
  return r;
}

Report verify_lemmas(const SuiteOptions& opts) {
  const auto t0 = Clock::now();
  const std::size_t dmax = opts.dmax ? opts.dmax : 9;
  const Int kmax = opts.kmax ? opts.kmax : 4;
  const std::size_t pairs = opts.samples ? opts.samples : 200;
  constexpr int kMaps = 100;
  const auto entries = catalog_entries(dmax, kmax);
  Report r{"lemmas", {}, {}, 0};

  std::vector<std::size_t> circuits;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const auto p = make_entry(entries[i]);
    if (p.num_vertices() == p.dim() + 2) circuits.push_back(i);
  }
  std::size_t degenerate = 0;
  auto split = run_checks(
      circuits.size(),
      [&](std::size_t i) {
        const auto& e = entries[circuits[i]];
        const auto p = make_entry(e);
        const auto cells = radon_triangulate(p);
        std::string how = "two-cell split, n = 0.." + std::to_string(p.dim() + 2);
        bool ok = false;
        if (cells) {
          ok = triangulation_split_check(p, cells->first, cells->second, cells->common);
        } else {
          ok = circuit_split_check(p, how);
        }
        return make_check("split/" + e.to_string(), ok, how, ok ? Json() : polytope_to_json(p));
      },
      opts.workers);
  for (const auto& c : split)
    if (c.details.rfind("no two-cell", 0) == 0) ++degenerate;
  append(r.checks, std::move(split));
  r.notes.push_back(std::to_string(circuits.size()) + " catalog polytopes with d+2 vertices, " + std::to_string(degenerate) +
                    " without a two-cell triangulation (checked by inclusion-exclusion)");

  struct Pair {
    bool ok = false;
    std::vector<DeltaVector> deltas;
    Json witness;
  };
  std::vector<Pair> mono(pairs);
  parallel_for(
      pairs,
      [&](std::size_t i) {
        Rng rng = seeded(opts.seed, 1'000'000 + i);
        const std::size_t d = 1 + i % 4;
        LatticePolytope p;
        do {
          std::vector<IntVector> pts(d + 1 + static_cast<std::size_t>(random_int(rng, 0, 2)), IntVector(d));
          for (auto& v : pts)
            for (auto& x : v) x = random_int(rng, -2, 2);
          p = LatticePolytope(d, std::move(pts));
        } while (!is_full_dimensional(p));
        auto pts = lattice_points(p);
        std::shuffle(pts.begin(), pts.end(), rng);
        pts.resize(static_cast<std::size_t>(random_int(rng, 1, static_cast<Int>(std::min(pts.size(), d + 2)))));
        const LatticePolytope q(d, std::move(pts));
        mono[i].ok = monotonicity_check(p, q);
        mono[i].deltas = {delta_from_counts(p), delta_from_counts(q)};
        if (!mono[i].ok) mono[i].witness = {{"P", polytope_to_json(p)}, {"Q", polytope_to_json(q)}};
      },
      opts.workers);
  std::size_t mono_bad = 0;
  Json mono_witness;
  for (const auto& m : mono)
    if (!m.ok && mono_bad++ == 0) mono_witness = m.witness;
  r.checks.push_back(make_check("monotonicity", mono_bad == 0,
                                std::to_string(pairs) + " seeded pairs Q ⊆ P, " + std::to_string(mono_bad) + " violations",
                                mono_witness));

  std::vector<DeltaVector> catalog_deltas(entries.size());
  auto invariance = run_checks(
      entries.size(),
      [&](std::size_t i) {
        const auto& e = entries[i];
        const auto p = make_entry(e);
        const auto base = delta_from_counts(p);
        catalog_deltas[i] = base;
        Rng rng = seeded(opts.seed, 2'000'000 + i);
        for (int m = 0; m < kMaps; ++m) {
          const auto map = random_unimodular_map(rng, p.dim());
          const auto image = apply_map(map, p);
          const auto d = delta_from_counts(image);
          if (d != base)
            return make_check("invariance/" + e.to_string(), false,
                              "map " + std::to_string(m) + " gives " + d.polynomial() + " instead of " + base.polynomial(),
                              map_to_json(map));
        }
        return make_check("invariance/" + e.to_string(), true,
                          std::to_string(kMaps) + " maps, δ=" + base.polynomial());
      },
      opts.workers);
  append(r.checks, std::move(invariance));

  std::size_t tested = 0;
  std::vector<std::string> sh_bad;
  auto test_delta = [&](const DeltaVector& d, const std::string& label) {
    ++tested;
    if (!stanley_inequalities(d)) sh_bad.push_back(label + " Stanley " + d.polynomial());
    if (!hibi_inequalities(d)) sh_bad.push_back(label + " Hibi " + d.polynomial());
  };
  for (std::size_t i = 0; i < entries.size(); ++i)
    if (!catalog_deltas[i].entries.empty()) test_delta(catalog_deltas[i], entries[i].to_string());
  for (std::size_t i = 0; i < mono.size(); ++i)
    for (const auto& d : mono[i].deltas) test_delta(d, "pair " + std::to_string(i));
  r.checks.push_back(make_check("stanley-hibi", sh_bad.empty(),
                                std::to_string(tested) + " δ-vectors (catalog and monotonicity pairs), " +
                                    std::to_string(sh_bad.size()) + " violations",
                                sh_bad.empty() ? Json() : string_array(sh_bad)));
  r.notes.push_back(std::to_string(entries.size()) + " catalog entries (d <= " + std::to_string(dmax) + ", k <= " +
                    std::to_string(kmax) + "), " + std::to_string(kMaps) + " unimodular maps each");
  r.seconds = seconds_since(t0);
  return r;
}

Report verify_roundtrip(const SuiteOptions& opts) {
  const auto t0 = Clock::now();
  const std::size_t dmax = opts.dmax ? opts.dmax : 9;
  const Int kmax = opts.kmax ? opts.kmax : 4;
  const auto entries = catalog_entries(dmax, kmax);
  Report r{"roundtrip", {}, {}, 0};
  r.checks = run_checks(
      entries.size(),
      [&](std::size_t i) {
        Rng rng = seeded(opts.seed, 3'000'000 + i);
        CatalogEntry want = entries[i];
        want.pyramids = static_cast<std::size_t>(random_int(rng, 0, 3));
        const auto built = make_entry(want);
        const auto q = apply_map(random_unimodular_map(rng, built.dim()), built);
        const std::string id = "roundtrip/" + want.to_string() + " +" + std::to_string(want.pyramids);
        ClassificationResult res;
        try {
          res = classify(q, opts.budget);
        } catch (const BudgetExceeded& e) {
          return Check{id, CheckStatus::Indeterminate, e.what(), polytope_to_json(q)};
        } catch (const Error& e) {
          return make_check(id, false, std::string("classify failed: ") + e.what(), polytope_to_json(q));
        }
        CatalogEntry core = want;
        core.pyramids = 0;
        const bool same = res.in_scope && res.entry == want;
        const bool replays = apply_witness(res.witness, q) == make_entry(core);
        std::string details = "d=" + std::to_string(q.dim()) + ", classified as " + res.entry.to_string() +
                              ", pyramids " + std::to_string(res.entry.pyramids) + ", witness " +
                              std::to_string(res.witness.size()) + " steps" + (replays ? " replays" : " does not replay");
        return make_check(id, same && replays, details, same && replays ? Json() : polytope_to_json(q));
      },
      opts.workers);
  r.notes.push_back(std::to_string(entries.size()) + " catalog entries (d <= " + std::to_string(dmax) + ", k <= " +
                    std::to_string(kmax) + "), 0-3 pyramid layers and a random unimodular map each");
  r.seconds = seconds_since(t0);
  return r;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"tables",      "table1",      "table2",  "table3",   "matrices",
                                              "oracle",      "enumeration", "feasibility", "lemmas", "roundtrip"};
  return names;
}

Report run_suite(const std::string& name, const SuiteOptions& opts) {
  if (name == "tables") {
    const auto t0 = Clock::now();
    Report r{"tables", {}, {}, 0};
    for (auto part : {verify_table1(opts), verify_table2(opts), verify_table3(opts)}) {
      append(r.checks, std::move(part.checks));
      r.notes.insert(r.notes.end(), part.notes.begin(), part.notes.end());
    }
    r.seconds = seconds_since(t0);
    return r;
  }
  if (name == "table1") return verify_table1(opts);
  if (name == "table2") return verify_table2(opts);
  if (name == "table3") return verify_table3(opts);
  if (name == "matrices") return verify_matrices(opts);
  if (name == "oracle") return verify_oracle(opts);
  if (name == "enumeration") return verify_enumeration(opts);
  if (name == "feasibility") return verify_feasibility(opts);
  if (name == "lemmas") return verify_lemmas(opts);
  if (name == "roundtrip") return verify_roundtrip(opts);
  throw InvalidArgument("unknown suite: " + name + " (expected one of " + join(suite_names(), ", ") + ")");
}

}  // namespace latpoly
