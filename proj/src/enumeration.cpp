#include "latpoly/enumeration.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "latpoly/classify.hpp"
#include "latpoly/parallel.hpp"

namespace latpoly {

namespace {

void check_bounds(std::size_t d, Int vmax) {
  if (d < 1 || d > kMaxEnumerationDim)
    throw InvalidArgument("enumeration dimension must lie in 1.." + std::to_string(kMaxEnumerationDim));
  if (vmax < 2 || vmax > 4) throw InvalidArgument("enumeration volume bound must lie in 2..4");
}

// Ordered tuples of positive integers with the given length and product.
void diagonals(std::size_t len, Int product, std::vector<Int>& cur, std::vector<std::vector<Int>>& out) {
  if (cur.size() == len) {
    if (product == 1) out.push_back(cur);
    return;
  }
  for (Int f = 1; f <= product; ++f) {
    if (product % f != 0) continue;
    cur.push_back(f);
    diagonals(len, product / f, cur, out);
    cur.pop_back();
  }
}

std::vector<IntMatrix> hnf_candidates(std::size_t d, Int det) {
  std::vector<std::vector<Int>> diags;
  std::vector<Int> cur;
  diagonals(d, det, cur, diags);
  std::vector<IntMatrix> out;
  for (const auto& diag : diags) {
    // Free entries: row i, columns j < i, each in [0, diag[i]).
    std::vector<std::pair<std::size_t, std::size_t>> slots;
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < i; ++j) slots.emplace_back(i, j);
    IntMatrix h(d, d);
    for (std::size_t i = 0; i < d; ++i) h(i, i) = diag[i];
    for (;;) {
      out.push_back(h);
      std::size_t s = 0;
      for (; s < slots.size(); ++s) {
        auto [i, j] = slots[s];
        if (++h(i, j) < diag[i]) break;
        h(i, j) = 0;
      }
      if (s == slots.size()) break;
    }
  }
  return out;
}

std::vector<IntVector> simplex_of(const IntMatrix& h) {
  std::vector<IntVector> verts{IntVector(h.cols(), 0)};
  for (std::size_t r = 0; r < h.rows(); ++r) verts.push_back(h.row(r));
  return verts;
}

std::string exps_label(int volume, const std::vector<Int>& e, std::size_t d) {
  std::ostringstream os;
  os << "V=" << volume << " (";
  for (std::size_t i = 0; i < e.size(); ++i) os << (i ? "," : "") << e[i];
  os << ") d=" << d;
  return os.str();
}

void ascending_tuples(std::size_t len, Int lo, Int hi, std::vector<Int>& cur, std::vector<std::vector<Int>>& out) {
  if (cur.size() == len) {
    out.push_back(cur);
    return;
  }
  for (Int x = cur.empty() ? lo : cur.back(); x <= hi; ++x) {
    cur.push_back(x);
    ascending_tuples(len, lo, hi, cur, out);
    cur.pop_back();
  }
}

void add_group(std::map<std::string, GroupClass>& classes, const LambdaGroup& g) {
  if (pyramid_coordinate(g)) return;
  auto form = canonical_group_form(g);
  if (classes.count(form.key)) return;
  classes.emplace(form.key, GroupClass{g, form.key, delta_from_group(g)});
}

std::vector<GroupClass> values_of(std::map<std::string, GroupClass>& m) {
  std::vector<GroupClass> out;
  for (auto& [k, v] : m) out.push_back(std::move(v));
  return out;
}

}  // namespace

std::size_t hnf_count(std::size_t d, Int det) {
  std::vector<std::vector<Int>> diags;
  std::vector<Int> cur;
  diagonals(d, det, cur, diags);
  std::size_t total = 0;
  for (const auto& diag : diags) {
    std::size_t term = 1;
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t k = 0; k < i; ++k) term *= static_cast<std::size_t>(diag[i]);
    total += term;
  }
  return total;
}

IntMatrix column_hnf(const IntMatrix& a) { return hermite_normal_form(a.transposed()).h.transposed(); }

std::vector<SimplexClass> enumerate_simplices(std::size_t d, Int vmax, SimplexSweepStats* stats, std::size_t workers) {
  check_bounds(d, vmax);
  std::vector<IntMatrix> cands;
  std::size_t expected = 0;
  for (Int det = 2; det <= vmax; ++det) {
    auto part = hnf_candidates(d, det);
    cands.insert(cands.end(), part.begin(), part.end());
    expected += hnf_count(d, det);
  }
  struct Result {
    std::string key;
    bool pyramid = false;
    bool reroot_ok = true;
  };
  std::vector<Result> results(cands.size());
  parallel_for(
      cands.size(),
      [&](std::size_t i) {
        const auto verts = simplex_of(cands[i]);
        const LambdaGroup g = lambda_group_of_simplex(verts);
        Result r;
        r.key = canonical_group_form(g).key;
        r.pyramid = is_pyramid_simplex(g);
        for (std::size_t root = 1; root <= d && r.reroot_ok; ++root) {
          IntMatrix a(d, d);
          std::size_t row = 0;
          for (std::size_t v = 0; v <= d; ++v) {
            if (v == root) continue;
            for (std::size_t c = 0; c < d; ++c) a(row, c) = verts[v][c] - verts[root][c];
            ++row;
          }
          const IntMatrix h = column_hnf(a);
          r.reroot_ok = canonical_group_form(lambda_group_of_simplex(simplex_of(h))).key == r.key;
        }
        results[i] = std::move(r);
      },
      workers);

  std::map<std::string, std::size_t> first;
  SimplexSweepStats local;
  local.candidates = cands.size();
  local.expected_candidates = expected;
  for (std::size_t i = 0; i < cands.size(); ++i) {
    if (!results[i].reroot_ok) ++local.reroot_mismatches;
    if (results[i].pyramid) {
      ++local.pyramids;
      continue;
    }
    first.emplace(results[i].key, i);
  }
  if (stats) *stats = local;
  std::vector<SimplexClass> out;
  for (const auto& [key, idx] : first) {
    const auto verts = simplex_of(cands[idx]);
    const LambdaGroup g = lambda_group_of_simplex(verts);
    out.push_back({LatticePolytope(d, verts), key, delta_from_group(g), static_cast<Int>(g.order())});
  }
  return out;
}

std::vector<GroupClass> enumerate_groups(std::size_t d, Int vmax) {
  check_bounds(d, vmax);
  const std::size_t n = d + 1;
  std::map<std::string, GroupClass> classes;
  // Cyclic groups: one generator, taken with non-decreasing numerators since coordinate order is free.
  for (Int q = 2; q <= vmax; ++q) {
    std::vector<std::vector<Int>> gens;
    std::vector<Int> cur;
    ascending_tuples(n, 1, q - 1, cur, gens);
    for (const auto& v : gens) {
      Int sum = 0;
      bool unit_order = false;
      for (Int x : v) {
        sum += x;
        unit_order = unit_order || gcd(x, q) == 1;
      }
      if (sum % q != 0 || !unit_order) continue;
      add_group(classes, generated_group(d, q, std::vector<IntVector>{v}));
    }
  }
  if (vmax >= 4) {
    // Klein four: first generator sorted as 0...01...1, second arbitrary in {0,1}^n.
    for (std::size_t m = 2; m <= n; m += 2) {
      IntVector u(n, 0);
      for (std::size_t i = n - m; i < n; ++i) u[i] = 1;
      for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
        IntVector w(n);
        std::size_t weight = 0;
        bool covers = true;
        for (std::size_t i = 0; i < n; ++i) {
          w[i] = static_cast<Int>(mask >> i & 1);
          weight += static_cast<std::size_t>(w[i]);
          covers = covers && (u[i] || w[i]);
        }
        if (weight % 2 != 0 || !covers || w == u) continue;
        add_group(classes, generated_group(d, 2, std::vector<IntVector>{u, w}));
      }
    }
  }
  return values_of(classes);
}

std::vector<GroupClass> family_groups(std::size_t d, Int vmax) {
  check_bounds(d, vmax);
  const Int n = static_cast<Int>(d + 1);
  std::map<std::string, GroupClass> classes;
  auto attempt = [&](auto build) {
    try {
      add_group(classes, build());
    } catch (const InvalidArgument&) {
    }
  };
  attempt([&] { return build_lambda_half(d); });
  if (vmax >= 3)
    for (Int a = 0; a <= n; ++a) attempt([&] { return build_lambda_ab(a, n - a); });
  if (vmax >= 4)
    for (Int a = 0; a <= n; ++a)
      for (Int b = 0; a + b <= n; ++b) {
        attempt([&] { return build_lambda1_abc(a, b, n - a - b); });
        attempt([&] { return build_lambda2_abc(a, b, n - a - b); });
      }
  return values_of(classes);
}

bool CrossValidationReport::ok() const {
  if (!feasibility_mismatches.empty()) return false;
  for (const auto& r : rows)
    if (!r.problems.empty()) return false;
  return true;
}

CrossValidationReport cross_validate(std::size_t dmin, std::size_t dmax, Int vmax, std::size_t workers) {
  CrossValidationReport rep;
  if (dmin > dmax) return rep;
  check_bounds(dmin, vmax);
  check_bounds(dmax, vmax);
  std::set<std::pair<int, std::vector<Int>>> achieved;
  std::vector<CatalogEntry> table1 = table1_instances(dmax);
  for (std::size_t d = 1; d <= dmax; ++d) {
    SimplexSweepStats stats;
    const auto classes = enumerate_simplices(d, vmax, &stats, workers);
    for (const auto& c : classes) achieved.emplace(static_cast<int>(c.volume), c.delta.exponents());
    if (d < dmin) continue;

    CrossValidationRow row;
    row.d = d;
    row.hnf_candidates = stats.candidates;
    row.hnf_expected = stats.expected_candidates;
    row.hnf_classes = classes.size();
    row.reroot_mismatches = stats.reroot_mismatches;
    if (stats.candidates != stats.expected_candidates) row.problems.push_back("HNF sweep count differs from formula");
    if (stats.reroot_mismatches) row.problems.push_back("re-rooting changed a canonical form");

    const auto groups = enumerate_groups(d, vmax);
    const auto fams = family_groups(d, vmax);
    row.group_classes = groups.size();
    row.family_classes = fams.size();
    std::set<std::string> hk, gk, fk;
    for (const auto& c : classes) hk.insert(c.key);
    for (const auto& g : groups) gk.insert(g.key);
    for (const auto& f : fams) fk.insert(f.key);
    if (hk != gk) row.problems.push_back("HNF sweep and group sweep disagree");
    if (gk != fk) row.problems.push_back("group sweep and named families disagree");

    for (const auto& c : classes) {
      if (delta_from_counts(c.simplex) != c.delta) row.problems.push_back("delta mismatch at " + c.simplex.to_string());
      if (normalized_volume(c.simplex) != c.volume) row.problems.push_back("volume mismatch at " + c.simplex.to_string());
      if (strip_pyramids(c.simplex).apexes != 0) row.problems.push_back("geometric pyramid at " + c.simplex.to_string());
      try {
        const auto r = classify(c.simplex);
        if (family_kind(r.entry.family) != FamilyKind::Simplex || r.entry.pyramids != 0)
          row.problems.push_back("classified outside Table 1: " + c.simplex.to_string());
      } catch (const Error& e) {
        row.problems.push_back(std::string("classify failed: ") + e.what());
      }
    }
    std::set<std::string> tk;
    for (const auto& e : table1) {
      const auto p = make_entry(e);
      if (p.dim() != d || claimed_delta(e).volume() > vmax) continue;
      ++row.table1_instances;
      const auto key = canonical_group_form(lambda_group_of_simplex(p.vertices())).key;
      tk.insert(key);
      if (!hk.count(key)) row.problems.push_back("Table-1 instance missing from the sweep: " + e.to_string());
    }
    if (tk.size() != row.table1_instances) row.problems.push_back("two Table-1 instances share a class");
    if (tk != hk) row.problems.push_back("sweep classes and Table-1 instances are not in bijection");
    rep.rows.push_back(std::move(row));

    for (int v = 2; v <= vmax; ++v) {
      std::vector<std::vector<Int>> tuples;
      std::vector<Int> cur;
      ascending_tuples(static_cast<std::size_t>(v - 1), 1, static_cast<Int>(d), cur, tuples);
      for (const auto& e : tuples) {
        const bool truth = achieved.count({v, e}) > 0;
        ++rep.feasibility_checked;
        if (feasible_delta(v, e, static_cast<Int>(d)) != truth)
          rep.feasibility_mismatches.push_back(exps_label(v, e, d) + (truth ? " realized but predicate false" : " predicate true but not realized"));
        if (v == 3 && feasible_delta(v, e, static_cast<Int>(d), true) != truth)
          rep.printed_inconsistencies.push_back(exps_label(v, e, d) + (truth ? " realized but printed condition false" : " printed condition true but not realized"));
      }
    }
  }
  return rep;
}

}  // namespace latpoly
