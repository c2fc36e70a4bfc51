#include "latpoly/equivalence.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "latpoly/catalog.hpp"
#include "latpoly/ehrhart.hpp"
#include "latpoly/simplex_group.hpp"

namespace latpoly {

namespace {

using SlackMatrix = std::vector<std::vector<Int>>;

SlackMatrix slack_matrix(const LatticePolytope& p, const std::vector<Facet>& fs) {
  SlackMatrix s(p.num_vertices(), std::vector<Int>(fs.size()));
  for (std::size_t i = 0; i < p.num_vertices(); ++i)
    for (std::size_t f = 0; f < fs.size(); ++f) s[i][f] = fs[f].slack(p.vertices()[i]);
  return s;
}

std::vector<Int> sorted_copy(std::vector<Int> v) {
  std::sort(v.begin(), v.end());
  return v;
}

struct PairProfile {
  std::vector<std::pair<Int, Int>> slacks;
  Int content = 0;
  friend bool operator==(const PairProfile&, const PairProfile&) = default;
};

PairProfile pair_profile(const LatticePolytope& p, const SlackMatrix& s, std::size_t a, std::size_t b) {
  PairProfile out;
  for (std::size_t f = 0; f < s[a].size(); ++f) out.slacks.emplace_back(s[a][f], s[b][f]);
  std::sort(out.slacks.begin(), out.slacks.end());
  for (std::size_t c = 0; c < p.dim(); ++c) out.content = gcd(out.content, p.vertices()[a][c] - p.vertices()[b][c]);
  return out;
}

std::vector<Int> facet_point_counts(const LatticePolytope& p, const std::vector<Facet>& fs) {
  std::vector<Int> counts(fs.size(), 0);
  PointEnumerator(p).for_each(1, false, [&](std::span<const Int> x) {
    for (std::size_t f = 0; f < fs.size(); ++f)
      if (fs[f].slack(x) == 0) ++counts[f];
  });
  std::sort(counts.begin(), counts.end());
  return counts;
}

std::vector<std::size_t> anchor_indices(const LatticePolytope& p) {
  std::vector<std::size_t> out;
  std::vector<IntVector> chosen;
  for (std::size_t i = 0; i < p.num_vertices() && out.size() < p.dim() + 1; ++i) {
    chosen.push_back(p.vertices()[i]);
    if (affine_dimension(chosen) + 1 == chosen.size()) {
      out.push_back(i);
    } else {
      chosen.pop_back();
    }
  }
  return out;
}

IntVector unit(std::size_t d, std::size_t i) {
  IntVector v(d, 0);
  v[i - 1] = 1;
  return v;
}

IntVector range_sum(std::size_t d, std::size_t lo, std::size_t hi) {
  IntVector v(d, 0);
  for (std::size_t i = lo; i <= hi; ++i) v[i - 1] += 1;
  return v;
}

IntVector combine(std::initializer_list<std::pair<Int, IntVector>> terms) {
  IntVector out;
  for (const auto& [c, v] : terms) {
    if (out.empty()) out.assign(v.size(), 0);
    for (std::size_t i = 0; i < v.size(); ++i) out[i] += c * v[i];
  }
  return out;
}

// Column `col` (0-based) is -1 except the last entry k-1; identity elsewhere.
IntMatrix column_matrix(std::size_t d, Int k, std::size_t col) {
  IntMatrix u = IntMatrix::identity(d);
  for (std::size_t r = 0; r < d; ++r) u(r, col) = -1;
  u(d - 1, col) = k - 1;
  return u;
}

// First row: ones in columns 0..m-1 and 2 in the last column; last row: -1 in columns 1..m-1 and the last column.
IntMatrix corner_matrix(std::size_t d, std::size_t m) {
  IntMatrix u = IntMatrix::identity(d);
  for (std::size_t c = 0; c < m; ++c) u(0, c) = 1;
  u(0, d - 1) = 2;
  for (std::size_t c = 0; c < d; ++c) u(d - 1, c) = 0;
  for (std::size_t c = 1; c < m; ++c) u(d - 1, c) = -1;
  u(d - 1, d - 1) = -1;
  return u;
}

// m x m block with 0 on the diagonal and -1 elsewhere, -1 rows below it, -2 in the last column,
// and last row (k-2, ..., k-2, 0, ..., 2k-3).
IntMatrix block_matrix(std::size_t d, Int k, std::size_t m) {
  IntMatrix u(d, d);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) u(i, j) = i == j ? 0 : -1;
    u(i, d - 1) = -2;
  }
  for (std::size_t r = m; r + 1 < d; ++r) {
    for (std::size_t j = 0; j < m; ++j) u(r, j) = -1;
    u(r, r) = 1;
    u(r, d - 1) = -2;
  }
  for (std::size_t j = 0; j < m; ++j) u(d - 1, j) = k - 2;
  u(d - 1, d - 1) = 2 * k - 3;
  return u;
}

void set_row(IntMatrix& u, std::size_t r, const IntVector& row) {
  for (std::size_t c = 0; c < row.size(); ++c) u(r, c) = row[c];
}

IntVector row_with_tail(std::size_t lead, Int lead_value, IntVector tail) {
  IntVector row(lead, lead_value);
  row.insert(row.end(), tail.begin(), tail.end());
  return row;
}

std::size_t even_dim(Int k) { return static_cast<std::size_t>(2 * k); }
std::size_t odd_dim(Int k) { return static_cast<std::size_t>(2 * k + 1); }

std::vector<ClaimedIdentity> build_identities() {
  std::vector<ClaimedIdentity> out;
  auto zero_even = [](Int k) { return IntVector(even_dim(k), 0); };
  auto zero_odd = [](Int k) { return IntVector(odd_dim(k), 0); };
  auto shift_even = [](Int k) {
    const auto d = even_dim(k);
    return combine({{1, range_sum(d, 1, d - 2)}, {2, unit(d, d)}});
  };
  auto shift_odd = [](Int k) {
    const auto d = odd_dim(k);
    return combine({{1, range_sum(d, 1, d - 3)}, {2, unit(d, d)}});
  };

  out.push_back({"U_{1,2}", 'A', 1, 2, [](Int k) { return column_matrix(even_dim(k), k, 1); },
                 [](Int k) { return unit(even_dim(k), 2); }, ""});
  out.push_back({"U_{1,3}", 'A', 1, 3, [](Int k) { return corner_matrix(even_dim(k), even_dim(k) - 2); }, zero_even, ""});
  out.push_back({"U_{1,4}", 'A', 1, 4, [](Int k) { return block_matrix(even_dim(k), k, even_dim(k) - 2); }, shift_even,
                 "undefined in source, hypothesis U_{1,5} tested", true});
  out.push_back({"U_{5,6}", 'A', 5, 6, [](Int k) { return block_matrix(odd_dim(k), k, odd_dim(k) - 3); }, shift_odd, ""});
  out.push_back({"U_{5,7}", 'A', 5, 7, [](Int k) { return corner_matrix(odd_dim(k), odd_dim(k) - 3); }, zero_odd, ""});
  out.push_back({"U_{5,8}", 'A', 5, 8,
                 [](Int k) {
                   const auto d = odd_dim(k);
                   IntMatrix u = block_matrix(d, k, d - 3);
                   set_row(u, d - 2, row_with_tail(d - 3, -2, {1, 1, -4}));
                   return u;
                 },
                 shift_odd, ""});
  out.push_back({"U_{5,9}", 'A', 5, 9,
                 [](Int k) {
                   const auto d = odd_dim(k);
                   IntMatrix u = corner_matrix(d, d - 3);
                   set_row(u, d - 2, row_with_tail(d - 3, -1, {1, 1, -2}));
                   return u;
                 },
                 zero_odd, ""});
  out.push_back({"U_{5,10}", 'A', 5, 10,
                 [](Int k) {
                   const auto d = odd_dim(k);
                   IntMatrix u = IntMatrix::identity(d);
                   set_row(u, d - 2, row_with_tail(d - 3, -1, {1, 1, -2}));
                   return u;
                 },
                 zero_odd, ""});

  out.push_back({"U'_{5,1}", 'B', 5, 1,
                 [](Int k) {
                   const auto d = even_dim(k);
                   IntMatrix u = IntMatrix::identity(d);
                   for (std::size_t c = 0; c + 3 < d; ++c) u(0, c) = 1;
                   u(0, d - 1) = 2;
                   for (std::size_t r = 1; r + 3 < d; ++r) u(r, d - 3) = -1;
                   u(d - 3, d - 3) = -1;
                   u(d - 2, d - 3) = -1;
                   for (std::size_t c = 0; c < d; ++c) u(d - 1, c) = 0;
                   for (std::size_t c = 1; c + 3 < d; ++c) u(d - 1, c) = -1;
                   u(d - 1, d - 3) = k - 2;
                   u(d - 1, d - 1) = -1;
                   return u;
                 },
                 [](Int k) { return unit(even_dim(k), static_cast<std::size_t>(2 * k - 2)); }, ""});
  out.push_back({"U'_{5,2}", 'B', 5, 2, [](Int k) { return corner_matrix(even_dim(k), even_dim(k) - 2); }, zero_even, ""});
  out.push_back({"U'_{5,3}", 'B', 5, 3, [](Int k) { return column_matrix(even_dim(k), k, 0); },
                 [](Int k) { return unit(even_dim(k), 1); }, ""});
  out.push_back({"U'_{5,4}", 'B', 5, 4,
                 [](Int k) {
                   const auto d = even_dim(k);
                   IntMatrix u = IntMatrix::identity(d);
                   for (std::size_t c = 0; c < d; ++c) u(0, c) = 0;
                   for (std::size_t c = 1; c + 2 < d; ++c) u(0, c) = 1;
                   u(0, d - 1) = 2;
                   for (std::size_t r = 1; r + 1 < d; ++r) u(r, 0) = -1;
                   for (std::size_t c = 0; c < d; ++c) u(d - 1, c) = 0;
                   u(d - 1, 0) = k - 2;
                   for (std::size_t c = 1; c + 2 < d; ++c) u(d - 1, c) = -1;
                   u(d - 1, d - 1) = -1;
                   return u;
                 },
                 [](Int k) { return unit(even_dim(k), 1); }, ""});
  out.push_back({"U'_{5,6}", 'B', 5, 6, [](Int k) { return column_matrix(even_dim(k), k, 1); },
                 [](Int k) { return unit(even_dim(k), 2); }, "argument placement in the source is garbled; read as f_U(P_6)+e_2"});
  out.push_back({"U'_{5,7}", 'B', 5, 7, [](Int k) { return block_matrix(even_dim(k), k, even_dim(k) - 2); },
                 [](Int k) {
                   const auto d = even_dim(k);
                   return combine({{1, range_sum(d, 1, d - 3)}, {2, unit(d, d)}});
                 },
                 ""});
  out.push_back({"U'_{5,7}*", 'B', 5, 8, [](Int k) { return block_matrix(even_dim(k), k, even_dim(k) - 2); }, shift_even,
                 "candidate 7 read with v = sum_{j<=d-2} e_j + 2e_d and shift sum_{j<=d-2} e_j + 2e_d", true});
  return out;
}

}  // namespace

const char* to_string(EquivalenceStatus s) {
  switch (s) {
    case EquivalenceStatus::Equivalent: return "equivalent";
    case EquivalenceStatus::NotEquivalent: return "not-equivalent";
    case EquivalenceStatus::Indeterminate: return "indeterminate";
  }
  return "?";
}

const char* to_string(IdentityStatus s) {
  switch (s) {
    case IdentityStatus::Verified: return "verified";
    case IdentityStatus::DetFail: return "det-fail";
    case IdentityStatus::MapFail: return "map-fail";
  }
  return "?";
}

std::optional<UnimodularMap> map_from_correspondence(std::span<const IntVector> src, std::span<const IntVector> dst) {
  if (src.empty() || src.size() != dst.size()) throw InvalidArgument("correspondence size mismatch");
  const std::size_t d = src[0].size();
  if (src.size() != d + 1) throw InvalidArgument("correspondence needs d+1 points");
  IntMatrix e(d + 1, d + 1), f(d + 1, d + 1);
  for (std::size_t i = 0; i <= d; ++i) {
    for (std::size_t c = 0; c < d; ++c) {
      e(i, c) = src[i][c];
      f(i, c) = dst[i][c];
    }
    e(i, d) = f(i, d) = 1;
  }
  const Adjugate adj = adjugate(e);
  if (adj.det == 0) throw InvalidArgument("correspondence source is affinely dependent");
  const IntMatrix num = adj.adj * f;
  IntMatrix m(d + 1, d + 1);
  for (std::size_t r = 0; r <= d; ++r)
    for (std::size_t c = 0; c <= d; ++c) {
      if (num(r, c) % adj.det != 0) return std::nullopt;
      m(r, c) = num(r, c) / adj.det;
    }
  IntMatrix a(d, d);
  IntVector t(d);
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < d; ++c) a(r, c) = m(r, c);
  for (std::size_t c = 0; c < d; ++c) t[c] = m(d, c);
  const Int det = d == 0 ? 1 : determinant(a);
  if (det != 1 && det != -1) return std::nullopt;
  return UnimodularMap{std::move(a), std::move(t)};
}

EquivalenceResult are_equivalent(const LatticePolytope& p, const LatticePolytope& q, std::size_t budget) {
  if (!is_full_dimensional(p) || !is_full_dimensional(q))
    throw InvalidArgument("are_equivalent needs full-dimensional polytopes");
  EquivalenceResult res;
  auto reject = [&](const char* why) {
    res.status = EquivalenceStatus::NotEquivalent;
    res.reason = why;
    return res;
  };
  if (p.dim() != q.dim()) return reject("dimension differs");
  const std::size_t d = p.dim();
  if (p.num_vertices() != q.num_vertices()) return reject("vertex count differs");
  const auto fp = facets(p);
  const auto fq = facets(q);
  if (fp.size() != fq.size()) return reject("facet count differs");
  const SlackMatrix sp = slack_matrix(p, fp);
  const SlackMatrix sq = slack_matrix(q, fq);
  std::vector<std::vector<Int>> sig_p, sig_q;
  for (const auto& row : sp) sig_p.push_back(sorted_copy(row));
  for (const auto& row : sq) sig_q.push_back(sorted_copy(row));
  {
    auto a = sig_p, b = sig_q;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return reject("vertex slack profiles differ");
  }
  if (normalized_volume(p) != normalized_volume(q)) return reject("volume differs");
  if (facet_point_counts(p, fp) != facet_point_counts(q, fq)) return reject("facet lattice-point counts differ");
  if (delta_from_counts(p) != delta_from_counts(q)) return reject("delta-vector differs");
  if (spans_lattice(p) != spans_lattice(q)) return reject("spanning flag differs");
  if (half_sum_invariant(p) != half_sum_invariant(q)) return reject("half-sum invariant differs");

  const std::vector<std::size_t> anchor = anchor_indices(p);
  std::vector<std::size_t> image(anchor.size());
  std::vector<bool> used(q.num_vertices(), false);
  const std::set<IntVector> target(q.vertices().begin(), q.vertices().end());
  bool exhausted = false;

  std::function<bool(std::size_t)> search = [&](std::size_t t) -> bool {
    if (t == anchor.size()) {
      std::vector<IntVector> src, dst;
      for (std::size_t i = 0; i < anchor.size(); ++i) {
        src.push_back(p.vertices()[anchor[i]]);
        dst.push_back(q.vertices()[image[i]]);
      }
      auto map = map_from_correspondence(src, dst);
      if (!map) return false;
      EquivalenceWitness w{*map, {}};
      for (const auto& v : p.vertices()) {
        const IntVector img = map->apply(v);
        if (!target.count(img)) return false;
        w.correspondence.push_back(static_cast<std::size_t>(
            std::lower_bound(q.vertices().begin(), q.vertices().end(), img) - q.vertices().begin()));
      }
      res.witness = std::move(w);
      return true;
    }
    for (std::size_t j = 0; j < q.num_vertices(); ++j) {
      if (used[j] || sig_q[j] != sig_p[anchor[t]]) continue;
      if (++res.nodes > budget) {
        exhausted = true;
        return false;
      }
      bool ok = true;
      for (std::size_t s = 0; s < t && ok; ++s)
        ok = pair_profile(p, sp, anchor[s], anchor[t]) == pair_profile(q, sq, image[s], j);
      if (!ok) continue;
      used[j] = true;
      image[t] = j;
      if (search(t + 1)) return true;
      used[j] = false;
      if (exhausted) return false;
    }
    return false;
  };

  (void)d;
  if (search(0)) {
    res.status = EquivalenceStatus::Equivalent;
    res.reason = "witness found";
  } else if (exhausted) {
    res.status = EquivalenceStatus::Indeterminate;
    res.reason = "search budget exceeded";
  } else {
    res.status = EquivalenceStatus::NotEquivalent;
    res.reason = "no anchor assignment extends to a unimodular map";
  }
  return res;
}

std::optional<EquivalenceWitness> simplex_witness(const LatticePolytope& a, const LatticePolytope& b) {
  if (a.dim() != b.dim() || !is_simplex(a) || !is_simplex(b) || !is_full_dimensional(a) || !is_full_dimensional(b))
    return std::nullopt;
  const auto fa = canonical_group_form(lambda_group_of_simplex(a.vertices()));
  const auto fb = canonical_group_form(lambda_group_of_simplex(b.vertices()));
  if (fa.key != fb.key) return std::nullopt;
  std::vector<IntVector> src, dst;
  std::vector<std::size_t> corr(a.num_vertices());
  for (std::size_t j = 0; j < fa.order.size(); ++j) {
    src.push_back(a.vertices()[fa.order[j]]);
    dst.push_back(b.vertices()[fb.order[j]]);
    corr[fa.order[j]] = fb.order[j];
  }
  auto map = map_from_correspondence(src, dst);
  if (!map) throw Error("equal canonical group forms without a unimodular vertex map");
  return EquivalenceWitness{*map, std::move(corr)};
}

bool simplex_equivalent(const LatticePolytope& a, const LatticePolytope& b) {
  if (a.dim() != b.dim()) return false;
  if (!is_simplex(a) || !is_simplex(b)) throw InvalidArgument("simplex_equivalent needs simplices");
  return canonical_group_form(lambda_group_of_simplex(a.vertices())).key ==
         canonical_group_form(lambda_group_of_simplex(b.vertices())).key;
}

LatticePolytope case_candidate(char group, int index, Int k) {
  if (k < 2) throw InvalidArgument("k must be at least 2");
  IntVector v, w;
  std::size_t d = 0;
  if (group == 'A' && index >= 1 && index <= 4) {
    d = even_dim(k);
    v = combine({{1, range_sum(d, 1, d - 2)}, {2, unit(d, d)}});
    switch (index) {
      case 1: w = combine({{1, unit(d, 1)}, {-1, unit(d, d - 1)}}); break;
      case 2: w = combine({{1, unit(d, 1)}, {1, unit(d, 2)}, {-1, unit(d, d - 1)}}); break;
      case 3: w = combine({{1, range_sum(d, 1, d - 2)}, {-1, unit(d, d - 1)}, {2, unit(d, d)}}); break;
      default:
        w = combine({{2, unit(d, 1)}, {1, range_sum(d, 2, d - 2)}, {-1, unit(d, d - 1)}, {2, unit(d, d)}});
    }
  } else if (group == 'A' && index >= 5 && index <= 10) {
    d = odd_dim(k);
    v = combine({{1, range_sum(d, 1, d - 3)}, {2, unit(d, d)}});
    const IntVector a = unit(d, d - 2), b = unit(d, d - 1);
    switch (index) {
      case 5: w = combine({{-1, range_sum(d, 1, d - 3)}, {1, a}, {1, b}, {-2, unit(d, d)}}); break;
      case 6: w = combine({{1, a}, {1, b}}); break;
      case 7: w = combine({{-1, unit(d, 1)}, {1, a}, {1, b}}); break;
      case 8: w = combine({{-1, a}, {1, b}}); break;
      case 9: w = combine({{1, unit(d, 1)}, {-1, a}, {1, b}}); break;
      default: w = combine({{1, range_sum(d, 1, d - 3)}, {-1, a}, {1, b}, {2, unit(d, d)}});
    }
  } else if (group == 'B' && index >= 1 && index <= 8) {
    d = even_dim(k);
    v = combine({{1, range_sum(d, 1, index == 7 ? d - 3 : d - 2)}, {2, unit(d, d)}});
    const IntVector b = unit(d, d - 1);
    switch (index) {
      case 1: w = combine({{-1, range_sum(d, 1, d - 3)}, {1, b}, {-2, unit(d, d)}}); break;
      case 2: w = combine({{-1, range_sum(d, 1, d - 2)}, {1, b}, {-2, unit(d, d)}}); break;
      case 3: w = combine({{1, unit(d, 1)}, {1, b}}); break;
      case 4: w = combine({{1, range_sum(d, 1, d - 1)}, {2, unit(d, d)}}); break;
      case 5: w = combine({{-1, unit(d, 1)}, {1, b}}); break;
      case 6: w = combine({{-1, unit(d, 1)}, {1, unit(d, 2)}, {1, b}}); break;
      default: w = combine({{1, range_sum(d, 2, d - 1)}, {2, unit(d, d)}});
    }
  } else {
    throw InvalidArgument("unknown candidate");
  }
  std::vector<IntVector> verts{IntVector(d, 0)};
  for (std::size_t i = 1; i < d; ++i) verts.push_back(unit(d, i));
  verts.push_back(std::move(v));
  verts.push_back(std::move(w));
  const std::string label = group == 'B' && index == 8 ? "B:P7*" : std::string(1, group) + ":P" + std::to_string(index);
  return LatticePolytope(d, std::move(verts), label);
}

const std::vector<ClaimedIdentity>& claimed_identities() {
  static const std::vector<ClaimedIdentity> ids = build_identities();
  return ids;
}

IdentityCheck verify_claimed_identity(const ClaimedIdentity& c, Int k) {
  IdentityCheck out;
  const IntMatrix u = c.matrix(k);
  out.det = determinant(u);
  const LatticePolytope target = case_candidate(c.group, c.target, k);
  const LatticePolytope source = case_candidate(c.group, c.source, k);
  if (out.det != 1 && out.det != -1) {
    out.status = IdentityStatus::DetFail;
    return out;
  }
  const LatticePolytope image = apply_map(UnimodularMap::make(u, c.translation(k)), source);
  if (image == target) {
    out.status = IdentityStatus::Verified;
    out.fallback = EquivalenceStatus::Equivalent;
    return out;
  }
  out.status = IdentityStatus::MapFail;
  out.fallback = are_equivalent(source, target).status;
  return out;
}

std::optional<RadonSplit> radon_triangulate(const LatticePolytope& p) {
  const std::size_t d = p.dim();
  if (!is_full_dimensional(p) || p.num_vertices() != d + 2) return std::nullopt;
  IntMatrix a(d + 1, d + 2);
  for (std::size_t i = 0; i < d + 2; ++i) {
    for (std::size_t c = 0; c < d; ++c) a(c, i) = p.vertices()[i][c];
    a(d, i) = 1;
  }
  const IntMatrix ker = integer_kernel(a);
  if (ker.rows() != 1) return std::nullopt;
  std::vector<std::size_t> pos, neg;
  for (std::size_t i = 0; i < d + 2; ++i) {
    if (ker(0, i) > 0) pos.push_back(i);
    if (ker(0, i) < 0) neg.push_back(i);
  }
  const std::vector<std::size_t>* side = pos.size() == 2 ? &pos : neg.size() == 2 ? &neg : nullptr;
  if (!side) return std::nullopt;
  auto without = [&](std::initializer_list<std::size_t> drop) {
    std::vector<IntVector> pts;
    for (std::size_t i = 0; i < d + 2; ++i)
      if (std::find(drop.begin(), drop.end(), i) == drop.end()) pts.push_back(p.vertices()[i]);
    return LatticePolytope(d, std::move(pts));
  };
  const std::size_t j1 = (*side)[0], j2 = (*side)[1];
  return RadonSplit{without({j1}), without({j2}), without({j1, j2})};
}

}  // namespace latpoly
