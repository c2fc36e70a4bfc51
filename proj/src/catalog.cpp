#include "latpoly/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <map>
#include <unordered_map>
#include <unordered_set>

#include "latpoly/simplex_group.hpp"

namespace latpoly {

namespace {

IntVector unit(std::size_t d, std::size_t i) {
  IntVector v(d, 0);
  v[i - 1] = 1;
  return v;
}

// Adds c * e_i for lo <= i <= hi (1-based); empty when lo > hi. With skip_d, i = d contributes nothing.
void add_range(IntVector& v, Int lo, Int hi, Int c, bool skip_d = false) {
  const Int d = static_cast<Int>(v.size());
  for (Int i = lo; i <= hi; ++i) {
    if (skip_d && i == d) continue;
    if (i < 1 || i > d) throw InvalidArgument("summation index outside 1..d");
    v[static_cast<std::size_t>(i - 1)] += c;
  }
}

std::vector<IntVector> origin_and_units(std::size_t d, std::size_t m) {
  std::vector<IntVector> out{IntVector(d, 0)};
  for (std::size_t i = 1; i <= m; ++i) out.push_back(unit(d, i));
  return out;
}

void require(bool ok, const char* what) {
  if (!ok) throw InvalidArgument(what);
}

struct Table2Row {
  std::size_t dim;
  std::vector<IntVector> vertices;
  std::vector<Int> delta;
};

const std::map<std::string, Table2Row>& table2_data() {
  static const std::map<std::string, Table2Row> data = {
      {"P2", {2, {{0, 0}, {1, 0}, {0, 1}, {1, 1}}, {1, 1}}},
      {"P3_1", {2, {{0, 0}, {2, 0}, {0, 1}, {1, 1}}, {1, 2}}},
      {"P3_2", {3, {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 0, 1}, {0, 1, 1}}, {1, 2}}},
      {"Q3_1", {3, {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, -2}}, {1, 1, 1}}},
      {"Q3_2", {4, {{0, 0, 0, 0}, {1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}, {-1, -1, 1, 1}}, {1, 1, 1}}},
      {"P4_1", {2, {{0, 0}, {2, 0}, {0, 1}, {2, 1}}, {1, 3}}},
      {"P4_2", {2, {{0, 0}, {3, 0}, {1, 1}, {2, 1}}, {1, 3}}},
      {"P4_3", {3, {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 0, 1}, {0, 1, 1}, {0, 0, 2}}, {1, 3}}},
      {"P4_4",
       {4,
        {{0, 0, 0, 0}, {1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}, {1, 1, 0, 0}, {1, 0, 1, 0}, {1, 0, 0, 1}},
        {1, 3}}},
      {"Q4_1", {2, {{1, 0}, {0, -1}, {1, -1}, {-1, 1}}, {1, 2, 1}}},
      {"Q4_2", {2, {{1, 0}, {-1, 0}, {0, 1}, {0, -1}}, {1, 2, 1}}},
      {"Q4_3", {3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 0}, {0, 0, -1}}, {1, 2, 1}}},
      {"Q4_4", {3, {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 1, 0}, {0, 0, 2}}, {1, 2, 1}}},
      {"Q4_5", {3, {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 0}, {1, 1, 1}}, {1, 2, 1}}},
      {"Q4_6", {3, {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 0}, {1, 1, -1}}, {1, 2, 1}}},
      {"Q4_7", {4, {{0, 0, 0, 0}, {2, 0, 0, 0}, {0, 0, 0, 1}, {0, 1, 0, 1}, {0, 0, 1, 1}, {0, 1, 1, 1}}, {1, 2, 1}}},
      {"Q4_8",
       {4, {{0, 0, 0, 0}, {1, 0, 0, 0}, {0, 1, 0, 0}, {1, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}, {0, 0, 1, 1}}, {1, 2, 1}}},
      {"Q4_9",
       {5,
        {{0, 0, 0, 0, 0},
         {1, 0, 0, 0, 0},
         {0, 1, 0, 0, 0},
         {1, 1, 0, 0, 0},
         {0, 0, 0, 0, 1},
         {0, 0, 1, 0, 1},
         {0, 0, 0, 1, 1},
         {0, 0, 1, 1, 1}},
        {1, 2, 1}}},
      {"R4_1", {3, {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, -3}}, {1, 1, 2}}},
      {"R4_2", {4, {{0, 0, 0, 0}, {1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}, {-2, -1, 1, 1}}, {1, 1, 2}}},
      {"S4_1",
       {4, {{0, 0, 0, 0}, {1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}, {-1, -1, -1, 1}}, {1, 1, 1, 1}}},
      {"S4_2",
       {4, {{0, 0, 0, 0}, {1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}, {-1, -1, -1, 2}}, {1, 1, 1, 1}}},
      {"S4_3",
       {5,
        {{0, 0, 0, 0, 0},
         {1, 0, 0, 0, 0},
         {0, 1, 0, 0, 0},
         {0, 0, 1, 0, 0},
         {0, 0, 0, 1, 0},
         {0, 0, 0, 0, 1},
         {-2, -1, 1, 1, 1}},
        {1, 1, 1, 1}}},
      {"S4_4",
       {6,
        {{0, 0, 0, 0, 0, 0},
         {1, 0, 0, 0, 0, 0},
         {0, 1, 0, 0, 0, 0},
         {0, 0, 1, 0, 0, 0},
         {0, 0, 0, 1, 0, 0},
         {0, 0, 0, 0, 1, 0},
         {0, 0, 0, 0, 0, 1},
         {-1, -1, -1, 1, 1, 1}},
        {1, 1, 1, 1}}},
  };
  return data;
}

std::string fold(std::string_view s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s.substr(i, 2) == "Δ") {
      out += 'd';
      ++i;
      continue;
    }
    const char c = s[i];
    if (c == '_' || c == '-' || c == '^' || c == '(' || c == ')' || c == ' ') continue;
    out += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  }
  if (out.rfind("delta", 0) == 0) out = "d" + out.substr(5);
  return out;
}

std::size_t exponent_count(const std::string& family) {
  if (family == "Δ2") return 1;
  if (family == "Δ3") return 2;
  return 3;
}

}  // namespace

std::string CatalogEntry::to_string() const {
  if (family.empty()) return "volume exceeds 4";
  std::string out = family;
  std::vector<std::string> names;
  if (canonical_family_id(family) == family || family == "Point") names = parameter_names(family);
  if (!params.empty()) {
    out += " (";
    for (std::size_t i = 0; i < params.size(); ++i) {
      if (i) out += ",";
      out += (i < names.size() ? names[i] : "p") + "=" + std::to_string(params[i]);
    }
    out += ")";
  }
  return out;
}

const std::vector<std::string>& table1_ids() {
  static const std::vector<std::string> ids{"Δ2", "Δ3", "Δ41", "Δ42", "Δ43"};
  return ids;
}

const std::vector<std::string>& table2_ids() {
  static const std::vector<std::string> ids{"P2",   "P3_1", "P3_2", "Q3_1", "Q3_2", "P4_1", "P4_2", "P4_3",
                                            "P4_4", "Q4_1", "Q4_2", "Q4_3", "Q4_4", "Q4_5", "Q4_6", "Q4_7",
                                            "Q4_8", "Q4_9", "R4_1", "R4_2", "S4_1", "S4_2", "S4_3", "S4_4"};
  return ids;
}

const std::vector<std::string>& table3_ids() {
  static const std::vector<std::string> ids{"A4_1", "A4_2", "A4_3", "B4"};
  return ids;
}

std::optional<std::string> canonical_family_id(std::string_view name) {
  const std::string key = fold(name);
  if (key == "point") return "Point";
  for (const auto* list : {&table1_ids(), &table2_ids(), &table3_ids()})
    for (const auto& id : *list)
      if (fold(id) == key) return id;
  return std::nullopt;
}

FamilyKind family_kind(const std::string& family) {
  if (family == "Point") return FamilyKind::Point;
  if (std::find(table1_ids().begin(), table1_ids().end(), family) != table1_ids().end()) return FamilyKind::Simplex;
  if (table2_data().count(family)) return FamilyKind::Spanning;
  if (std::find(table3_ids().begin(), table3_ids().end(), family) != table3_ids().end()) return FamilyKind::NonSpanning;
  throw InvalidArgument("unknown family id: " + family);
}

std::vector<std::string> parameter_names(const std::string& family) {
  switch (family_kind(family)) {
    case FamilyKind::Simplex: {
      std::vector<std::string> out{"i1", "i2", "i3"};
      out.resize(exponent_count(family));
      return out;
    }
    case FamilyKind::NonSpanning:
      return {"k"};
    default:
      return {};
  }
}

std::size_t simplex_dimension(const std::string& family, std::span<const Int> e) {
  if (family_kind(family) != FamilyKind::Simplex) throw InvalidArgument("not a Table-1 family: " + family);
  require(e.size() == exponent_count(family), "wrong number of exponents for the family");
  for (Int x : e) require(x >= 1, "exponents must be positive");
  Int d = 0;
  if (family == "Δ2") {
    d = 2 * e[0] - 1;
  } else if (family == "Δ3") {
    require(e[0] <= e[1] && e[1] <= 2 * e[0], "Δ3 needs i1 <= i2 <= 2 i1");
    d = e[0] + e[1] - 1;
  } else {
    require(e[0] <= e[1] && e[1] <= e[2], "exponents must be ascending");
    require(e[2] <= e[0] + e[1], "needs i3 <= i1 + i2");
    if (family == "Δ41") {
      require(e[0] < e[1] && e[1] < e[2], "Δ41 needs i1 < i2 < i3");
      require(2 * e[1] <= e[0] + e[2], "Δ41 needs 2 i2 <= i1 + i3");
      d = e[0] + e[2] - 1;
    } else if (family == "Δ42") {
      d = e[1] + e[2] - 1;
    } else {
      d = e[0] + e[1] + e[2] - 1;
    }
  }
  return static_cast<std::size_t>(d);
}

LatticePolytope make_simplex(const std::string& family, std::span<const Int> e) {
  const std::size_t d = simplex_dimension(family, e);
  const Int di = static_cast<Int>(d);
  std::vector<IntVector> verts;
  IntVector v(d, 0);
  if (family == "Δ2") {
    verts = origin_and_units(d, d - 1);
    add_range(v, 1, di - 1, 1);
    v[d - 1] += 2;
  } else if (family == "Δ3") {
    verts = origin_and_units(d, d - 1);
    const Int a = -e[0] + 2 * e[1];
    add_range(v, 1, a - 1, 2, true);
    add_range(v, a, di - 1, 1);
    v[d - 1] += 3;
  } else if (family == "Δ41" || family == "Δ42") {
    verts = origin_and_units(d, d - 1);
    const bool first = family == "Δ41";
    const Int b = first ? e[0] - 2 * e[1] + e[2] : -2 * e[0] + e[1] + e[2];
    const Int m = first ? 2 * e[0] - e[1] : -e[0] + 2 * e[1];
    add_range(v, 1, b, 2);
    add_range(v, b + 1, m, 1, true);
    add_range(v, m + 1, di - 1, 3);
    v[d - 1] += 4;
  } else {
    verts = origin_and_units(d, d - 2);
    const Int a = -e[0] + e[1] + e[2];
    IntVector w(d, 0);
    add_range(v, a, di - 2, 1);
    v[d - 2] += 2;
    add_range(w, 1, a - 1, 1);
    add_range(w, 2 * e[2] - 1, di - 2, 1);
    w[d - 1] += 2;
    verts.push_back(std::move(w));
  }
  verts.push_back(std::move(v));
  LatticePolytope p(d, std::move(verts), CatalogEntry{family, {e.begin(), e.end()}, 0}.to_string());
  if (p.num_vertices() != d + 1) throw Error("Table-1 generator produced a degenerate simplex");
  return p;
}

LatticePolytope make_table2(const std::string& id) {
  const auto it = table2_data().find(id);
  if (it == table2_data().end()) throw InvalidArgument("unknown Table-2 id: " + id);
  return LatticePolytope(it->second.dim, it->second.vertices, id);
}

LatticePolytope make_table3(const std::string& id, Int k) {
  require(k >= 2, "Table-3 families need k >= 2");
  std::size_t d = 0;
  IntVector v, w;
  if (id == "A4_1" || id == "B4") {
    d = static_cast<std::size_t>(2 * k);
    v = w = IntVector(d, 0);
    add_range(v, 1, static_cast<Int>(d) - 2, 1);
    v[d - 1] += 2;
    w[0] += id == "B4" ? -1 : 1;
    w[d - 2] += id == "B4" ? 1 : -1;
  } else if (id == "A4_2") {
    d = static_cast<std::size_t>(2 * k + 1);
    v = w = IntVector(d, 0);
    add_range(v, 1, static_cast<Int>(d) - 3, 1);
    v[d - 1] += 2;
    w[d - 3] += 1;
    w[d - 2] += 1;
  } else if (id == "A4_3") {
    d = static_cast<std::size_t>(2 * k + 2);
    v = w = IntVector(d, 0);
    add_range(v, 1, static_cast<Int>(d) - 4, 1);
    v[d - 1] += 2;
    w[d - 4] -= 1;
    w[d - 3] += 1;
    w[d - 2] += 1;
  } else {
    throw InvalidArgument("unknown Table-3 id: " + id);
  }
  auto verts = origin_and_units(d, d - 1);
  verts.push_back(std::move(v));
  verts.push_back(std::move(w));
  return LatticePolytope(d, std::move(verts), CatalogEntry{id, {k}, 0}.to_string());
}

LatticePolytope make_entry(const CatalogEntry& entry) {
  LatticePolytope p;
  switch (family_kind(entry.family)) {
    case FamilyKind::Point:
      require(entry.params.empty(), "Point takes no parameters");
      p = LatticePolytope(0, {IntVector{}}, "Point");
      break;
    case FamilyKind::Simplex:
      p = make_simplex(entry.family, entry.params);
      break;
    case FamilyKind::Spanning:
      require(entry.params.empty(), "Table-2 entries take no parameters");
      p = make_table2(entry.family);
      break;
    case FamilyKind::NonSpanning:
      require(entry.params.size() == 1, "Table-3 entries take the single parameter k");
      p = make_table3(entry.family, entry.params[0]);
      break;
  }
  for (std::size_t i = 0; i < entry.pyramids; ++i) p = pyramid(p);
  return p;
}

DeltaVector claimed_delta(const CatalogEntry& entry) {
  switch (family_kind(entry.family)) {
    case FamilyKind::Point:
      return DeltaVector{{1}};
    case FamilyKind::Simplex:
      return delta_from_exponents(entry.params, simplex_dimension(entry.family, entry.params));
    case FamilyKind::Spanning: {
      const auto& row = table2_data().at(entry.family);
      return DeltaVector{row.delta}.padded(row.dim);
    }
    case FamilyKind::NonSpanning: {
      const Int k = entry.params.at(0);
      const LatticePolytope p = make_table3(entry.family, k);
      const std::vector<Int> exps = entry.family == "B4" ? std::vector<Int>{1, k, k} : std::vector<Int>{1, k, k + 1};
      return delta_from_exponents(exps, p.dim());
    }
  }
  throw Error("unreachable");
}

std::vector<CatalogEntry> table1_instances(std::size_t dmax) {
  std::vector<CatalogEntry> out;
  const Int top = static_cast<Int>(dmax) + 1;
  auto consider = [&](const std::string& family, std::vector<Int> e) {
    try {
      if (simplex_dimension(family, e) <= dmax) out.push_back({family, std::move(e), 0});
    } catch (const InvalidArgument&) {
    }
  };
  for (Int i1 = 1; i1 <= top; ++i1) consider("Δ2", {i1});
  for (Int i1 = 1; i1 <= top; ++i1)
    for (Int i2 = i1; i2 <= top; ++i2) consider("Δ3", {i1, i2});
  for (const char* fam : {"Δ41", "Δ42", "Δ43"})
    for (Int i1 = 1; i1 <= top; ++i1)
      for (Int i2 = i1; i2 <= top; ++i2)
        for (Int i3 = i2; i3 <= top; ++i3) consider(fam, {i1, i2, i3});
  return out;
}

LatticePolytope pyramid(const LatticePolytope& p) {
  const std::size_t d = p.dim();
  std::vector<IntVector> verts;
  for (const auto& v : p.vertices()) {
    IntVector w = v;
    w.push_back(0);
    verts.push_back(std::move(w));
  }
  IntVector apex(d + 1, 0);
  apex[d] = 1;
  verts.push_back(std::move(apex));
  return LatticePolytope(d + 1, std::move(verts), p.name().empty() ? std::string{} : "Pyr(" + p.name() + ")");
}

LatticePolytope apply_witness(std::span<const WitnessStep> steps, const LatticePolytope& p) {
  LatticePolytope cur = p;
  for (const auto& step : steps) {
    if (step.kind == WitnessStep::Kind::Map) {
      cur = apply_map(step.map, cur);
      continue;
    }
    if (step.frame.ambient_dim() != cur.dim()) throw InvalidArgument("witness frame dimension mismatch");
    std::vector<IntVector> local;
    for (const auto& v : cur.vertices())
      if (auto y = step.frame.local_coordinates(v)) local.push_back(std::move(*y));
    if (local.empty()) throw InvalidArgument("witness frame misses every vertex");
    cur = LatticePolytope(step.frame.rank(), std::move(local), cur.name());
  }
  return cur;
}

PyramidStrip strip_pyramids(const LatticePolytope& p) {
  if (!is_full_dimensional(p)) throw InvalidArgument("strip_pyramids needs a full-dimensional polytope");
  PyramidStrip out{p, 0, {}};
  for (;;) {
    const LatticePolytope& cur = out.core;
    const std::size_t d = cur.dim();
    if (d == 0) break;
    bool stripped = false;
    for (std::size_t a = 0; a < cur.num_vertices() && !stripped; ++a) {
      std::vector<IntVector> rest;
      for (std::size_t i = 0; i < cur.num_vertices(); ++i)
        if (i != a) rest.push_back(cur.vertices()[i]);
      if (affine_dimension(rest) + 1 != d) continue;
      AffineLattice frame = affine_hull_lattice(rest);
      Int dist = 0;
      if (d == 1) {
        dist = cur.vertices()[a][0] - frame.origin[0];
      } else {
        const IntMatrix normal = integer_kernel(frame.basis);
        IntVector diff(d);
        for (std::size_t c = 0; c < d; ++c) diff[c] = checked_sub(cur.vertices()[a][c], frame.origin[c]);
        dist = dot(normal.row_span(0), diff);
      }
      if (dist != 1 && dist != -1) continue;
      std::vector<IntVector> local;
      for (const auto& v : rest) local.push_back(*frame.local_coordinates(v));
      LatticePolytope next(d - 1, std::move(local), cur.name());
      out.steps.push_back({WitnessStep::Kind::Restrict, std::move(frame), {}});
      out.core = std::move(next);
      ++out.apexes;
      stripped = true;
    }
    if (!stripped) break;
  }
  return out;
}

bool spans_lattice(const LatticePolytope& p) {
  const LatticePolytope q = affine_lattice_normalize(p).polytope;
  const std::size_t d = q.dim();
  std::vector<IntVector> rows;
  PointEnumerator(q).for_each(1, false, [&](std::span<const Int> x) {
    IntVector r(x.begin(), x.end());
    r.push_back(1);
    rows.push_back(std::move(r));
  });
  const SmithDecomposition snf = smith_normal_form(IntMatrix::from_rows(rows, d + 1));
  if (snf.rank != d + 1) return false;
  for (std::size_t i = 0; i <= d; ++i)
    if (snf.diagonal[i] != 1) return false;
  return true;
}

Int half_sum_invariant(const LatticePolytope& p) {
  const std::size_t d = p.dim();
  if (d + 1 > 63) throw InvalidArgument("half_sum_invariant supports d <= 62");
  std::vector<std::uint64_t> lifts;
  std::uint64_t total = 0;
  for (const auto& v : p.vertices()) {
    std::uint64_t m = std::uint64_t{1} << d;
    for (std::size_t c = 0; c < d; ++c)
      if (mod_floor(v[c], 2)) m |= std::uint64_t{1} << c;
    lifts.push_back(m);
    total ^= m;
  }
  // Largest zero-sum subset = n minus the fewest lifts summing to the total.
  std::unordered_map<std::uint64_t, Int> dist{{0, 0}};
  std::vector<std::uint64_t> frontier{0};
  Int level = 0;
  while (!dist.count(total)) {
    std::vector<std::uint64_t> next;
    ++level;
    for (auto s : frontier)
      for (auto g : lifts)
        if (dist.emplace(s ^ g, level).second) next.push_back(s ^ g);
    frontier = std::move(next);
  }
  return static_cast<Int>(lifts.size()) - dist.at(total);
}

bool feasible_delta(int volume, std::span<const Int> e, Int d, bool as_printed) {
  if (volume < 2 || volume > 4) throw InvalidArgument("feasible_delta covers volumes 2, 3 and 4");
  if (e.size() != static_cast<std::size_t>(volume - 1)) throw InvalidArgument("need V-1 exponents");
  if (e[0] < 1) throw InvalidArgument("exponents must be at least 1");
  for (std::size_t i = 0; i + 1 < e.size(); ++i)
    if (e[i] > e[i + 1]) throw InvalidArgument("exponents must be ascending");
  if (e.back() > d) throw InvalidArgument("exponents must not exceed d");
  const Int half = (d + 1) / 2;
  if (volume == 2) return 2 * e[0] <= d + 1;
  if (volume == 3) {
    if (as_printed) return e[1] <= 2 * e[0] && e[1] <= half;
    return e[1] <= 2 * e[0] && e[0] + e[1] <= d + 1;
  }
  return e[2] <= e[0] + e[1] && e[0] + e[2] <= d + 1 && e[1] <= half &&
         (2 * e[1] <= e[0] + e[2] || e[1] + e[2] <= d + 1);
}

}  // namespace latpoly
