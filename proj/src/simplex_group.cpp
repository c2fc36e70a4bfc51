#include "latpoly/simplex_group.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <functional>
#include <sstream>

namespace latpoly {

namespace {

IntVector add_mod(const IntVector& a, const IntVector& b, Int q) {
  IntVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = mod_floor(checked_add(a[i], b[i]), q);
  return out;
}

Int element_order(const IntVector& v, Int q) {
  Int g = q;
  for (Int x : v) g = gcd(g, x);
  return q / g;
}

LambdaGroup group_from_blocks(Int q, const std::vector<std::pair<Int, Int>>& blocks_a,
                              const std::vector<std::pair<Int, Int>>& blocks_b) {
  // blocks_*: (multiplicity, numerator) pairs laid out consecutively for each generator.
  std::vector<IntVector> gens;
  for (const auto* blocks : {&blocks_a, &blocks_b}) {
    if (blocks->empty()) continue;
    IntVector g;
    for (auto [mult, num] : *blocks)
      for (Int k = 0; k < mult; ++k) g.push_back(num);
    gens.push_back(std::move(g));
  }
  const std::size_t n = gens[0].size();
  if (n == 0) throw InvalidArgument("group parameters give no coordinates");
  return generated_group(n - 1, q, gens);
}

}  // namespace

LambdaGroup::LambdaGroup(std::size_t dim, Int denominator, std::vector<IntVector> elements)
    : dim_(dim), q_(denominator) {
  if (q_ < 1) throw InvalidArgument("group denominator must be positive");
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  std::set<IntVector> members(elements.begin(), elements.end());
  if (!members.count(IntVector(dim + 1, 0))) throw InvalidArgument("group must contain zero");
  for (const auto& e : elements) {
    if (e.size() != dim + 1) throw InvalidArgument("group element has the wrong length");
    for (Int x : e)
      if (x < 0 || x >= q_) throw InvalidArgument("group residue outside [0, q)");
  }
  for (const auto& a : elements)
    for (const auto& b : elements)
      if (!members.count(add_mod(a, b, q_))) throw InvalidArgument("element set is not closed under addition");
  elements_.reserve(elements.size());
  for (auto& e : elements) {
    Int sum = 0;
    for (Int x : e) sum = checked_add(sum, x);
    if (sum % q_ != 0) throw InvalidArgument("group element with non-integral height");
    const Int ord = element_order(e, q_);
    elements_.push_back(GroupElement{std::move(e), sum / q_, ord});
  }
}

bool LambdaGroup::contains(std::span<const Int> residues) const {
  IntVector key(residues.begin(), residues.end());
  auto it = std::lower_bound(elements_.begin(), elements_.end(), key,
                             [](const GroupElement& e, const IntVector& k) { return e.residues < k; });
  return it != elements_.end() && it->residues == key;
}

LambdaGroup generated_group(std::size_t dim, Int q, std::span<const IntVector> generators) {
  std::set<IntVector> seen{IntVector(dim + 1, 0)};
  std::vector<IntVector> frontier{IntVector(dim + 1, 0)};
  std::vector<IntVector> gens;
  for (const auto& g : generators) {
    if (g.size() != dim + 1) throw InvalidArgument("generator has the wrong length");
    IntVector r(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) r[i] = mod_floor(g[i], q);
    gens.push_back(std::move(r));
  }
  while (!frontier.empty()) {
    std::vector<IntVector> next;
    for (const auto& e : frontier)
      for (const auto& g : gens) {
        IntVector s = add_mod(e, g, q);
        if (seen.insert(s).second) next.push_back(std::move(s));
      }
    frontier = std::move(next);
  }
  Int common = q;
  for (const auto& e : seen)
    for (Int x : e) common = gcd(common, x);
  std::vector<IntVector> elements;
  for (auto e : seen) {
    for (Int& x : e) x /= common;
    elements.push_back(std::move(e));
  }
  return LambdaGroup(dim, q / common, std::move(elements));
}

LambdaGroup lambda_group_of_simplex(std::span<const IntVector> vertices) {
  if (vertices.empty()) throw InvalidArgument("simplex without vertices");
  const std::size_t d = vertices[0].size();
  if (vertices.size() != d + 1) throw InvalidArgument("a d-simplex needs exactly d+1 vertices");
  IntMatrix m(d + 1, d + 1);
  for (std::size_t i = 0; i <= d; ++i) {
    if (vertices[i].size() != d) throw InvalidArgument("vertex length mismatch");
    for (std::size_t c = 0; c < d; ++c) m(i, c) = vertices[i][c];
    m(i, d) = 1;
  }
  const SmithDecomposition snf = smith_normal_form(m);
  if (snf.rank != d + 1) throw InvalidArgument("simplex vertices are affinely dependent");
  // Λ = Z^{d+1} M^{-1} mod 1, generated by the rows of D^{-1} * left.
  const Int q = snf.diagonal[d];
  std::vector<IntVector> gens;
  for (std::size_t i = 0; i <= d; ++i) {
    const Int di = snf.diagonal[i];
    if (di == 1) continue;
    IntVector g(d + 1);
    for (std::size_t j = 0; j <= d; ++j) g[j] = checked_mul(mod_floor(snf.left(i, j), di), q / di);
    gens.push_back(std::move(g));
  }
  return generated_group(d, q, gens);
}

DeltaVector delta_from_group(const LambdaGroup& g) {
  DeltaVector out{std::vector<Int>(g.dim() + 1, 0)};
  for (const auto& e : g.elements()) {
    if (e.height < 0 || static_cast<std::size_t>(e.height) > g.dim()) throw Error("group element height out of range");
    ++out.entries[static_cast<std::size_t>(e.height)];
  }
  return out;
}

std::optional<std::size_t> pyramid_coordinate(const LambdaGroup& g) {
  for (std::size_t j = 0; j <= g.dim(); ++j) {
    bool zero = true;
    for (const auto& e : g.elements()) zero = zero && e.residues[j] == 0;
    if (zero) return j;
  }
  return std::nullopt;
}

LambdaGroup build_lambda_half(std::size_t d) {
  if ((d + 1) % 2 != 0) throw InvalidArgument("⟨(1/2,...,1/2)⟩ needs d+1 even");
  return group_from_blocks(2, {{static_cast<Int>(d + 1), 1}}, {});
}

LambdaGroup build_lambda_ab(Int a, Int b) {
  if (a < 0 || b < 0 || a + b < 1) throw InvalidArgument("Λ(a,b) needs a, b >= 0 and a+b >= 1");
  if ((a + 2 * b) % 3 != 0) throw InvalidArgument("Λ(a,b): (a+2b)/3 is not an integer");
  return group_from_blocks(3, {{a, 1}, {b, 2}}, {});
}

LambdaGroup build_lambda1_abc(Int a, Int b, Int c) {
  if (a < 0 || b < 0 || c < 0 || a + b + c < 1) throw InvalidArgument("Λ1(a,b,c) needs non-negative parameters");
  if (a + c == 0) throw InvalidArgument("Λ1(a,b,c) with a+c = 0 has order 2");
  if ((a + 2 * b + 3 * c) % 4 != 0 || (a + c) % 2 != 0 || (3 * a + 2 * b + c) % 4 != 0)
    throw InvalidArgument("Λ1(a,b,c): non-integral heights");
  return group_from_blocks(4, {{a, 1}, {b, 2}, {c, 3}}, {});
}

LambdaGroup build_lambda2_abc(Int a, Int b, Int c) {
  if (a < 0 || b < 0 || c < 0) throw InvalidArgument("Λ2(a,b,c) needs non-negative parameters");
  if (a + b == 0 || b + c == 0 || a + c == 0) throw InvalidArgument("Λ2(a,b,c): generators degenerate");
  if ((a + b) % 2 != 0 || (b + c) % 2 != 0 || (a + c) % 2 != 0)
    throw InvalidArgument("Λ2(a,b,c): parity violation");
  return group_from_blocks(2, {{a, 1}, {b, 1}, {c, 0}}, {{a, 0}, {b, 1}, {c, 1}});
}

std::vector<Int> group_params_from_exponents(GroupCase c, std::span<const Int> e) {
  std::vector<Int> out;
  switch (c) {
    case GroupCase::V3:
      if (e.size() != 2) throw InvalidArgument("case V3 needs two exponents");
      out = {-e[0] + 2 * e[1], 2 * e[0] - e[1]};
      break;
    case GroupCase::V4_1:
      if (e.size() != 3) throw InvalidArgument("case V4-1' needs three exponents");
      if (!(e[0] < e[1] && e[1] < e[2])) throw InvalidArgument("case V4-1' needs i1 < i2 < i3");
      out = {-e[0] + e[1] + e[2], e[0] - 2 * e[1] + e[2], e[0] + e[1] - e[2]};
      break;
    case GroupCase::V4_2:
      if (e.size() != 3) throw InvalidArgument("case V4-2' needs three exponents");
      out = {e[0] - e[1] + e[2], -2 * e[0] + e[1] + e[2], e[0] + e[1] - e[2]};
      break;
    case GroupCase::V4_Lambda2:
      if (e.size() != 3) throw InvalidArgument("case V4-Λ2 needs three exponents");
      out = {-e[0] + e[1] + e[2], e[0] - e[1] + e[2], e[0] + e[1] - e[2]};
      break;
  }
  for (Int v : out)
    if (v < 0) throw InvalidArgument("negative multiplicity: the case does not apply to these exponents");
  return out;
}

std::vector<Int> invariant_factors(const LambdaGroup& g) {
  const std::size_t n = g.dim() + 1;
  const Int q = g.denominator();
  if (g.order() == 1) return {};
  std::vector<IntVector> rows;
  for (const auto& e : g.elements()) rows.push_back(e.residues);
  for (std::size_t i = 0; i < n; ++i) {
    IntVector r(n, 0);
    r[i] = q;
    rows.push_back(std::move(r));
  }
  const IntMatrix b = hermite_normal_form(IntMatrix::from_rows(rows, n)).h;
  IntMatrix basis(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) basis(r, c) = b(r, c);
  // q Z^n = X * L with X = q * basis^{-1}; G = L / q Z^n has the invariant factors of X.
  const Adjugate adj = adjugate(basis);
  IntMatrix x(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      const Int num = checked_mul(q, adj.adj(r, c));
      if (num % adj.det != 0) throw Error("invariant_factors: non-integral relation matrix");
      x(r, c) = num / adj.det;
    }
  std::vector<Int> out;
  for (Int v : smith_normal_form(x).diagonal)
    if (v > 1) out.push_back(v);
  return out;
}

CanonicalGroupForm canonical_group_form(const LambdaGroup& g) {
  const std::size_t n = g.dim() + 1;
  const Int q = g.denominator();
  const std::vector<Int> inv = invariant_factors(g);
  const std::size_t r = inv.size();

  std::vector<std::vector<std::size_t>> candidates(r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t k = 0; k < g.order(); ++k)
      if (g.elements()[k].order == inv[i]) candidates[i].push_back(k);

  std::vector<std::vector<Int>> best;
  std::vector<std::size_t> best_order;
  bool have_best = false;
  std::vector<std::size_t> choice(r);

  auto evaluate = [&]() {
    // Check that the chosen elements generate the whole group.
    std::set<IntVector> span{IntVector(n, 0)};
    for (std::size_t i = 0; i < r; ++i) {
      std::set<IntVector> grown;
      const IntVector& gen = g.elements()[choice[i]].residues;
      for (const auto& s : span) {
        IntVector cur = s;
        for (Int k = 0; k < inv[i]; ++k) {
          grown.insert(cur);
          cur = add_mod(cur, gen, q);
        }
      }
      span = std::move(grown);
    }
    if (span.size() != g.order()) return;
    std::vector<std::vector<Int>> cols(n, std::vector<Int>(r));
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t i = 0; i < r; ++i) cols[j][i] = g.elements()[choice[i]].residues[j];
    std::vector<std::size_t> order(n);
    for (std::size_t j = 0; j < n; ++j) order[j] = j;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return cols[a] < cols[b]; });
    std::vector<std::vector<Int>> sorted;
    sorted.reserve(n);
    for (std::size_t j : order) sorted.push_back(cols[j]);
    if (!have_best || sorted < best) {
      best = std::move(sorted);
      best_order = std::move(order);
      have_best = true;
    }
  };

  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == r) {
      evaluate();
      return;
    }
    for (std::size_t k : candidates[i]) {
      choice[i] = k;
      rec(i + 1);
    }
  };
  rec(0);
  if (!have_best) {
    best_order.resize(n);
    for (std::size_t j = 0; j < n; ++j) best_order[j] = j;
    best.assign(n, {});
  }

  std::ostringstream os;
  os << "d=" << g.dim() << ";q=" << q << ";inv=";
  for (std::size_t i = 0; i < r; ++i) os << (i ? "," : "") << inv[i];
  os << ";cols=";
  for (std::size_t j = 0; j < n; ++j) {
    os << (j ? " " : "");
    for (std::size_t i = 0; i < best[j].size(); ++i) os << (i ? "," : "") << best[j][i];
  }
  return {os.str(), std::move(best_order)};
}

}  // namespace latpoly
