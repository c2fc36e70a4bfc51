#include "latpoly/ehrhart.hpp"

#include <sstream>

namespace latpoly {

std::size_t DeltaVector::degree() const {
  std::size_t s = 0;
  for (std::size_t i = 0; i < entries.size(); ++i)
    if (entries[i] != 0) s = i;
  return s;
}

Int DeltaVector::volume() const {
  Int v = 0;
  for (Int e : entries) v = checked_add(v, e);
  return v;
}

std::vector<Int> DeltaVector::exponents() const {
  std::vector<Int> out;
  for (std::size_t i = 1; i < entries.size(); ++i)
    for (Int k = 0; k < entries[i]; ++k) out.push_back(static_cast<Int>(i));
  return out;
}

DeltaVector DeltaVector::padded(std::size_t d) const {
  if (d < dim()) throw InvalidArgument("cannot pad a δ-vector to a smaller dimension");
  DeltaVector out = *this;
  out.entries.resize(d + 1, 0);
  return out;
}

std::string DeltaVector::polynomial() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const Int c = entries[i];
    if (c == 0) continue;
    if (!first) os << (c > 0 ? "+" : "-");
    else if (c < 0) os << "-";
    first = false;
    const Int a = c < 0 ? -c : c;
    if (i == 0) {
      os << a;
      continue;
    }
    if (a != 1) os << a;
    os << 't';
    if (i > 1) os << '^' << i;
  }
  if (first) os << '0';
  return os.str();
}

DeltaVector delta_from_exponents(std::span<const Int> exponents, std::size_t d) {
  DeltaVector out{std::vector<Int>(d + 1, 0)};
  out.entries[0] = 1;
  for (Int e : exponents) {
    if (e < 1 || static_cast<std::size_t>(e) > d) throw InvalidArgument("exponent outside 1..d");
    ++out.entries[static_cast<std::size_t>(e)];
  }
  return out;
}

Int count_points(const LatticePolytope& p, Int n) {
  if (n == 0) return 1;
  return PointEnumerator(p).count(n);
}

Int interior_count(const LatticePolytope& p, Int n) { return PointEnumerator(p).count(n, true); }

DeltaVector delta_from_count_sequence(std::span<const Int> counts, std::size_t d) {
  if (counts.size() < d + 1) throw InvalidArgument("need counts for n = 0..d");
  DeltaVector out{std::vector<Int>(d + 1, 0)};
  const Int di = static_cast<Int>(d);
  for (std::size_t n = 0; n <= d; ++n) {
    Int rest = counts[n];
    const Int ni = static_cast<Int>(n);
    for (std::size_t i = 0; i < n; ++i)
      rest = checked_sub(rest, checked_mul(out.entries[i], binomial(ni + di - static_cast<Int>(i), di)));
    out.entries[n] = rest;  // C(d, d) = 1
  }
  if (out.entries[0] != 1) throw Error("δ_0 != 1: " + out.polynomial());
  for (Int e : out.entries)
    if (e < 0) throw Error("negative δ entry: " + out.polynomial());
  return out;
}

DeltaVector delta_from_counts(const LatticePolytope& p) {
  const LatticePolytope q = affine_lattice_normalize(p).polytope;
  const std::size_t d = q.dim();
  DeltaVector out{std::vector<Int>(d + 1, 0)};
  out.entries[0] = 1;
  if (d > 0) {
    const PointEnumerator e(q);
    const std::size_t top = (d + 1) / 2;
    const std::size_t low = d - top;
    const Int dd = static_cast<Int>(d + 1);
    auto series = [&](const std::vector<Int>& vals, std::size_t k) {
      Int acc = 0;
      for (std::size_t j = 0; j <= k; ++j) {
        const Int term = checked_mul(binomial(dd, static_cast<Int>(j)), vals[k - j]);
        acc = j % 2 == 0 ? checked_add(acc, term) : checked_sub(acc, term);
      }
      return acc;
    };
    std::vector<Int> counts(low + 1, 1);
    for (std::size_t n = 1; n <= low; ++n) counts[n] = e.count(static_cast<Int>(n));
    for (std::size_t i = 1; i <= low; ++i) out.entries[i] = series(counts, i);
    std::vector<Int> inner(top + 1, 0);
    for (std::size_t n = 1; n <= top; ++n) inner[n] = e.count(static_cast<Int>(n), true);
    for (std::size_t k = 1; k <= top; ++k) out.entries[d + 1 - k] = series(inner, k);
  }
  for (Int x : out.entries)
    if (x < 0) throw Error("negative δ entry: " + out.polynomial());
  return out;
}

Int ehrhart_from_delta(const DeltaVector& delta, Int n) {
  if (n < 0) throw InvalidArgument("ehrhart_from_delta needs n >= 0");
  const Int d = static_cast<Int>(delta.dim());
  Int total = 0;
  for (std::size_t i = 0; i < delta.entries.size(); ++i)
    total = checked_add(total, checked_mul(delta.entries[i], binomial(n + d - static_cast<Int>(i), d)));
  return total;
}

DeltaBasicsReport check_delta_basics(const LatticePolytope& p) {
  if (!is_full_dimensional(p)) throw InvalidArgument("check_delta_basics needs a full-dimensional polytope");
  DeltaBasicsReport r;
  const DeltaVector delta = delta_from_counts(p);
  const auto& e = delta.entries;
  const std::size_t d = p.dim();
  const PointEnumerator en(p);
  const Int points = d == 0 ? 1 : en.count(1);
  const Int interior = en.count(1, true);
  const Int d1 = d >= 1 ? e[1] : 0;

  {
    bool ok = e[0] == 1;
    if (d >= 1) ok = ok && e[1] == points - static_cast<Int>(d + 1) && e[d] == interior && e[1] >= e[d];
    r.pass[0] = ok;
    std::ostringstream os;
    os << "δ_0=" << e[0] << " points=" << points << " interior=" << interior << " δ=" << delta.polynomial();
    r.details[0] = os.str();
  }
  {
    bool ok = true;
    for (Int v : e) ok = ok && v >= 0;
    r.pass[1] = ok;
    r.details[1] = delta.polynomial();
  }
  {
    bool ok = true;
    if (d >= 1 && e[d] != 0)
      for (std::size_t i = 1; i + 1 <= d; ++i) ok = ok && e[i] >= d1;
    r.pass[2] = ok;
    r.details[2] = e[d] != 0 ? "δ_d != 0, checked δ_i >= δ_1" : "δ_d = 0, vacuous";
  }
  {
    const Int vol = normalized_volume(p);
    r.pass[3] = vol == delta.volume();
    r.details[3] = "triangulation volume " + std::to_string(vol) + ", Σδ " + std::to_string(delta.volume());
  }
  return r;
}

bool stanley_inequalities(const DeltaVector& delta) {
  const auto& e = delta.entries;
  const std::size_t s = delta.degree();
  Int lhs = 0, rhs = 0;
  for (std::size_t i = 0; i <= s / 2; ++i) {
    lhs = checked_add(lhs, e[i]);
    rhs = checked_add(rhs, e[s - i]);
    if (lhs > rhs) return false;
  }
  return true;
}

bool hibi_inequalities(const DeltaVector& delta) {
  const auto& e = delta.entries;
  const std::size_t d = delta.dim();
  if (d < 3) return true;
  Int lhs = 0, rhs = 0;
  for (std::size_t i = 1; i <= (d - 1) / 2; ++i) {
    lhs = checked_add(lhs, e[d - i]);
    rhs = checked_add(rhs, e[i + 1]);
    if (lhs > rhs) return false;
  }
  return true;
}

bool triangulation_split_check(const LatticePolytope& p, const LatticePolytope& t1, const LatticePolytope& t2,
                               const LatticePolytope& common) {
  const Int d = static_cast<Int>(p.dim());
  for (Int n = 0; n <= d + 2; ++n) {
    const Int lhs = count_lattice_points(p, n);
    const Int rhs = count_lattice_points(t1, n) + count_lattice_points(t2, n) - count_lattice_points(common, n);
    if (lhs != rhs) return false;
  }
  return true;
}

DeltaVector delta_in_ambient(const LatticePolytope& q) { return delta_from_counts(q).padded(q.dim()); }

bool monotonicity_check(const LatticePolytope& p, const LatticePolytope& q) {
  if (p.dim() != q.dim()) throw InvalidArgument("monotonicity_check: dimensions differ");
  for (const auto& v : q.vertices())
    if (!point_in_polytope(p, to_rational(v))) throw InvalidArgument("monotonicity_check: Q is not contained in P");
  const DeltaVector dp = delta_in_ambient(p);
  const DeltaVector dq = delta_in_ambient(q);
  for (std::size_t i = 0; i < dp.entries.size(); ++i)
    if (dp.entries[i] < dq.entries[i]) return false;
  return true;
}

}  // namespace latpoly
