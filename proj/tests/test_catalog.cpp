#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "latpoly/catalog.hpp"
#include "latpoly/simplex_group.hpp"
#include "poly_support.hpp"

using namespace latpoly;
using testsupport::uniform;

namespace {

LatticePolytope unit_square() { return LatticePolytope(2, {{0, 0}, {1, 0}, {0, 1}, {1, 1}}); }

LatticePolytope poly(std::size_t d, std::vector<IntVector> v) { return LatticePolytope(d, std::move(v)); }

}  // namespace

TEST_CASE("family ids and aliases") {
  CHECK(canonical_family_id("Delta41") == std::optional<std::string>("Δ41"));
  CHECK(canonical_family_id("D4_2") == std::optional<std::string>("Δ42"));
  CHECK(canonical_family_id("Δ2") == std::optional<std::string>("Δ2"));
  CHECK(canonical_family_id("q4_9") == std::optional<std::string>("Q4_9"));
  CHECK(canonical_family_id("b4") == std::optional<std::string>("B4"));
  CHECK_FALSE(canonical_family_id("Z9").has_value());
  CHECK(table2_ids().size() == 24);
  CHECK(CatalogEntry{"Δ3", {1, 2}, 0}.to_string() == "Δ3 (i1=1,i2=2)");
}

TEST_CASE("make_simplex examples") {
  CHECK(make_simplex("Δ2", std::vector<Int>{2}) == poly(3, {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 1, 2}}));
  CHECK(make_simplex("Δ3", std::vector<Int>{1, 2}) == poly(2, {{0, 0}, {1, 0}, {2, 3}}));
  const auto d43 = make_simplex("Δ43", std::vector<Int>{1, 1, 1});
  CHECK(d43 == poly(2, {{0, 0}, {2, 0}, {0, 2}}));
  CHECK(delta_from_counts(d43) == DeltaVector{{1, 3, 0}});
  CHECK_THROWS_AS(make_simplex("Δ41", std::vector<Int>{1, 1, 2}), InvalidArgument);
  CHECK_THROWS_AS(make_simplex("Δ3", std::vector<Int>{1, 3}), InvalidArgument);
  CHECK_THROWS_AS(make_simplex("Δ42", std::vector<Int>{1, 1, 3}), InvalidArgument);
}

TEST_CASE("the printed Δ41 condition gives negative summation bounds") {
  // i1 + i3 < 2 i2 makes the first range end below zero; the generator refuses it.
  CHECK_THROWS_AS(make_simplex("Δ41", std::vector<Int>{1, 3, 4}), InvalidArgument);
  CHECK_NOTHROW(make_simplex("Δ41", std::vector<Int>{1, 2, 3}));
}

TEST_CASE("Table 1 instances have the claimed delta, volume and no pyramid") {
  const auto inst = table1_instances(7);
  CHECK(inst.size() > 20);
  for (const auto& e : inst) {
    CAPTURE(e.to_string());
    const auto p = make_entry(e);
    const auto delta = delta_from_counts(p);
    CHECK(delta == claimed_delta(e));
    CHECK(delta.volume() == normalized_volume(p));
    CHECK_FALSE(is_pyramid_simplex(lambda_group_of_simplex(p.vertices())));
    CHECK(strip_pyramids(p).apexes == 0);
  }
}

TEST_CASE("Table 2 examples and claims") {
  CHECK(make_table2("P2") == unit_square());
  CHECK(make_table2("Q4_2") == poly(2, {{1, 0}, {-1, 0}, {0, 1}, {0, -1}}));
  CHECK(make_table2("S4_4").dim() == 6);
  for (const auto& id : table2_ids()) {
    CAPTURE(id);
    const auto p = make_table2(id);
    CHECK(is_full_dimensional(p));
    CHECK_FALSE(is_simplex(p));
    CHECK(delta_from_counts(p) == claimed_delta({id, {}, 0}));
    CHECK(spans_lattice(p));
    CHECK(strip_pyramids(p).apexes == 0);
  }
}

TEST_CASE("Table 3 examples and claims") {
  const auto a1 = make_table3("A4_1", 2);
  CHECK(a1.dim() == 4);
  CHECK(a1.num_vertices() == 6);
  CHECK(std::count(a1.vertices().begin(), a1.vertices().end(), IntVector{1, 0, -1, 0}) == 1);
  const auto a3 = make_table3("A4_3", 2);
  CHECK(a3.dim() == 6);
  CHECK(std::count(a3.vertices().begin(), a3.vertices().end(), IntVector{0, 0, -1, 1, 1, 0}) == 1);
  CHECK(delta_from_counts(make_table3("B4", 3)) == DeltaVector{{1, 1, 0, 2, 0, 0, 0}});
  CHECK_THROWS_AS(make_table3("B4", 1), InvalidArgument);
  for (Int k = 2; k <= 3; ++k)
    for (const auto& id : table3_ids()) {
      CAPTURE(id);
      CAPTURE(k);
      const auto p = make_table3(id, k);
      CHECK(delta_from_counts(p) == claimed_delta({id, {k}, 0}));
      CHECK_FALSE(spans_lattice(p));
      CHECK(strip_pyramids(p).apexes == 0);
    }
  CHECK(half_sum_invariant(make_table3("A4_1", 2)) == 4);
  CHECK(half_sum_invariant(make_table3("A4_2", 2)) == 6);
  CHECK(half_sum_invariant(make_table3("A4_3", 3)) == 10);
}

TEST_CASE("pyramid examples") {
  const auto pt = LatticePolytope(0, {IntVector{}});
  CHECK(pyramid(pt) == poly(1, {{0}, {1}}));
  const auto py = pyramid(unit_square());
  CHECK(py.dim() == 3);
  CHECK(delta_from_counts(py) == DeltaVector{{1, 1, 0, 0}});
  const auto d2 = pyramid(make_simplex("Δ2", std::vector<Int>{2}));
  CHECK(delta_from_counts(d2) == DeltaVector{{1, 0, 1, 0, 0}});
}

TEST_CASE("strip_pyramids examples") {
  const auto s = strip_pyramids(pyramid(pyramid(unit_square())));
  CHECK(s.apexes == 2);
  CHECK(s.core.dim() == 2);
  CHECK(s.core.num_vertices() == 4);
  CHECK(strip_pyramids(make_simplex("Δ2", std::vector<Int>{2})).apexes == 0);
  const auto b = strip_pyramids(pyramid(make_table3("B4", 2)));
  CHECK(b.apexes == 1);
  CHECK(b.core.dim() == 4);
  CHECK(apply_witness(b.steps, pyramid(make_table3("B4", 2))) == b.core);
}

TEST_CASE("spans_lattice examples") {
  CHECK(spans_lattice(unit_square()));
  CHECK_FALSE(spans_lattice(make_simplex("Δ2", std::vector<Int>{2})));
  for (Int k = 2; k <= 3; ++k) CHECK_FALSE(spans_lattice(make_table3("B4", k)));
}

TEST_CASE("half_sum_invariant examples") {
  CHECK(half_sum_invariant(poly(1, {{0}, {1}})) == 0);
  for (Int k = 2; k <= 4; ++k) {
    CHECK(half_sum_invariant(make_table3("A4_1", k)) == 2 * k);
    CHECK(half_sum_invariant(make_table3("A4_3", k)) == 2 * k + 4);
  }
}

TEST_CASE("property: half-sum invariant is unchanged by unimodular maps and translations") {
  for (int trial = 0; trial < 40; ++trial) {
    const auto d = static_cast<std::size_t>(uniform(1, 4));
    const auto p = testsupport::random_polytope(d, d + 2, -2, 2);
    IntVector t(d);
    for (auto& x : t) x = uniform(-5, 5);
    CHECK(half_sum_invariant(testsupport::image(p, testsupport::random_unimodular(d), t)) == half_sum_invariant(p));
  }
}

// Subset brute force for the half-sum invariant.
TEST_CASE("property: half-sum invariant matches subset enumeration") {
  for (int trial = 0; trial < 40; ++trial) {
    const auto d = static_cast<std::size_t>(uniform(1, 3));
    const auto p = testsupport::random_polytope(d, d + 3, -3, 3);
    const auto& v = p.vertices();
    Int best = 0;
    for (std::size_t mask = 0; mask < (std::size_t{1} << v.size()); ++mask) {
      Int size = 0;
      IntVector sum(d, 0);
      for (std::size_t i = 0; i < v.size(); ++i)
        if (mask >> i & 1) {
          ++size;
          for (std::size_t c = 0; c < d; ++c) sum[c] += v[i][c];
        }
      bool ok = size % 2 == 0;
      for (Int s : sum) ok = ok && s % 2 == 0;
      if (ok) best = std::max(best, size);
    }
    CHECK(half_sum_invariant(p) == best);
  }
}

TEST_CASE("property: pyramids preserve delta") {
  for (int trial = 0; trial < 20; ++trial) {
    const auto d = static_cast<std::size_t>(uniform(1, 3));
    const auto p = testsupport::random_polytope(d, d + 2, -2, 2);
    CHECK(delta_from_counts(pyramid(p)) == delta_from_counts(p).padded(d + 1));
    CHECK(strip_pyramids(pyramid(p)).apexes >= 1);
  }
}

TEST_CASE("feasible_delta examples") {
  CHECK(feasible_delta(2, std::vector<Int>{2}, 3));
  CHECK(feasible_delta(3, std::vector<Int>{1, 2}, 2));
  CHECK_FALSE(feasible_delta(3, std::vector<Int>{1, 2}, 2, true));
  CHECK(feasible_delta(4, std::vector<Int>{1, 2, 3}, 5));
  CHECK_FALSE(feasible_delta(4, std::vector<Int>{1, 1, 3}, 3));
  CHECK_THROWS_AS(feasible_delta(3, std::vector<Int>{2, 1}, 3), InvalidArgument);
  CHECK_THROWS_AS(feasible_delta(5, std::vector<Int>{1, 1, 1, 1}, 3), InvalidArgument);
}
