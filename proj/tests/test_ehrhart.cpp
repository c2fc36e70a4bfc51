#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "latpoly/ehrhart.hpp"
#include "poly_support.hpp"

using namespace latpoly;
using testsupport::box_count;
using testsupport::random_polytope;
using testsupport::uniform;

namespace {

LatticePolytope unit_square() { return LatticePolytope(2, {{0, 0}, {1, 0}, {0, 1}, {1, 1}}); }
LatticePolytope cross_polygon() { return LatticePolytope(2, {{1, 0}, {-1, 0}, {0, 1}, {0, -1}}); }

}  // namespace

TEST_CASE("count examples") {
  CHECK(count_points(unit_square(), 2) == 9);
  CHECK(count_points(unit_square(), 0) == 1);
  CHECK(interior_count(unit_square(), 1) == 0);
  CHECK(interior_count(unit_square(), 2) == 1);
  CHECK(interior_count(cross_polygon(), 1) == 1);
}

TEST_CASE("delta examples") {
  CHECK(delta_from_counts(unit_square()).polynomial() == "1+t");
  CHECK(delta_from_counts(cross_polygon()) == DeltaVector{{1, 2, 1}});
  const LatticePolytope reeve(3, {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 1, 3}});
  CHECK(delta_from_counts(reeve) == DeltaVector{{1, 0, 2, 0}});
  CHECK(delta_from_exponents(std::vector<Int>{1, 2}, 3) == DeltaVector{{1, 1, 1, 0}});
  CHECK(DeltaVector{{1, 0, 2, 0}}.volume() == 3);
  CHECK(DeltaVector{{1, 0, 2, 0}}.degree() == 2);
  CHECK(DeltaVector{{1, 0, 2, 0}}.exponents() == std::vector<Int>{2, 2});
  CHECK(DeltaVector{{1, 1}}.padded(3) == DeltaVector{{1, 1, 0, 0}});
}

TEST_CASE("ehrhart_from_delta examples") {
  CHECK(ehrhart_from_delta(DeltaVector{{1, 2, 1}}, 2) == 13);
  CHECK(ehrhart_from_delta(DeltaVector{{1, 1, 0}}, 3) == 16);
  CHECK(ehrhart_from_delta(DeltaVector{{1, 0, 2, 0}}, 1) == 4);
  CHECK(ehrhart_from_delta(DeltaVector{{1, 1, 1}}, 1) == 4);
}

TEST_CASE("delta from count sequence rejects bad input") {
  CHECK_THROWS_AS(delta_from_count_sequence(std::vector<Int>{2, 4, 9}, 2), Error);
  CHECK_THROWS_AS(delta_from_count_sequence(std::vector<Int>{1, 1, 1}, 2), Error);
}

TEST_CASE("stanley and hibi examples") {
  CHECK(stanley_inequalities(DeltaVector{{1, 0, 1, 0}}));
  CHECK_FALSE(stanley_inequalities(DeltaVector{{1, 1, 0, 0, 1}}));
  CHECK(hibi_inequalities(DeltaVector{{1, 1, 1}}));
  CHECK_FALSE(hibi_inequalities(DeltaVector{{1, 0, 0, 1, 0}}));
  CHECK(hibi_inequalities(DeltaVector{{1, 0, 1, 0, 0}}));
}

TEST_CASE("basic delta facts hold on examples") {
  for (const auto& p : {unit_square(), cross_polygon(),
                        LatticePolytope(3, {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 1, 3}})}) {
    const auto r = check_delta_basics(p);
    CHECK(r.all());
  }
}

TEST_CASE("property: sweep counts agree with box counts, interior included") {
  for (int trial = 0; trial < 40; ++trial) {
    const auto d = static_cast<std::size_t>(uniform(1, 3));
    const auto p = random_polytope(d, d + static_cast<std::size_t>(uniform(1, 3)), -2, 2);
    for (Int n = 1; n <= 3; ++n) {
      CHECK(count_points(p, n) == box_count(p, n, false));
      CHECK(interior_count(p, n) == box_count(p, n, true));
    }
  }
}

TEST_CASE("property: delta reproduces counts and satisfies basic facts and Stanley") {
  for (int trial = 0; trial < 30; ++trial) {
    const auto d = static_cast<std::size_t>(uniform(1, 3));
    const auto p = random_polytope(d, d + static_cast<std::size_t>(uniform(1, 3)), -2, 2);
    const auto delta = delta_from_counts(p);
    for (Int n = 0; n <= static_cast<Int>(d) + 3; ++n) CHECK(ehrhart_from_delta(delta, n) == box_count(p, n, false));
    CHECK(check_delta_basics(p).all());
    CHECK(stanley_inequalities(delta));
    CHECK(hibi_inequalities(delta));
    CHECK(delta.volume() == normalized_volume(p));
  }
}

TEST_CASE("property: reciprocity delta equals forward delta from all dilates") {
  for (int trial = 0; trial < 20; ++trial) {
    const auto d = static_cast<std::size_t>(uniform(2, 5));
    const auto p = random_polytope(d, d + static_cast<std::size_t>(uniform(1, 2)), -1, 1);
    if (p.dim() != d) continue;
    std::vector<Int> counts;
    for (Int n = 0; n <= static_cast<Int>(d); ++n) counts.push_back(count_points(p, n));
    CHECK(delta_from_counts(p) == delta_from_count_sequence(counts, d));
  }
}

TEST_CASE("triangulation split check on a square") {
  const LatticePolytope t1(2, {{0, 0}, {1, 0}, {1, 1}});
  const LatticePolytope t2(2, {{0, 0}, {0, 1}, {1, 1}});
  const LatticePolytope diag(2, {{0, 0}, {1, 1}});
  CHECK(triangulation_split_check(unit_square(), t1, t2, diag));
  const LatticePolytope wrong(2, {{0, 0}, {2, 0}});
  CHECK_FALSE(triangulation_split_check(unit_square(), t1, t2, wrong));
}

TEST_CASE("monotonicity") {
  const LatticePolytope seg(2, {{0, 0}, {1, 0}});
  CHECK(delta_in_ambient(seg) == DeltaVector{{1, 0, 0}});
  CHECK_THROWS(monotonicity_check(unit_square(), LatticePolytope(2, {{0, 0}, {2, 0}, {0, 1}})));
  const LatticePolytope tri(2, {{0, 0}, {1, 0}, {0, 1}});
  CHECK(monotonicity_check(unit_square(), tri));
  CHECK(monotonicity_check(cross_polygon(), tri));
  CHECK(monotonicity_check(cross_polygon(), seg));
}
