#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "latpoly/simplex_group.hpp"
#include "poly_support.hpp"

using namespace latpoly;
using testsupport::uniform;

namespace {

std::vector<IntVector> delta2_vertices(std::size_t d) {
  std::vector<IntVector> v(1, IntVector(d, 0));
  for (std::size_t i = 0; i + 1 < d; ++i) {
    IntVector e(d, 0);
    e[i] = 1;
    v.push_back(e);
  }
  IntVector top(d, 1);
  top[d - 1] = 2;
  v.push_back(top);
  return v;
}

}  // namespace

TEST_CASE("group of a simplex: examples") {
  const auto g = lambda_group_of_simplex(delta2_vertices(3));
  CHECK(g.order() == 2);
  CHECK(g.denominator() == 2);
  CHECK(g.contains(IntVector{1, 1, 1, 1}));
  CHECK(delta_from_group(g) == DeltaVector{{1, 0, 1, 0}});

  const std::vector<IntVector> tri{{0, 0}, {1, 0}, {2, 3}};
  const auto h = lambda_group_of_simplex(tri);
  CHECK(h.order() == 3);
  CHECK(delta_from_group(h) == DeltaVector{{1, 1, 1}});
  CHECK_FALSE(is_pyramid_simplex(h));

  const std::vector<IntVector> unimodular{{0, 0}, {1, 0}, {0, 1}};
  const auto u = lambda_group_of_simplex(unimodular);
  CHECK(u.order() == 1);
  CHECK(pyramid_coordinate(u).has_value());
  CHECK_THROWS_AS(lambda_group_of_simplex(std::vector<IntVector>{{0, 0}, {1, 1}, {2, 2}}), InvalidArgument);
}

TEST_CASE("group constructor validates") {
  CHECK_THROWS_AS(LambdaGroup(1, 2, {{0, 0}, {1, 0}}), InvalidArgument);
  CHECK_THROWS_AS(LambdaGroup(1, 3, {{0, 0}, {1, 2}}), InvalidArgument);
  CHECK_NOTHROW(LambdaGroup(1, 2, {{0, 0}, {1, 1}}));
}

TEST_CASE("builders") {
  CHECK(delta_from_group(build_lambda_half(3)) == DeltaVector{{1, 0, 1, 0}});
  CHECK_THROWS_AS(build_lambda_half(2), InvalidArgument);
  CHECK(delta_from_group(build_lambda_ab(3, 0)) == DeltaVector{{1, 1, 1}});
  CHECK(delta_from_group(build_lambda_ab(1, 1)) == DeltaVector{{1, 2}});
  CHECK_THROWS_AS(build_lambda_ab(1, 0), InvalidArgument);
  CHECK_THROWS_AS(build_lambda_ab(0, 0), InvalidArgument);
  CHECK(build_lambda1_abc(2, 0, 2).order() == 4);
  CHECK(build_lambda1_abc(2, 0, 2).denominator() == 4);
  CHECK_THROWS_AS(build_lambda1_abc(0, 2, 0), InvalidArgument);
  CHECK_THROWS_AS(build_lambda1_abc(1, 0, 0), InvalidArgument);
  const auto k = build_lambda2_abc(2, 2, 2);
  CHECK(k.order() == 4);
  CHECK(k.denominator() == 2);
  CHECK(delta_from_group(k) == DeltaVector{{1, 0, 3, 0, 0, 0}});
  CHECK_THROWS_AS(build_lambda2_abc(1, 2, 2), InvalidArgument);
  CHECK_THROWS_AS(build_lambda2_abc(2, 0, 0), InvalidArgument);
}

TEST_CASE("parameters from exponents") {
  CHECK(group_params_from_exponents(GroupCase::V3, std::vector<Int>{1, 2}) == std::vector<Int>{3, 0});
  CHECK(group_params_from_exponents(GroupCase::V4_2, std::vector<Int>{1, 2, 3}) == std::vector<Int>{2, 3, 0});
  CHECK_THROWS_AS(group_params_from_exponents(GroupCase::V4_1, std::vector<Int>{1, 1, 2}), InvalidArgument);
  CHECK(group_params_from_exponents(GroupCase::V4_Lambda2, std::vector<Int>{2, 2, 2}) == std::vector<Int>{2, 2, 2});
}

TEST_CASE("property: parameter maps realise the requested exponents") {
  for (Int i1 = 1; i1 <= 5; ++i1)
    for (Int i2 = i1; i2 <= 2 * i1; ++i2) {
      const auto p = group_params_from_exponents(GroupCase::V3, std::vector<Int>{i1, i2});
      const auto g = build_lambda_ab(p[0], p[1]);
      CHECK(delta_from_group(g).exponents() == std::vector<Int>{i1, i2});
    }
  for (Int i1 = 1; i1 <= 4; ++i1)
    for (Int i2 = i1; i2 <= 6; ++i2)
      for (Int i3 = i2; i3 <= i1 + i2; ++i3) {
        const std::vector<Int> e{i1, i2, i3};
        try {
          const auto p = group_params_from_exponents(GroupCase::V4_Lambda2, e);
          const auto g = build_lambda2_abc(p[0], p[1], p[2]);
          CHECK(delta_from_group(g).exponents() == e);
        } catch (const InvalidArgument&) {
        }
        try {
          const auto p = group_params_from_exponents(GroupCase::V4_2, e);
          const auto g = build_lambda1_abc(p[0], p[1], p[2]);
          CHECK(delta_from_group(g).exponents() == e);
        } catch (const InvalidArgument&) {
        }
      }
}

TEST_CASE("invariant factors") {
  CHECK(invariant_factors(build_lambda1_abc(2, 0, 2)) == std::vector<Int>{4});
  CHECK(invariant_factors(build_lambda2_abc(2, 2, 2)) == std::vector<Int>{2, 2});
  CHECK(invariant_factors(build_lambda_half(1)) == std::vector<Int>{2});
}

TEST_CASE("canonical form") {
  CHECK(canonical_group_form(build_lambda_ab(3, 0)).key == canonical_group_form(build_lambda_ab(0, 3)).key);
  CHECK(canonical_group_form(build_lambda1_abc(2, 0, 2)).key != canonical_group_form(build_lambda2_abc(2, 2, 2)).key);
  CHECK(canonical_group_form(build_lambda_ab(3, 0)).key != canonical_group_form(build_lambda_ab(1, 1)).key);
}

TEST_CASE("property: group order equals volume and group delta equals counted delta") {
  for (int trial = 0; trial < 40; ++trial) {
    const auto d = static_cast<std::size_t>(uniform(1, 3));
    const auto verts = testsupport::random_simplex_vertices(d, -2, 2);
    const LatticePolytope p(d, verts);
    const auto g = lambda_group_of_simplex(verts);
    CHECK(static_cast<Int>(g.order()) == normalized_volume(p));
    CHECK(delta_from_group(g) == delta_from_counts(p));
  }
}

TEST_CASE("property: canonical form is invariant under reordering and unimodular maps") {
  for (int trial = 0; trial < 30; ++trial) {
    const auto d = static_cast<std::size_t>(uniform(1, 3));
    auto verts = testsupport::random_simplex_vertices(d, -2, 2);
    const auto key = canonical_group_form(lambda_group_of_simplex(verts)).key;
    std::shuffle(verts.begin(), verts.end(), testsupport::rng());
    const auto u = testsupport::random_unimodular(d);
    IntVector t(d);
    for (auto& x : t) x = uniform(-3, 3);
    std::vector<IntVector> moved;
    for (const auto& v : verts) {
      IntVector w = row_times(v, u);
      for (std::size_t i = 0; i < d; ++i) w[i] += t[i];
      moved.push_back(w);
    }
    CHECK(canonical_group_form(lambda_group_of_simplex(moved)).key == key);
  }
}
