#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "latpoly/catalog.hpp"
#include "latpoly/classify.hpp"
#include "latpoly/io.hpp"
#include "latpoly/random.hpp"
#include "poly_support.hpp"

using namespace latpoly;
using testsupport::random_polytope;
using testsupport::uniform;

TEST_CASE("polytope file examples") {
  const auto p = parse_polytope(R"({"name": "square", "dim": 2, "vertices": [[0,0],[1,0],[0,1],[1,1]]})");
  CHECK(p.dim() == 2);
  CHECK(p.num_vertices() == 4);
  CHECK(p.name() == "square");
  const auto j = polytope_to_json(p);
  CHECK(j["name"] == "square");
  CHECK(j["vertices"].size() == 4);
  const auto point = parse_polytope(R"({"dim": 0, "vertices": [[]]})");
  CHECK(point.dim() == 0);
  CHECK(point.num_vertices() == 1);
}

TEST_CASE("polytope file rejections") {
  for (const char* bad : {
           R"([1, 2])",
           R"({"vertices": [[0]]})",
           R"({"dim": 1})",
           R"({"dim": -1, "vertices": [[0]]})",
           R"({"dim": 2, "vertices": []})",
           R"({"dim": 2, "vertices": [[0, 0], [1]]})",
           R"({"dim": 2, "vertices": [[0, 0], [1, 0, 0]]})",
           R"({"dim": 1, "vertices": [[0], [1.5]]})",
           R"({"dim": 1, "vertices": [[0], ["1"]]})",
           R"({"dim": 1, "vertices": [[0], [99999999999999999999]]})",
           R"({"dim": 1, "vertices": [[0], [-99999999999999999999]]})",
           R"({"dim": 1, "vertices": [[0], [9223372036854775808]]})",
           R"({"dim": 1, "name": 3, "vertices": [[0]]})",
           R"({"dim": 2, "vertices": [[0, 0], [1, 0])",
       }) {
    CAPTURE(bad);
    CHECK_THROWS_AS(parse_polytope(bad), ParseError);
  }
  CHECK(parse_polytope(R"({"dim": 1, "vertices": [[9223372036854775807], [0]]})").num_vertices() == 2);
}

TEST_CASE("property: polytope json round trip") {
  for (int trial = 0; trial < 50; ++trial) {
    const auto d = static_cast<std::size_t>(uniform(1, 4));
    const auto p = random_polytope(d, d + static_cast<std::size_t>(uniform(1, 4)), -9, 9);
    CHECK(parse_polytope(polytope_to_json(p).dump()) == p);
  }
}

TEST_CASE("map and witness json round trip") {
  Rng rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const auto d = static_cast<std::size_t>(random_int(rng, 1, 5));
    const auto m = random_unimodular_map(rng, d);
    CHECK(map_from_json(map_to_json(m)) == m);
  }
  const auto p = make_entry({"Δ3", {1, 2}, 2});
  const auto r = classify(apply_map(random_unimodular_map(rng, p.dim()), p));
  const auto back = witness_from_json(witness_to_json(r.witness));
  REQUIRE(back.size() == r.witness.size());
  for (std::size_t i = 0; i < back.size(); ++i) {
    CHECK(back[i].kind == r.witness[i].kind);
    CHECK(back[i].frame == r.witness[i].frame);
    CHECK(back[i].map == r.witness[i].map);
  }
  const Json wrapped{{"witness", witness_to_json(r.witness)}};
  CHECK(witness_from_json(wrapped).size() == back.size());
  CHECK(witness_from_json(map_to_json(r.witness.back().map)).size() == 1);
}

TEST_CASE("map json rejections") {
  CHECK_THROWS_AS(map_from_json(Json::parse(R"({"matrix": [[2]], "translation": [0]})")), InvalidArgument);
  CHECK_THROWS_AS(map_from_json(Json::parse(R"({"matrix": [[1, 0]], "translation": [0]})")), InvalidArgument);
  CHECK_THROWS_AS(map_from_json(Json::parse(R"({"matrix": [[1]], "translation": [0, 1]})")), InvalidArgument);
  CHECK(map_from_json(Json::parse(R"({"matrix": [[1]]})")).translation == IntVector{0});
  CHECK_THROWS_AS(witness_from_json(Json::parse(R"([{"kind": "shear"}])")), InvalidArgument);
}

TEST_CASE("invariants json examples") {
  const auto square = invariants_json(LatticePolytope(2, {{0, 0}, {1, 0}, {0, 1}, {1, 1}}));
  CHECK(square["delta"]["polynomial"] == "1+t");
  CHECK(square["volume"] == 2);
  CHECK(square["spans"] == true);
  CHECK(square["pyramids"] == 0);
  const auto d2 = invariants_json(make_simplex("Δ2", std::vector<Int>{2}));
  CHECK(d2["delta"]["polynomial"] == "1+t^2");
  CHECK(d2["delta"]["coefficients"] == Json::array({1, 0, 1, 0}));
  CHECK(d2["spans"] == false);
  const auto point = invariants_json(LatticePolytope(2, {{3, 4}}));
  CHECK(point["delta"]["polynomial"] == "1");
  CHECK(point["volume"] == 1);
}

TEST_CASE("classification json") {
  const auto big = classify(LatticePolytope(2, {{0, 0}, {2, 0}, {0, 2}, {2, 2}}));
  const auto j = classification_to_json(big);
  CHECK(j["in_scope"] == false);
  CHECK(j["volume"] == 8);
  const auto q = classify(make_table2("Q4_9"));
  const auto k = classification_to_json(q);
  CHECK(k["entry"]["family"] == "Q4_9");
  CHECK(k["entry"]["label"] == "Q4_9");
  const auto e = entry_to_json({"Δ41", {1, 2, 3}, 1});
  CHECK(e["params"]["i2"] == 2);
  CHECK(e["pyramids"] == 1);
}
