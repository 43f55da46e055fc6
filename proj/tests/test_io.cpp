#include <catch2/catch_amalgamated.hpp>

#include "ttg/enumerate.hpp"
#include "ttg/equivariant.hpp"
#include "ttg/fixtures.hpp"
#include "ttg/io.hpp"

using namespace ttg;

TEST_CASE("space JSON round-trip over the enumeration corpus") {
  for (int n = 1; n <= 4; ++n)
    for (const auto& s : enumerate_posets(n)) {
      auto parsed = space_from_json(space_to_json(s));
      CHECK(parsed.same_labeled_order(s));
    }
}

TEST_CASE("map JSON round-trip") {
  auto fx = fixtures();
  for (const auto* m : {&fx.vee_over_chain, &fx.three_point_affinization}) {
    auto parsed = map_from_json(map_to_json(*m));
    CHECK(parsed.domain().same_labeled_order(m->domain()));
    CHECK(parsed.codomain().same_labeled_order(m->codomain()));
    for (const auto& id : m->domain().ids())
      CHECK(parsed.codomain().id(parsed(parsed.domain().index(id))) ==
            m->codomain().id((*m)(m->domain().index(id))));
  }
}

TEST_CASE("emission is byte-stable") {
  SubgroupLattice lat(catalog("S_3"));
  auto spec = spec_burnside(lat, {2, 3});
  CHECK(dump_json(space_to_json(spec.space)) == dump_json(space_to_json(spec.space)));
  CHECK(space_to_dot(spec.space) == space_to_dot(spec.space));
}

TEST_CASE("round-trip through emitted covers preserves the order exactly") {
  auto uni = unitation_shg_cp(2, {2, 3}, 3);
  auto parsed = space_from_json(space_to_json(uni.quotient));
  CHECK(parsed.same_labeled_order(uni.quotient));
}

TEST_CASE("schema violations are input errors") {
  CHECK_THROWS_AS(space_from_json(json::parse(R"({"specializations":[]})")), InputError);
  CHECK_THROWS_AS(space_from_json(json::parse(R"({"points":[{"id":"a"}],
    "specializations":[["a"]]})")), InputError);
  CHECK_THROWS_AS(map_from_json(json::parse(R"({"domain":{"points":[]}})")), InputError);
  // Non-monotone assignment.
  CHECK_THROWS_AS(map_from_json(json::parse(R"({
    "domain":{"points":[{"id":"a"},{"id":"b"}],"specializations":[["a","b"]]},
    "codomain":{"points":[{"id":"x"},{"id":"y"}],"specializations":[["x","y"]]},
    "assignment":{"a":"y","b":"x"}})")), InputError);
  // Antisymmetry failure inside a space payload.
  CHECK_THROWS_AS(space_from_json(json::parse(R"({
    "points":[{"id":"a"},{"id":"b"}],
    "specializations":[["a","b"],["b","a"]]})")), NonT0Error);
}

TEST_CASE("dot output shape") {
  auto fx = fixtures();
  auto dot = space_to_dot(fx.three_chain);
  CHECK(dot.find("rankdir=BT") != std::string::npos);
  CHECK(dot.find("\"r\" -> \"q\"") != std::string::npos);
  CHECK(dot.find("\"q\" -> \"p\"") != std::string::npos);
}
