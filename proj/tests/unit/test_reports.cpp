#include "doctest.h"
#include "quivalg/derivations.hpp"
#include "quivalg/errors.hpp"
#include "quivalg/reports.hpp"
#include "support.hpp"

using namespace quivalg;
using testing_support::fixture;
using testing_support::fixture_algebra;

TEST_CASE("algebra report carries dimension, basis and constants") {
  auto a = fixture_algebra("line3.quiver");
  Json j = algebra_report(a);
  CHECK(j["dimension"] == 6);
  CHECK(j["field"] == "rat");
  CHECK(j["basis"][0] == "e_1");
  CHECK(j["basis"][5] == "alpha1.alpha2");
  CHECK(j["structure_constant_count"] == a.structure_constant_count());
  for (const auto& c : j["structure_constants"]) CHECK(c[3] == "1/1");
  CHECK(algebra_report(fixture_algebra("line3.quiver", Field::prime(5)))["structure_constants"][0][3] == "1");
}

TEST_CASE("property: map JSON round-trips through map_from_json") {
  for (const char* name : {"four_vertex.quiver", "three_vertex.quiver"}) {
    auto a = fixture_algebra(name);
    for (const auto& m : lie_derivation_space(a).basis_maps()) {
      Json j = map_json(a, m);
      CHECK(map_from_json(a, j) == m);
      CHECK(map_from_json(a, Json::parse(j.dump())) == m);
    }
  }
}

TEST_CASE("map files: missing keys, unit label, errors") {
  auto a = fixture_algebra("three_vertex.quiver");
  LinMap theta = load_map_file(a, fixture("three_vertex_theta.json"));
  CHECK(theta.image(*a.basis_index("alpha")) == a.zero());
  CHECK(map_from_json(a, Json::parse(R"({"images": {}})")).is_zero());
  auto unit = map_from_json(a, Json::parse(R"({"images": {"e_1": [["1", "2"]]}})"));
  CHECK(unit.image(a.vertex_basis_index(0)) == a.field().from_int(2) * a.unit());
  CHECK_THROWS_AS(map_from_json(a, Json::parse(R"({"images": {"omega": []}})")), UnknownReference);
  CHECK_THROWS_AS(map_from_json(a, Json::parse(R"({"images": {"e_1": [["omega", 1]]}})")), UnknownReference);
  CHECK_THROWS_AS(map_from_json(a, Json::parse(R"({"images": {"e_1": [["e_1", 1.5]]}})")), InputError);
  CHECK_THROWS_AS(map_from_json(a, Json::parse(R"({"basis": ["e_1"], "images": {}})")), InputError);
  CHECK_THROWS_AS(map_from_json(a, Json::parse(R"([1, 2])")), InputError);
  CHECK_THROWS_AS(load_map_file(a, fixture("three_vertex.quiver")), ParseError);
  CHECK_THROWS_AS(load_map_file(a, fixture("missing.json")), InputError);
}

TEST_CASE("decomposition report lists the vertex constants as num/den") {
  auto a = fixture_algebra("three_vertex.quiver");
  auto d = standard_decompose(a, load_map_file(a, fixture("three_vertex_theta.json")));
  Json j = decomposition_report(a, d);
  CHECK(j["k"]["1"] == "1/1");
  CHECK(j["k"]["2"] == "2/1");
  CHECK(j["k"]["3"] == "3/1");
  CHECK(j["flags"]["unique"] == true);
  CHECK(j["D"]["e_1"] == Json::parse(R"([["alpha", "-1/1"]])"));
}
