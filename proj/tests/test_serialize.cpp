#include "doctest.h"
#include "dendro/monoidal.hpp"
#include "dendro/serialize.hpp"
#include "support.hpp"

using namespace dendro;

TEST_CASE("broad posets round trip") {
  for (Flavour fl : {Flavour::commutative, Flavour::planar}) {
    BroadPoset t = test::tree("r(b(e,f),c,d())", fl);
    Json j = to_json(t);
    CHECK(j["flavour"] == std::string(to_string(fl)));
    CHECK(broad_poset_from_json(j) == t);
    CHECK(broad_poset_from_json(Json::parse(j.dump())) == t);
  }
}

TEST_CASE("reflexive pairs are discarded on input") {
  Json j = Json::parse(R"({"flavour":"planar","carrier":["a","b"],
      "relation":[{"source":["a"],"target":"a"},{"source":["a"],"target":"b"}]})");
  BroadPoset p = broad_poset_from_json(j);
  CHECK(p.relation().size() == 1);
  CHECK(to_json(p)["relation"].size() == 1);
}

TEST_CASE("malformed input") {
  CHECK_THROWS_AS(broad_poset_from_json(Json::parse(R"({"carrier":[]})")), ParseError);
  CHECK_THROWS_AS(broad_poset_from_json(Json::parse(
                      R"({"flavour":"odd","carrier":[],"relation":[]})")),
                  Error);
}

TEST_CASE("maps and factorizations round trip") {
  BroadPoset g1 = corolla(Flavour::commutative, 1);
  BroadPoset g2 = corolla(Flavour::commutative, 2);
  MonotoneMap f = MonotoneMap::make(g1, g2, {{"l1", "r"}, {"r", "r"}});
  CHECK(monotone_map_from_json(to_json(f)) == f);
  Factorization fac = factorize(f);
  Json j = to_json(fac);
  CHECK(j["kinds"] == Json::parse(R"(["degeneracy","isomorphism","outer_face"])"));
  Factorization back = factorization_from_json(j);
  CHECK(back.composite() == f);
  CHECK(to_json(back) == j);
}

TEST_CASE("reports") {
  Json d = to_json(check_dendroidal(corolla(Flavour::commutative, 2)));
  CHECK(d["is_dendroidal"] == true);
  CHECK(d["root"] == "r");
  BroadPoset two(Flavour::commutative, {"a", "b"}, {});
  Json bad = to_json(check_dendroidal(two));
  CHECK(bad["has_root"] == false);
  CHECK(bad["root"].is_null());
  CHECK(to_json(validate(two))["ok"] == true);
}
