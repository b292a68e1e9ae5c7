#include "doctest.h"
#include "dendro/dendroidal.hpp"
#include "dendro/monoidal.hpp"
#include "dendro/trees.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace dendro;

TEST_CASE("parsing") {
  TreeTerm t = parse_term("r(a,b)");
  CHECK(t.edge_count() == 3);
  CHECK(parse_term("x").is_leaf());
  TreeTerm ex = parse_term(" r ( b(e, f), c, d() ) ");
  CHECK(print_term(ex) == "r(b(e,f),c,d())");
  CHECK((*ex.vertex)[2].is_stump());
  CHECK_THROWS_AS(parse_term("r(a"), ParseError);
  CHECK_THROWS_AS(parse_term("r(a,)"), ParseError);
  CHECK_THROWS_AS(parse_term("1"), ParseError);
  CHECK_THROWS_AS(parse_term("r(a,a)"), DuplicateEdge);
  try {
    parse_term("r(a b)");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 4);
  }
}

TEST_CASE("terms to broad posets") {
  CHECK(test::tree("x") == star(Flavour::commutative, "x"));
  CHECK(test::tree("r(l1,l2)") == corolla(Flavour::commutative, 2));
  BroadPoset t = test::tree("r(b(e,f),c,d())");
  std::vector<NamedPair> gens{test::pair({"e", "f"}, "b"), test::pair({}, "d"),
                              test::pair({"b", "c", "d"}, "r")};
  CHECK(oracle::relation_of(t) == oracle::closure(Flavour::commutative, gens));
  CHECK(t.size() == 6);
}

TEST_CASE("broad posets to terms") {
  CHECK(to_term(star()).is_leaf());
  CHECK(print_term(to_term(corolla(Flavour::planar, 3))) == "r(l1,l2,l3)");
  BroadPoset t = test::tree("r(b(e,f),c,d())");
  CHECK(to_broad(to_term(t), Flavour::commutative) == t);
  BroadPoset p = test::tree("r(d(),c,b(f,e))", Flavour::planar);
  CHECK(print_term(to_term(p)) == "r(d(),c,b(f,e))");
}

TEST_CASE("grafting") {
  BroadPoset g2 = corolla(Flavour::commutative, 2);
  Graft g = graft(g2, "l1", g2);
  CHECK(g.tree.size() == 5);
  CHECK(degree(g.tree) == 2);
  CHECK(g.renaming.at("r") == "l1");
  CHECK(g.renaming.at("l1") == "l1_1");
  std::size_t long_words = 0;
  for (const auto& p : g.tree.relation()) long_words += p.source.size() == 3;
  CHECK(long_words == 1);
  CHECK_THROWS_AS(graft(g2, "r", g2), NotALeaf);

  BroadPoset g3 = test::tree("r(a,b,c)");
  BroadPoset full = full_graft(g3, {{"a", test::tree("s(p,q)")}, {"b", test::tree("t")},
                                    {"c", test::tree("u()")}});
  CHECK(degree(full) == 3);
  CHECK(full == test::tree("r(a(p,q),b,c())"));
}

TEST_CASE("isomorphism of trees") {
  CHECK(are_isomorphic(test::tree("r(a,b)"), test::tree("s(p,q)")));
  CHECK(are_isomorphic(test::tree("r(a(),b)"), test::tree("s(p,q())")));
  CHECK_FALSE(are_isomorphic(test::tree("r(a(),b)", Flavour::planar),
                             test::tree("s(p,q())", Flavour::planar)));
  auto iso = tree_isomorphism(test::tree("r(a,b)", Flavour::planar), test::tree("r(a,b)", Flavour::planar));
  REQUIRE(iso);
  CHECK(*iso == identity(test::tree("r(a,b)", Flavour::planar)));
  CHECK_FALSE(are_isomorphic(corolla(Flavour::commutative, 2), corolla(Flavour::commutative, 3)));
  BroadPoset t = test::tree("r(b(e,f),c,d())");
  CHECK(are_isomorphic(t, t));
}

TEST_CASE("canonical codes") {
  CHECK(canonical_code(parse_term("x()"), Flavour::commutative) == "()");
  CHECK(canonical_code(parse_term("r(a(),b)"), Flavour::commutative) ==
        canonical_code(parse_term("r(b,a())"), Flavour::commutative));
  CHECK(canonical_code(parse_term("r(a(),b)"), Flavour::planar) !=
        canonical_code(parse_term("r(b,a())"), Flavour::planar));
}

TEST_CASE("enumeration matches the parent-array oracle") {
  for (Flavour fl : {Flavour::commutative, Flavour::planar}) {
    auto trees = enumerate_trees(5, fl);
    std::map<std::size_t, std::set<std::string>> codes;
    for (const auto& t : trees) codes[t.edge_count()].insert(canonical_code(t, fl));
    for (std::size_t n = 1; n <= 5; ++n) CHECK(codes[n] == oracle::shape_codes(n, fl));
    for (std::size_t i = 1; i < trees.size(); ++i) {
      CHECK(std::pair(trees[i - 1].edge_count(), canonical_code(trees[i - 1], fl)) <
            std::pair(trees[i].edge_count(), canonical_code(trees[i], fl)));
    }
  }
  CHECK(enumerate_trees(1, Flavour::commutative).size() == 2);
  CHECK(enumerate_trees(2, Flavour::commutative).size() == 2 + 2);
  CHECK_THROWS_AS(enumerate_trees(8, Flavour::commutative), BudgetExceeded);
}
