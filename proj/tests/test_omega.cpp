#include "doctest.h"
#include "dendro/dendroidal.hpp"
#include "dendro/monoidal.hpp"
#include "dendro/omega.hpp"
#include "support.hpp"

using namespace dendro;

namespace {

const Flavour C = Flavour::commutative;

MonotoneMap map(const BroadPoset& a, const BroadPoset& b, const Assignment& f) {
  return MonotoneMap::make(a, b, f);
}

}  // namespace

TEST_CASE("subtrees of corollas") {
  for (std::size_t n = 0; n <= 5; ++n) {
    BroadPoset g = corolla(C, n);
    std::size_t single = 0, whole = 0;
    for (const auto& s : enumerate_subtrees(g)) {
      single += s.size() == 1 && degree(s) == 0;
      whole += s == g;
    }
    CHECK(single == n + 1);
    CHECK(whole == 1);
  }
}

TEST_CASE("maximal subtrees of the example tree") {
  BroadPoset t = test::tree("r(b(e,f),c,d())");
  auto subs = maximal_subtrees(t);
  REQUIRE(subs.size() == 4);
  std::vector<BroadPoset> expected = {
      test::tree("r(e,f,c,d())"), test::tree("r(b(e,f),c)"), test::tree("r(b,c,d())"),
      test::tree("r(b(e,f),c,d)")};
  for (const auto& e : expected) CHECK(std::count(subs.begin(), subs.end(), e) == 1);
  CHECK(classify_maximal(t, test::tree("r(e,f,c,d())")) ==
        FaceKind{FaceKind::Kind::inner, "b", {}});
  CHECK(classify_maximal(t, test::tree("r(b(e,f),c)")).kind == FaceKind::Kind::inner);
  CHECK(classify_maximal(t, test::tree("r(b(e,f),c,d)")) ==
        FaceKind{FaceKind::Kind::outer, {}, test::pair({}, "d")});
  CHECK_THROWS_AS(classify_maximal(t, test::tree("r(e,f,c)")), NotMaximal);
}

TEST_CASE("faces of a corolla") {
  BroadPoset g2 = corolla(C, 2);
  CHECK(classify_maximal(g2, star(C, "r")).kind == FaceKind::Kind::outer);
  CHECK(classify_maximal(g2, star(C, "l1")) == FaceKind{FaceKind::Kind::root, "l1", {}});
  CHECK(classify_maximal(test::tree("x()"), star(C, "x")).kind == FaceKind::Kind::outer);
  CHECK(faces(g2).size() == 3);
  CHECK(outer_face(g2, test::pair({"l1", "l2"}, "r")).domain() == star(C, "r"));
  CHECK_THROWS_AS(outer_face(test::tree("r(b(e,f),c)"), test::pair({"b", "c"}, "r")),
                  NotOuterCluster);
  CHECK_THROWS_AS(root_face(test::tree("r(b(e,f),c(x))"), "b"), NoRootFace);
  CHECK_THROWS_AS(inner_face(g2, "r"), NotInnerEdge);
}

TEST_CASE("inner face of a grafted tree") {
  BroadPoset t = test::tree("r(m(a,b),c)");
  MonotoneMap f = inner_face(t, "m");
  CHECK(f.domain() == test::tree("r(a,b,c)"));
  CHECK(classify_map(f) == MapKind::inner_face);
}

TEST_CASE("branch inclusions are outer and root faces") {
  BroadPoset t = test::tree("r(b(e(x,y),f),c(g),d())");
  Tree tree(t);
  for (Index b : tree.children(tree.root())) {
    BroadPoset branch = subtree_at(t, b);
    Assignment same;
    for (const auto& id : branch.carrier()) same[id] = id;
    MonotoneMap inc = MonotoneMap::make(branch, t, same);
    Factorization fac = factorize(inc);
    CHECK(fac.degeneracies.empty());
    for (const auto& face : fac.faces) {
      MapKind k = classify_map(face);
      CHECK((k == MapKind::outer_face || k == MapKind::root_face));
    }
  }
}

TEST_CASE("degeneracies") {
  BroadPoset g1 = corolla(C, 1);
  MonotoneMap s = degeneracy(g1, "l1", "r");
  CHECK(s.codomain() == star(C, "l1"));
  CHECK(s("r") == "l1");
  CHECK(classify_map(s) == MapKind::degeneracy);
  CHECK(is_degeneracy_template(s));
  BroadPoset k2 = embed_poset(chain(2));
  auto ds = degeneracies(k2);
  CHECK(ds.size() == 2);
  for (const auto& d : ds) CHECK(find_isomorphism(d.codomain(), embed_poset(chain(1))));
  for (std::size_t n : {0, 2, 3}) CHECK(degeneracies(corolla(C, n)).empty());
  CHECK_THROWS_AS(degeneracy(corolla(C, 2), "l1", "r"), NotUnaryVertex);
}

TEST_CASE("planar automorphisms are identities") {
  for (const auto& t : enumerate_trees(5, Flavour::planar)) {
    BroadPoset a = to_broad(t, Flavour::planar);
    CHECK(count_isomorphisms(a, a) == 1);
  }
}

TEST_CASE("factorization examples") {
  BroadPoset t = test::tree("r(b(e,f),c,d())");
  Factorization id = factorize(identity(t));
  CHECK(id.degeneracies.empty());
  CHECK(id.faces.empty());
  CHECK(id.iso == identity(t));

  BroadPoset g2 = corolla(C, 2);
  Factorization leaf = factorize(map(star(C), g2, {{"*", "l1"}}));
  CHECK(leaf.degeneracies.empty());
  REQUIRE(leaf.faces.size() == 1);
  CHECK(classify_map(leaf.faces[0]) == MapKind::root_face);

  Factorization constant = factorize(map(corolla(C, 1), g2, {{"l1", "r"}, {"r", "r"}}));
  CHECK(constant.degeneracies.size() == 1);
  CHECK(constant.faces.size() == 1);
  CHECK(classify_map(constant.iso) == MapKind::isomorphism);
  CHECK(classify_map(constant.faces[0]) == MapKind::outer_face);
  CHECK(constant.composite() == map(corolla(C, 1), g2, {{"l1", "r"}, {"r", "r"}}));
}

TEST_CASE("factorization when the root goes deep and stumps are contracted") {
  BroadPoset a = test::tree("r(a)");
  BroadPoset b = test::tree("s(p(x,y()),q())");
  MonotoneMap f = map(a, b, {{"r", "p"}, {"a", "x"}});
  Factorization fac = factorize(f);
  CHECK(fac.composite() == f);
  std::vector<MapKind> kinds = fac.kinds();
  for (std::size_t i = 0; i < fac.degeneracies.size(); ++i) CHECK(kinds[i] == MapKind::degeneracy);
  CHECK(kinds[fac.degeneracies.size()] == MapKind::isomorphism);
}

TEST_CASE("classification of other maps") {
  BroadPoset g2 = corolla(C, 2);
  MonotoneMap swap = map(g2, g2, {{"r", "r"}, {"l1", "l2"}, {"l2", "l1"}});
  CHECK(classify_map(swap) == MapKind::isomorphism);
  BroadPoset t = test::tree("r(b(e,f),c)");
  // Removing two edges at once is not a face.
  MonotoneMap two = map(test::tree("r(e,f,c)"), test::tree("r(b(e,f),c(x))"),
                        {{"r", "r"}, {"e", "e"}, {"f", "f"}, {"c", "x"}});
  CHECK(classify_map(two) == MapKind::other);
  (void)t;
}

TEST_CASE("grafting maps") {
  BroadPoset base = corolla(C, 1);
  MonotoneMap s = degeneracy(test::tree("a(b)"), "b", "a");
  MonotoneMap g = graft_map(base, "l1", s);
  CHECK(g.domain().size() == 3);
  CHECK(classify_map(g) == MapKind::degeneracy);

  BroadPoset g2 = corolla(C, 2);
  MonotoneMap inner = inner_face(test::tree("m(n(a,b),c)"), "n");
  MonotoneMap grafted = graft_map(g2, "l2", inner);
  CHECK(classify_map(grafted) == MapKind::inner_face);

  MonotoneMap off_root = map(star(C), g2, {{"*", "l1"}});
  CHECK_THROWS_AS(graft_map(g2, "l1", off_root), GraftUndefined);
}
