#include "doctest.h"
#include "dendro/dendroidal.hpp"
#include "dendro/monoidal.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace dendro;

namespace {
const Flavour C = Flavour::commutative;
const Flavour P = Flavour::planar;
}  // namespace

TEST_CASE("products") {
  Product p = product(corolla(C, 3), corolla(C, 2));
  CHECK(p.object.size() == 12);
  CHECK(p.object.relation().empty());
  Product sq = product(embed_poset(chain(1)), embed_poset(chain(1)));
  CHECK(sq.object.size() == 4);
  CHECK(canonical(underlying_poset(sq.object)) == canonical(poset_product(chain(1), chain(1))));
  CHECK(is_monotone(sq.first.images(), sq.object, sq.first.codomain()));
}

TEST_CASE("tensor products") {
  CHECK(find_isomorphism(tensor(star(C), corolla(C, 2)), corolla(C, 2)));
  CHECK(find_isomorphism(tensor(embed_poset(chain(1)), embed_poset(chain(1))),
                         embed_poset(poset_product(chain(1), chain(1)))));
  BroadPoset g1 = corolla(C, 1);
  BroadPoset t = tensor(g1, g1);
  CHECK(t.size() == 4);
  // The commuting square plus the composite from bottom to top.
  CHECK(t.relation().size() == 5);
  for (const auto& p : t.relation()) CHECK(p.source.size() == 1);
}

TEST_CASE("internal hom") {
  BroadPoset h = internal_hom(star(C), corolla(C, 2));
  CHECK(h.size() == 3);
  CHECK(find_isomorphism(h, corolla(C, 2)));
  CHECK(internal_hom(corolla(C, 2), corolla(C, 1)).empty());
  CHECK_THROWS_AS(internal_hom(BroadPoset{}, corolla(C, 1)), ClosureOverflow);
  BroadPoset g1 = corolla(C, 1), g2 = corolla(C, 2);
  CHECK(count_monotone(tensor(g1, g1), g2) == count_monotone(g1, internal_hom(g1, g2)));
}

TEST_CASE("pushouts and grafting") {
  auto point = std::make_shared<const BroadPoset>(star(C));
  auto g2 = std::make_shared<const BroadPoset>(corolla(C, 2));
  MonotoneMap at_root(point, g2, {g2->index("r")});
  MonotoneMap at_leaf(point, g2, {g2->index("l1")});
  Pushout p = pushout(at_leaf, at_root);
  CHECK(p.object.size() == 5);
  CHECK(is_dendroidal(p.object));
  CHECK(degree(p.object) == 2);
  std::size_t long_words = 0;
  for (const auto& pair : p.object.relation()) long_words += pair.source.size() == 3;
  CHECK(long_words == 1);

  Pushout same = pushout(identity(*g2), identity(*g2));
  CHECK(find_isomorphism(same.object, *g2));
}

TEST_CASE("symmetrisation") {
  BroadPoset both(P, {"r", "l1", "l2"}, {test::pair({"l1", "l2"}, "r"), test::pair({"l2", "l1"}, "r")});
  CHECK(abelianize(both) == corolla(C, 2));
  BroadPoset forgot = forget_symmetry(corolla(C, 2));
  CHECK(forgot.flavour() == P);
  CHECK(forgot.relation().size() == 2);
  CHECK(forget_symmetry(star(C)) == star(P));
  BroadPoset stump = test::tree("x()");
  CHECK(forget_symmetry(stump).relation().size() == 1);
  CHECK(abelianize(embed_poset(chain(2), P)) == embed_poset(chain(2), C));
  BroadPoset a = corolla(C, 2), b = corolla(C, 1);
  CHECK(abelianize(tensor(forget_symmetry(a), forget_symmetry(b))) == tensor(a, b));
}

TEST_CASE("posets") {
  CHECK(find_isomorphism(embed_poset(chain(1)), corolla(C, 1)));
  Poset u = underlying_poset(corolla(C, 2));
  CHECK(u.elements.size() == 3);
  CHECK(u.less.empty());
}
