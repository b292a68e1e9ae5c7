#pragma once

#include <string>
#include <utility>
#include <vector>

#include "dendro/broad_poset.hpp"
#include "dendro/monotone.hpp"

namespace dendro {

// Named objects -----------------------------------------------------------

/// The singleton with only the reflexive pair; unit of the tensor product.
BroadPoset star(Flavour flavour = Flavour::commutative, std::string name = "*");

/// The n-corolla: leaves l1..ln with the single pair l1...ln <= r.
BroadPoset corolla(Flavour flavour, std::string root,
                   std::vector<std::string> leaves);
BroadPoset corolla(Flavour flavour, std::size_t n);

// Ordinary posets ---------------------------------------------------------

/// A finite poset given by its strict order pairs (lower, upper). The pairs
/// are expected to be transitively closed; `embed_poset` closes them anyway.
struct Poset {
  std::vector<std::string> elements;
  std::vector<std::pair<std::string, std::string>> less;

  friend bool operator==(const Poset&, const Poset&) = default;
};

/// The chain 0 < 1 < ... < n (n + 1 elements).
Poset chain(std::size_t n);
Poset poset_product(const Poset& p, const Poset& q);
/// Sorted copy, used to compare posets.
Poset canonical(Poset p);

/// Unary broad relation of a poset.
BroadPoset embed_poset(const Poset& poset,
                       Flavour flavour = Flavour::commutative);
/// Unary part of a broad poset.
Poset underlying_poset(const BroadPoset& poset);

// Limits and colimits ------------------------------------------------------

/// Identifier of the pair (a, b) in products and tensor products.
std::string pair_name(const std::string& a, const std::string& b);

struct Product {
  BroadPoset object;
  MonotoneMap first;
  MonotoneMap second;
};

/// Cartesian product: a word of pairs is below (a, b) exactly when both
/// projected words are below a and b.
Product product(const BroadPoset& a, const BroadPoset& b);

/// Two monotone maps with the same domain, the span C -> A and C -> B.
struct Pushout {
  BroadPoset object;
  MonotoneMap from_first;
  MonotoneMap from_second;
};

/// Pushout of a span. The carrier is the set-level quotient of A + B: a class
/// holding elements of A is named after its least element of A, other
/// classes keep their B name, suffixed with _1, _2, ... on collision.
/// Throws CollapseError if generation merges distinct classes.
Pushout pushout(const MonotoneMap& f, const MonotoneMap& g,
                ClosureOptions options = {});

// Monoidal structure --------------------------------------------------------

/// Broad poset generated on A x B by a (x) - and - (x) b being monotone.
BroadPoset tensor(const BroadPoset& a, const BroadPoset& b,
                  ClosureOptions options = {});

/// Monotone maps A -> B, with f1...fn <= f when f1(a)...fn(a) <= f(a) for
/// every a. Elements are named by their image lists, e.g. "[l1,r]".
BroadPoset internal_hom(const BroadPoset& a, const BroadPoset& b,
                        EnumerationOptions options = {});
/// Element of `internal_hom` corresponding to a map.
std::string hom_element_name(const MonotoneMap& f);

/// Planar to commutative: words become multisets, then the relation is
/// closed again.
BroadPoset abelianize(const BroadPoset& planar, ClosureOptions options = {});

/// Commutative to planar: every ordering of every source word.
BroadPoset forget_symmetry(const BroadPoset& commutative);

}  // namespace dendro
