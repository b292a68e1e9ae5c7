#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dendro/broad_poset.hpp"
#include "dendro/monotone.hpp"

namespace dendro {

/// Syntax tree for tree terms such as "r(b(e,f),c,d())".
///
/// An edge without a vertex is a leaf, an empty vertex is a stump, and a
/// non-empty vertex lists the child subterms.
struct TreeTerm {
  std::string edge;
  std::optional<std::vector<TreeTerm>> vertex;

  static TreeTerm leaf(std::string edge) { return {std::move(edge), std::nullopt}; }
  static TreeTerm node(std::string edge, std::vector<TreeTerm> children) {
    return {std::move(edge), std::move(children)};
  }

  bool is_leaf() const noexcept { return !vertex.has_value(); }
  bool is_stump() const noexcept { return vertex && vertex->empty(); }
  std::size_t edge_count() const;
  std::vector<std::string> edges() const;  // preorder

  friend bool operator==(const TreeTerm&, const TreeTerm&) = default;
};

/// Grammar:  tree := IDENT vertex? ;  vertex := "(" [tree {"," tree}] ")" ;
/// IDENT := letter {letter | digit | "_"}. Whitespace is ignored.
/// Throws ParseError (with the offending position) or DuplicateEdge.
TreeTerm parse_term(std::string_view text);
std::string print_term(const TreeTerm& term);

/// The dendroidally ordered set of a term: a bare edge is the singleton, a
/// corolla is the corolla, anything else is the root corolla with the child
/// terms grafted on. Throws DuplicateEdge for repeated edge names.
BroadPoset to_broad(const TreeTerm& term, Flavour flavour);

/// The term of a dendroidally ordered set, built from its root corolla and
/// the subtrees above the root's children. Throws NotDendroidal.
TreeTerm to_term(const BroadPoset& tree);

struct Graft {
  BroadPoset tree;
  /// Identifiers of the grafted tree's edges in the result. Its root maps to
  /// the chosen leaf; colliding names get a _1, _2, ... suffix.
  Assignment renaming;
};

/// Glues the root of `top` onto `leaf` of `base` (a pushout over the
/// singleton). Throws NotALeaf or NotDendroidal.
Graft graft(const BroadPoset& base, std::string_view leaf, const BroadPoset& top);
/// Grafts a tree on each listed leaf, one pushout at a time, in leaf order.
BroadPoset full_graft(const BroadPoset& base,
                      const std::map<std::string, BroadPoset>& on_leaves);

/// Shape code: "l" for a leaf, "(...)" around the child codes for a vertex,
/// so a stump reads "()". Commutative codes sort the children.
std::string canonical_code(const TreeTerm& term, Flavour flavour);
std::string canonical_code(const BroadPoset& tree);

/// An isomorphism of trees, found by aligning canonical forms.
std::optional<MonotoneMap> tree_isomorphism(const BroadPoset& a,
                                            const BroadPoset& b);
inline bool are_isomorphic(const BroadPoset& a, const BroadPoset& b) {
  return tree_isomorphism(a, b).has_value();
}

struct TreeEnumerationOptions {
  std::size_t max_edges_cap = 7;
};

/// One tree per isomorphism class with at most `max_edges` edges, ordered by
/// (edge count, canonical code). Edges are named e0, e1, ... in preorder.
/// Throws BudgetExceeded above the cap.
std::vector<TreeTerm> enumerate_trees(std::size_t max_edges, Flavour flavour,
                                      TreeEnumerationOptions options = {});

}  // namespace dendro
