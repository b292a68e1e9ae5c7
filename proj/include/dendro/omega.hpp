#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "dendro/broad_poset.hpp"
#include "dendro/monotone.hpp"

namespace dendro {

/// How a maximal subtree sits inside its tree.
struct FaceKind {
  enum class Kind { inner, outer, root };
  Kind kind = Kind::inner;
  /// Contracted inner edge, or the surviving branch of a root face.
  std::string edge;
  /// Pruned outer cluster (children, edge); empty children for a stump.
  NamedPair vertex;

  friend bool operator==(const FaceKind&, const FaceKind&) = default;
};

std::string describe(const FaceKind& kind);

struct SubtreeOptions {
  std::size_t max_edges = 16;
};

/// Every subtree: a subset of edges whose induced broad poset is a tree,
/// optionally with some of its stumps turned into leaves. Ordered by subset
/// bitmask (carrier order), then by the stumps removed.
std::vector<BroadPoset> enumerate_subtrees(const BroadPoset& tree,
                                           SubtreeOptions options = {});
/// Subtrees of degree one less than the tree.
std::vector<BroadPoset> maximal_subtrees(const BroadPoset& tree,
                                         SubtreeOptions options = {});

/// Throws NotMaximal unless `sub` is a maximal subtree of `tree`.
FaceKind classify_maximal(const BroadPoset& tree, const BroadPoset& sub);

/// Drops an inner edge. Throws NotInnerEdge.
MonotoneMap inner_face(const BroadPoset& tree, std::string_view edge);
/// Prunes a vertex whose children are all leaves, or turns a stump into a
/// leaf when the children word is empty. Throws NotOuterCluster.
MonotoneMap outer_face(const BroadPoset& tree, const NamedPair& cluster);
/// Drops the root and its other children, which must all be leaves.
/// Throws NoRootFace.
MonotoneMap root_face(const BroadPoset& tree, std::string_view branch);

struct Face {
  FaceKind kind;
  MonotoneMap inclusion;
};
/// Every face map into `tree`: inner faces, then outer, then root faces.
std::vector<Face> faces(const BroadPoset& tree);

/// Collapses the unary vertex child <= parent, sending parent to child.
/// Throws NotUnaryVertex.
MonotoneMap degeneracy(const BroadPoset& tree, std::string_view child,
                       std::string_view parent);
std::vector<MonotoneMap> degeneracies(const BroadPoset& tree);

enum class MapKind { isomorphism, inner_face, outer_face, root_face, degeneracy, other };
std::string_view to_string(MapKind kind);

/// Structural classification of a map between trees. Faces and degeneracies
/// are recognised up to isomorphism of the domain or codomain.
MapKind classify_map(const MonotoneMap& f);
/// True when `f` is literally `degeneracy(domain, c, p)` for some vertex.
bool is_degeneracy_template(const MonotoneMap& f);
/// True when an isomorphism of trees matches edges by their position
/// (path of child indices from the root, in word order).
bool is_positional(const MonotoneMap& iso);

struct Factorization {
  std::vector<MonotoneMap> degeneracies;  // in the order they are applied
  MonotoneMap iso;
  std::vector<MonotoneMap> faces;  // in the order they are applied

  MonotoneMap composite() const;
  std::vector<MapKind> kinds() const;
};

/// Splits a map of trees into degeneracies, then an isomorphism, then face
/// maps, by recursion on the combined degree:
///  - the root is sent below the target root: restrict the target to the
///    subtree at the image and peel outer or root faces down to it;
///  - root children go onto root children: factor each branch and graft;
///  - otherwise collapse the root's unary vertex if its child also goes to
///    the target root, or contract the target edges that no root child of
///    the source reaches.
/// Ties are broken by the least identifier.
Factorization factorize(const MonotoneMap& f);

/// The map base o B -> base o B' induced by alpha : B -> B', grafting at
/// `leaf`. Throws GraftUndefined unless alpha preserves the root.
MonotoneMap graft_map(const BroadPoset& base, std::string_view leaf,
                      const MonotoneMap& alpha);

}  // namespace dendro
