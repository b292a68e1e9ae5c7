#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dendro/broad_poset.hpp"

namespace dendro {

/// Reflexive binary relation on a carrier, stored densely.
class BinaryRelation {
 public:
  explicit BinaryRelation(std::size_t n = 0) : n_(n), bits_(n * n, 0) {
    for (std::size_t i = 0; i < n; ++i) set(i, i);
  }
  std::size_t size() const noexcept { return n_; }
  bool operator()(std::size_t lower, std::size_t upper) const {
    return bits_[lower * n_ + upper] != 0;
  }
  void set(std::size_t lower, std::size_t upper) { bits_[lower * n_ + upper] = 1; }
  friend bool operator==(const BinaryRelation&, const BinaryRelation&) = default;

 private:
  std::size_t n_;
  std::vector<char> bits_;
};

/// b <=_d a when b occurs in some word below a. Under this reading the root
/// is the maximum.
BinaryRelation descendant_order(const BroadPoset& poset);

struct EdgeClassification {
  enum class Kind { leaf, stump, has_children };
  Kind kind = Kind::leaf;
  /// The maximum of the words strictly below the edge; empty for leaves and
  /// stumps.
  Word children;

  friend bool operator==(const EdgeClassification&,
                         const EdgeClassification&) = default;
};

/// Throws NotDendroidal when the words below `edge` have no maximum.
EdgeClassification classify_edge(const BroadPoset& poset, Index edge);

struct DendroReport {
  bool is_dendroidal = false;
  bool valid = false;  // broad poset axioms
  bool simple = false;
  bool has_root = false;
  bool children_axiom = false;
  std::optional<std::string> root;
  std::vector<std::string> violations;
};

DendroReport check_dendroidal(const BroadPoset& poset);
inline bool is_dendroidal(const BroadPoset& poset) {
  return check_dendroidal(poset).is_dendroidal;
}

/// Derived structure of a dendroidally ordered set, computed once.
class Tree {
 public:
  /// Throws NotDendroidal.
  explicit Tree(BroadPoset poset);

  const BroadPoset& poset() const noexcept { return poset_; }
  std::size_t size() const noexcept { return poset_.size(); }
  Index root() const noexcept { return root_; }
  const EdgeClassification& edge(Index e) const { return edges_.at(e); }
  bool is_leaf(Index e) const { return edge(e).kind == EdgeClassification::Kind::leaf; }
  bool is_stump(Index e) const { return edge(e).kind == EdgeClassification::Kind::stump; }
  /// Letters of e's children word (empty for leaves and stumps).
  const Word& children(Index e) const { return edge(e).children; }
  std::optional<Index> parent(Index e) const { return parent_.at(e); }
  bool descends(Index lower, Index upper) const { return below_(lower, upper); }
  const BinaryRelation& descendants() const noexcept { return below_; }
  Index join(Index a, Index b) const;

  std::vector<Index> leaves() const;
  std::vector<Index> stumps() const;
  /// Non-root, non-leaf edges.
  std::vector<Index> inner_edges() const;
  /// Vertices (x-children, x); one per non-leaf edge.
  std::vector<Pair> vertices() const;
  std::size_t degree() const { return size() - leaves().size(); }

 private:
  BroadPoset poset_;
  BinaryRelation below_;
  std::vector<EdgeClassification> edges_;
  std::vector<std::optional<Index>> parent_;
  Index root_ = 0;
};

/// Throws NotDendroidal.
Index root(const BroadPoset& poset);
/// Throws NoParent for the root.
Index parent(const BroadPoset& poset, Index edge);
Index join(const BroadPoset& poset, Index a, Index b);

/// Covering pairs (b, a): b < a with nothing strictly between in the word
/// order. Defined for any broad poset.
std::vector<Pair> links(const BroadPoset& poset);
std::size_t degree(const BroadPoset& poset);
/// Elements with no word strictly below them.
std::vector<Index> leaves(const BroadPoset& poset);

/// Edges descending from `edge`, with the induced relation.
BroadPoset subtree_at(const BroadPoset& poset, Index edge);
/// The root with its children, as a corolla.
BroadPoset root_corolla(const BroadPoset& poset);

}  // namespace dendro
