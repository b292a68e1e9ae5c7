#include "dendro/dendroidal.hpp"

#include <algorithm>
#include <stdexcept>

namespace dendro {

BinaryRelation descendant_order(const BroadPoset& poset) {
  const std::size_t n = poset.size();
  BinaryRelation below(n);
  for (const auto& pair : poset.relation()) {
    for (Index x : pair.source) below.set(x, pair.target);
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (below(i, k))
        for (std::size_t j = 0; j < n; ++j)
          if (below(k, j)) below.set(i, j);
  return below;
}

namespace {

std::optional<EdgeClassification> try_classify(const BroadPoset& poset, Index edge,
                                               const BinaryRelation& below) {
  auto hat = poset.sources(edge);
  if (hat.empty()) return EdgeClassification{};
  for (const auto& candidate : hat) {
    // Necessary condition: every letter below the edge descends from a
    // letter of the candidate.
    bool covers = std::all_of(hat.begin(), hat.end(), [&](const Word& w) {
      return std::all_of(w.begin(), w.end(), [&](Index x) {
        return std::any_of(candidate.begin(), candidate.end(),
                           [&](Index y) { return below(x, y); });
      });
    });
    if (!covers) continue;
    bool maximum = std::all_of(hat.begin(), hat.end(), [&](const Word& w) {
      return word_leq(poset, w, candidate);
    });
    if (maximum) {
      if (candidate.empty()) {
        return EdgeClassification{EdgeClassification::Kind::stump, {}};
      }
      return EdgeClassification{EdgeClassification::Kind::has_children, candidate};
    }
  }
  return std::nullopt;
}

}  // namespace

EdgeClassification classify_edge(const BroadPoset& poset, Index edge) {
  if (auto c = try_classify(poset, edge, descendant_order(poset))) return *c;
  throw NotDendroidal("'" + poset.name(edge) +
                      "' is neither a leaf nor has children");
}

namespace {

DendroReport check(const BroadPoset& poset, std::vector<EdgeClassification>* edges,
                   BinaryRelation* order) {
  DendroReport report;
  ValidationReport v = validate(poset);
  report.valid = v.ok();
  report.violations = v.violations;

  report.simple = true;
  for (const auto& pair : poset.relation()) {
    Word sorted = pair.source;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      report.simple = false;
      report.violations.push_back("simplicity: repeated letter in " + poset.format(pair));
    }
  }

  BinaryRelation below = descendant_order(poset);
  for (Index r = 0; r < poset.size(); ++r) {
    bool top = true;
    for (Index x = 0; x < poset.size() && top; ++x) top = below(x, r);
    if (top) {
      report.has_root = true;
      report.root = poset.name(r);
      break;
    }
  }
  if (!report.has_root) {
    std::string maximal;
    for (Index r = 0; r < poset.size(); ++r) {
      bool is_max = true;
      for (Index x = 0; x < poset.size() && is_max; ++x) {
        is_max = x == r || !below(r, x);
      }
      if (is_max) maximal += (maximal.empty() ? "" : ", ") + poset.name(r);
    }
    report.violations.push_back(
        poset.empty() ? std::string("root: the carrier is empty")
                      : "root: no maximum for the descendant order (maximal: " +
                            maximal + ")");
  }

  report.children_axiom = true;
  for (Index e = 0; e < poset.size(); ++e) {
    auto c = try_classify(poset, e, below);
    if (!c) {
      report.children_axiom = false;
      report.violations.push_back("children: '" + poset.name(e) +
                                  "' is not a leaf and has no children");
    } else if (edges) {
      edges->push_back(std::move(*c));
    }
  }
  report.is_dendroidal =
      report.valid && report.simple && report.has_root && report.children_axiom;
  if (order) *order = std::move(below);
  return report;
}

}  // namespace

DendroReport check_dendroidal(const BroadPoset& poset) { return check(poset, nullptr, nullptr); }

Tree::Tree(BroadPoset poset) : poset_(std::move(poset)) {
  DendroReport report = check(poset_, &edges_, &below_);
  if (!report.is_dendroidal) {
    throw NotDendroidal(report.violations.empty()
                            ? std::string("not dendroidally ordered")
                            : "not dendroidally ordered: " + report.violations.front());
  }
  root_ = poset_.index(*report.root);
  parent_.assign(size(), std::nullopt);
  for (Index e = 0; e < size(); ++e) {
    for (Index c : edges_[e].children) {
      if (parent_[c]) throw std::logic_error("edge with two parents");
      parent_[c] = e;
    }
  }
}

Index Tree::join(Index a, Index b) const {
  while (true) {
    if (descends(a, b)) return b;
    if (descends(b, a)) return a;
    // Incomparable edges are not the root, so both parents exist and
    // have the same join.
    a = *parent(a);
    b = *parent(b);
  }
}

std::vector<Index> Tree::leaves() const {
  std::vector<Index> out;
  for (Index e = 0; e < size(); ++e)
    if (is_leaf(e)) out.push_back(e);
  return out;
}

std::vector<Index> Tree::stumps() const {
  std::vector<Index> out;
  for (Index e = 0; e < size(); ++e)
    if (is_stump(e)) out.push_back(e);
  return out;
}

std::vector<Index> Tree::inner_edges() const {
  std::vector<Index> out;
  for (Index e = 0; e < size(); ++e)
    if (e != root_ && !is_leaf(e)) out.push_back(e);
  return out;
}

std::vector<Pair> Tree::vertices() const {
  std::vector<Pair> out;
  for (Index e = 0; e < size(); ++e)
    if (!is_leaf(e)) out.push_back({children(e), e});
  return out;
}

Index root(const BroadPoset& poset) { return Tree(poset).root(); }

Index parent(const BroadPoset& poset, Index edge) {
  Tree tree(poset);
  if (auto p = tree.parent(edge)) return *p;
  throw NoParent("'" + poset.name(edge) + "' is the root");
}

Index join(const BroadPoset& poset, Index a, Index b) {
  return Tree(poset).join(a, b);
}

std::vector<Pair> links(const BroadPoset& poset) {
  std::vector<Pair> out;
  for (const auto& pair : poset.relation()) {
    auto hat = poset.sources(pair.target);
    bool covering = std::none_of(hat.begin(), hat.end(), [&](const Word& other) {
      return other != pair.source && word_leq(poset, pair.source, other);
    });
    if (covering) out.push_back(pair);
  }
  return out;
}

std::size_t degree(const BroadPoset& poset) { return links(poset).size(); }

std::vector<Index> leaves(const BroadPoset& poset) {
  std::vector<Index> out;
  for (Index e = 0; e < poset.size(); ++e)
    if (poset.sources(e).empty()) out.push_back(e);
  return out;
}

BroadPoset subtree_at(const BroadPoset& poset, Index edge) {
  Tree tree(poset);
  std::vector<std::string> kept;
  for (Index x = 0; x < poset.size(); ++x)
    if (tree.descends(x, edge)) kept.push_back(poset.name(x));
  return induced(poset, kept);
}

BroadPoset root_corolla(const BroadPoset& poset) {
  Tree tree(poset);
  std::vector<std::string> children;
  for (Index c : tree.children(tree.root())) children.push_back(poset.name(c));
  std::vector<std::string> carrier = children;
  carrier.push_back(poset.name(tree.root()));
  std::vector<NamedPair> pairs;
  if (!tree.is_leaf(tree.root())) pairs.push_back({children, poset.name(tree.root())});
  return BroadPoset(poset.flavour(), std::move(carrier), pairs);
}

}  // namespace dendro
