#include "dendro/omega.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <stdexcept>

#include "dendro/dendroidal.hpp"
#include "dendro/trees.hpp"

namespace dendro {

std::string describe(const FaceKind& kind) {
  switch (kind.kind) {
    case FaceKind::Kind::inner:
      return "inner face at " + kind.edge;
    case FaceKind::Kind::root:
      return "root face onto " + kind.edge;
    case FaceKind::Kind::outer: {
      std::string word;
      for (const auto& x : kind.vertex.source) word += (word.empty() ? "" : "·") + x;
      if (word.empty()) word = "ε";
      return "outer face pruning " + word + " ≤ " + kind.vertex.target;
    }
  }
  return {};
}

std::string_view to_string(MapKind kind) {
  switch (kind) {
    case MapKind::isomorphism: return "isomorphism";
    case MapKind::inner_face: return "inner_face";
    case MapKind::outer_face: return "outer_face";
    case MapKind::root_face: return "root_face";
    case MapKind::degeneracy: return "degeneracy";
    case MapKind::other: return "other";
  }
  return "other";
}

namespace {

std::vector<std::string> without(const BroadPoset& p, const std::set<std::string>& drop) {
  std::vector<std::string> kept;
  for (const auto& id : p.carrier())
    if (!drop.contains(id)) kept.push_back(id);
  return kept;
}

/// The tree generated by the vertices of `tree` minus the stump vertices of
/// the listed edges, which become leaves.
BroadPoset remove_stumps(const BroadPoset& tree, const std::set<std::string>& stumps) {
  if (stumps.empty()) return tree;
  Tree t(tree);
  std::vector<Pair> generators;
  for (const auto& v : t.vertices()) {
    if (v.source.empty() && stumps.contains(tree.name(v.target))) continue;
    generators.push_back(v);
  }
  return generate_indexed(tree.flavour(), tree.carrier(), std::move(generators));
}

MonotoneMap inclusion(const BroadPoset& sub, const BroadPoset& whole) {
  std::vector<Index> images;
  for (const auto& id : sub.carrier()) images.push_back(whole.index(id));
  return MonotoneMap(std::make_shared<const BroadPoset>(sub),
                     std::make_shared<const BroadPoset>(whole), std::move(images));
}

bool all_leaves(const Tree& t, const Word& word) {
  return std::all_of(word.begin(), word.end(), [&](Index x) { return t.is_leaf(x); });
}

std::vector<std::string> names(const BroadPoset& p, const Word& word) {
  std::vector<std::string> out;
  for (Index x : word) out.push_back(p.name(x));
  return out;
}

}  // namespace

std::vector<BroadPoset> enumerate_subtrees(const BroadPoset& tree, SubtreeOptions options) {
  Tree whole(tree);
  const std::size_t n = tree.size();
  if (n > options.max_edges || n >= 63) {
    throw BudgetExceeded("subtree enumeration over " + std::to_string(n) +
                         " edges exceeds the cap " + std::to_string(options.max_edges));
  }
  std::vector<BroadPoset> out;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    std::vector<std::string> subset;
    for (Index i = 0; i < n; ++i)
      if (mask >> i & 1) subset.push_back(tree.name(i));
    BroadPoset sub = induced(tree, subset);
    if (!is_dendroidal(sub)) continue;
    std::vector<Index> stumps = Tree(sub).stumps();
    for (std::uint64_t z = 0; z < (std::uint64_t{1} << stumps.size()); ++z) {
      std::set<std::string> chosen;
      for (std::size_t k = 0; k < stumps.size(); ++k)
        if (z >> k & 1) chosen.insert(sub.name(stumps[k]));
      out.push_back(remove_stumps(sub, chosen));
    }
  }
  return out;
}

std::vector<BroadPoset> maximal_subtrees(const BroadPoset& tree, SubtreeOptions options) {
  const std::size_t d = degree(tree);
  std::vector<BroadPoset> out;
  if (d == 0) return out;
  for (auto& sub : enumerate_subtrees(tree, options))
    if (degree(sub) + 1 == d) out.push_back(std::move(sub));
  return out;
}

MonotoneMap inner_face(const BroadPoset& tree, std::string_view edge) {
  Tree t(tree);
  Index e = tree.index(edge);
  if (e == t.root() || t.is_leaf(e)) {
    throw NotInnerEdge("'" + std::string(edge) + "' is not an inner edge");
  }
  return inclusion(induced(tree, without(tree, {std::string(edge)})), tree);
}

MonotoneMap outer_face(const BroadPoset& tree, const NamedPair& cluster) {
  Tree t(tree);
  Index x = tree.index(cluster.target);
  Word children = tree.word(cluster.source);
  if (t.is_leaf(x) || t.children(x) != children || !all_leaves(t, children)) {
    throw NotOuterCluster("vertex at '" + cluster.target + "' is not an outer cluster");
  }
  if (children.empty()) return inclusion(remove_stumps(tree, {cluster.target}), tree);
  std::set<std::string> drop(cluster.source.begin(), cluster.source.end());
  return inclusion(induced(tree, without(tree, drop)), tree);
}

MonotoneMap root_face(const BroadPoset& tree, std::string_view branch) {
  Tree t(tree);
  Index b = tree.index(branch);
  const Word& top = t.children(t.root());
  bool ok = std::find(top.begin(), top.end(), b) != top.end();
  for (Index x : top) ok = ok && (x == b || t.is_leaf(x));
  if (!ok) throw NoRootFace("no root face onto '" + std::string(branch) + "'");
  return inclusion(subtree_at(tree, b), tree);
}

std::vector<Face> faces(const BroadPoset& tree) {
  Tree t(tree);
  std::vector<Face> out;
  for (Index e : t.inner_edges()) {
    out.push_back({{FaceKind::Kind::inner, tree.name(e), {}}, inner_face(tree, tree.name(e))});
  }
  for (const auto& v : t.vertices()) {
    if (!all_leaves(t, v.source)) continue;
    NamedPair cluster = tree.named(v);
    out.push_back({{FaceKind::Kind::outer, {}, cluster}, outer_face(tree, cluster)});
  }
  const Word& top = t.children(t.root());
  for (Index b : top) {
    bool ok = true;
    for (Index x : top) ok = ok && (x == b || t.is_leaf(x));
    if (ok) {
      out.push_back({{FaceKind::Kind::root, tree.name(b), {}}, root_face(tree, tree.name(b))});
    }
  }
  return out;
}

FaceKind classify_maximal(const BroadPoset& tree, const BroadPoset& sub) {
  if (!is_dendroidal(sub)) throw NotMaximal("the candidate is not a tree");
  for (const auto& id : sub.carrier()) {
    if (!tree.find(id)) throw NotMaximal("'" + id + "' is not an edge of the tree");
  }
  if (!is_monotone(inclusion(sub, tree).images(), sub, tree)) {
    throw NotMaximal("the candidate's relation is not contained in the tree's");
  }
  if (degree(sub) + 1 != degree(tree)) {
    throw NotMaximal("the candidate does not have degree one less than the tree");
  }
  std::vector<FaceKind> matches;
  for (const auto& face : faces(tree)) {
    if (face.inclusion.domain() == sub) matches.push_back(face.kind);
  }
  if (matches.empty()) throw NotMaximal("the candidate is not a face of the tree");
  if (matches.size() > 1) {
    throw std::logic_error("maximal subtree matches several faces");
  }
  return matches.front();
}

MonotoneMap degeneracy(const BroadPoset& tree, std::string_view child,
                       std::string_view parent) {
  Tree t(tree);
  Index c = tree.index(child);
  Index p = tree.index(parent);
  if (t.children(p) != Word{c}) {
    throw NotUnaryVertex("'" + std::string(child) + " ≤ " + std::string(parent) +
                         "' is not a unary vertex");
  }
  auto target = std::make_shared<const BroadPoset>(
      induced(tree, without(tree, {std::string(parent)})));
  std::vector<Index> images;
  for (Index x = 0; x < tree.size(); ++x) {
    images.push_back(target->index(x == p ? tree.name(c) : tree.name(x)));
  }
  return MonotoneMap(std::make_shared<const BroadPoset>(tree), target, std::move(images));
}

std::vector<MonotoneMap> degeneracies(const BroadPoset& tree) {
  Tree t(tree);
  std::vector<MonotoneMap> out;
  for (const auto& v : t.vertices()) {
    if (v.source.size() == 1) {
      out.push_back(degeneracy(tree, tree.name(v.source.front()), tree.name(v.target)));
    }
  }
  return out;
}

namespace {

std::optional<MapKind> classify_face(const MonotoneMap& f) {
  if (!f.injective()) return std::nullopt;
  const BroadPoset& dom = f.domain();
  const BroadPoset& cod = f.codomain();
  std::vector<std::string> carrier;
  for (Index x = 0; x < dom.size(); ++x) carrier.push_back(cod.name(f(x)));
  std::vector<NamedPair> pairs;
  for (const auto& pair : dom.relation()) {
    NamedPair np;
    for (Index x : pair.source) np.source.push_back(cod.name(f(x)));
    np.target = cod.name(f(pair.target));
    pairs.push_back(std::move(np));
  }
  BroadPoset image(dom.flavour(), std::move(carrier), pairs);
  try {
    switch (classify_maximal(cod, image).kind) {
      case FaceKind::Kind::inner: return MapKind::inner_face;
      case FaceKind::Kind::outer: return MapKind::outer_face;
      case FaceKind::Kind::root: return MapKind::root_face;
    }
  } catch (const NotMaximal&) {
  }
  return std::nullopt;
}

bool is_degeneracy_like(const MonotoneMap& f) {
  const BroadPoset& dom = f.domain();
  if (!f.surjective() || dom.size() != f.codomain().size() + 1) return false;
  Tree t(dom);
  for (const auto& v : t.vertices()) {
    if (v.source.size() != 1) continue;
    Index c = v.source.front();
    if (f(c) != f(v.target)) continue;
    MonotoneMap sigma = degeneracy(dom, dom.name(c), dom.name(v.target));
    std::vector<Index> rest;
    for (Index y = 0; y < sigma.codomain().size(); ++y) {
      rest.push_back(f(dom.index(sigma.codomain().name(y))));
    }
    MonotoneMap residue(sigma.codomain_ptr(), f.codomain_ptr(), std::move(rest));
    return is_monotone(residue.images(), residue.domain(), residue.codomain()) &&
           is_isomorphism(residue);
  }
  return false;
}

}  // namespace

MapKind classify_map(const MonotoneMap& f) {
  if (!is_dendroidal(f.domain()) || !is_dendroidal(f.codomain())) return MapKind::other;
  if (is_isomorphism(f)) return MapKind::isomorphism;
  if (auto face = classify_face(f)) return *face;
  if (is_degeneracy_like(f)) return MapKind::degeneracy;
  return MapKind::other;
}

bool is_degeneracy_template(const MonotoneMap& f) {
  if (!is_dendroidal(f.domain())) return false;
  Tree t(f.domain());
  for (const auto& v : t.vertices()) {
    if (v.source.size() != 1) continue;
    const auto& dom = f.domain();
    if (f == degeneracy(dom, dom.name(v.source.front()), dom.name(v.target))) return true;
  }
  return false;
}

bool is_positional(const MonotoneMap& iso) {
  if (!is_dendroidal(iso.domain()) || !is_dendroidal(iso.codomain())) return false;
  TreeTerm a = to_term(iso.domain());
  TreeTerm b = to_term(iso.codomain());
  bool ok = true;
  auto walk = [&](auto&& self, const TreeTerm& x, const TreeTerm& y) -> void {
    ok = ok && iso(x.edge) == y.edge && x.vertex.has_value() == y.vertex.has_value();
    if (!ok || x.is_leaf()) return;
    ok = x.vertex->size() == y.vertex->size();
    for (std::size_t i = 0; ok && i < x.vertex->size(); ++i) {
      self(self, (*x.vertex)[i], (*y.vertex)[i]);
    }
  };
  walk(walk, a, b);
  return ok;
}

MonotoneMap Factorization::composite() const {
  MonotoneMap out = degeneracies.empty() ? identity(iso.domain_ptr())
                                         : degeneracies.front();
  for (std::size_t k = 1; k < degeneracies.size(); ++k) out = compose(degeneracies[k], out);
  out = compose(iso, out);
  for (const auto& face : faces) out = compose(face, out);
  return out;
}

std::vector<MapKind> Factorization::kinds() const {
  std::vector<MapKind> out;
  for (const auto& d : degeneracies) out.push_back(classify_map(d));
  out.push_back(classify_map(iso));
  for (const auto& f : faces) out.push_back(classify_map(f));
  return out;
}

namespace {

/// One step of shrinking the target: drop edges, or turn a stump into a leaf.
struct Removal {
  std::vector<std::string> edges;
  std::optional<std::string> stump;
};

struct Plan {
  std::vector<std::pair<std::string, std::string>> collapses;  // (child, parent)
  std::vector<Removal> removals;
};

/// Applies one removal to a tree, giving the maximal subtree it describes.
BroadPoset apply_removal(const BroadPoset& tree, const Removal& step) {
  if (step.stump) return remove_stumps(tree, {*step.stump});
  return induced(tree, without(tree, {step.edges.begin(), step.edges.end()}));
}

/// The step pruning the outer cluster at x.
Removal prune(const Tree& t, Index x) {
  const auto& p = t.poset();
  if (t.is_stump(x)) return {{}, p.name(x)};
  return {names(p, t.children(x)), std::nullopt};
}

/// Outer and root faces from `tree` down to the subtree at `edge`.
BroadPoset peel_to(BroadPoset tree, Index edge_in_tree, Plan& out) {
  const std::string target = tree.name(edge_in_tree);
  while (true) {
    Tree t(tree);
    const Index b = tree.index(target);
    const Index r = t.root();
    if (r == b) return tree;
    const Word& top = t.children(r);
    Index branch = *std::find_if(top.begin(), top.end(),
                                 [&](Index c) { return t.descends(b, c); });
    bool others_are_leaves = true;
    for (Index x : top) others_are_leaves = others_are_leaves && (x == branch || t.is_leaf(x));
    Removal step;
    if (others_are_leaves) {
      step.edges.push_back(tree.name(r));
      for (Index x : top)
        if (x != branch) step.edges.push_back(tree.name(x));
    } else {
      std::optional<Index> cluster;
      for (Index x = 0; x < tree.size() && !cluster; ++x) {
        if (!t.is_leaf(x) && !t.descends(x, branch) && all_leaves(t, t.children(x))) cluster = x;
      }
      if (!cluster) throw std::logic_error("no outer cluster outside the kept branch");
      step = prune(t, *cluster);
    }
    out.removals.push_back(step);
    tree = apply_removal(tree, step);
  }
}

void plan(const BroadPoset& a, const BroadPoset& b, const Assignment& f, Plan& out) {
  Tree ta(a);
  Tree tb(b);
  auto image = [&](Index x) { return b.index(f.at(a.name(x))); };
  const Index ra = ta.root();
  const Index rb = tb.root();

  if (ta.degree() == 0) {
    BroadPoset cur = peel_to(b, image(ra), out);
    while (true) {
      Tree t(cur);
      if (t.degree() == 0) return;
      std::optional<Index> cluster;
      for (Index x = 0; x < cur.size() && !cluster; ++x) {
        if (!t.is_leaf(x) && all_leaves(t, t.children(x))) cluster = x;
      }
      Removal step = prune(t, *cluster);
      out.removals.push_back(step);
      cur = apply_removal(cur, step);
    }
  }

  if (image(ra) != rb) {
    BroadPoset sub = peel_to(b, image(ra), out);
    plan(a, sub, f, out);
    return;
  }

  Word w;
  for (Index x : ta.children(ra)) w.push_back(image(x));
  normalize(b.flavour(), w);

  if (!tb.is_leaf(rb) && w == tb.children(rb)) {
    for (Index x : ta.children(ra)) {
      plan(subtree_at(a, x), subtree_at(b, image(x)), f, out);
    }
    return;
  }

  const Word& top = ta.children(ra);
  auto onto_root = std::find_if(top.begin(), top.end(), [&](Index x) { return image(x) == rb; });
  if (onto_root != top.end()) {
    if (top.size() != 1) throw std::logic_error("non-unary vertex sent onto the root");
    out.collapses.push_back({a.name(*onto_root), a.name(ra)});
    plan(induced(a, without(a, {a.name(ra)})), b, f, out);
    return;
  }

  std::set<std::string> contracted;
  for (Index x = 0; x < b.size(); ++x) {
    if (x == rb) continue;
    bool reached = std::any_of(w.begin(), w.end(), [&](Index y) { return tb.descends(x, y); });
    if (!reached) contracted.insert(b.name(x));
  }
  if (contracted.empty()) throw std::logic_error("factorization made no progress");
  for (const auto& x : contracted) out.removals.push_back({{x}, std::nullopt});
  plan(a, induced(b, without(b, contracted)), f, out);
}

}  // namespace

Factorization factorize(const MonotoneMap& f) {
  const BroadPoset& a = f.domain();
  const BroadPoset& b = f.codomain();
  if (!is_dendroidal(a) || !is_dendroidal(b)) {
    throw NotDendroidal("factorization needs a map between trees");
  }
  if (!is_monotone(f.images(), a, b)) throw NotMonotone("the map is not monotone");

  Plan steps;
  const Assignment assignment = f.assignment();
  plan(a, b, assignment, steps);

  Factorization out{{}, identity(f.domain_ptr()), {}};
  std::shared_ptr<const BroadPoset> source = f.domain_ptr();
  for (const auto& [child, parent] : steps.collapses) {
    out.degeneracies.push_back(degeneracy(*source, child, parent));
    source = out.degeneracies.back().codomain_ptr();
  }

  std::vector<std::shared_ptr<const BroadPoset>> chain{f.codomain_ptr()};
  for (const auto& step : steps.removals) {
    chain.push_back(std::make_shared<const BroadPoset>(apply_removal(*chain.back(), step)));
  }
  for (std::size_t k = chain.size() - 1; k > 0; --k) {
    std::vector<Index> images;
    for (const auto& id : chain[k]->carrier()) images.push_back(chain[k - 1]->index(id));
    out.faces.emplace_back(chain[k], chain[k - 1], std::move(images));
  }

  std::vector<Index> images;
  for (const auto& id : source->carrier()) images.push_back(chain.back()->index(assignment.at(id)));
  out.iso = MonotoneMap(source, chain.back(), std::move(images));
  if (!is_isomorphism(out.iso) || !(out.composite() == f)) {
    throw std::logic_error("factorization does not reproduce the map");
  }
  return out;
}

MonotoneMap graft_map(const BroadPoset& base, std::string_view leaf, const MonotoneMap& alpha) {
  Tree from(alpha.domain());
  Tree to(alpha.codomain());
  if (alpha(from.root()) != to.root()) {
    throw GraftUndefined("the map does not send root to root");
  }
  Graft lower = graft(base, leaf, alpha.domain());
  Graft upper = graft(base, leaf, alpha.codomain());
  Assignment assignment;
  for (const auto& id : base.carrier()) assignment[id] = id;
  for (const auto& id : alpha.domain().carrier()) {
    assignment[lower.renaming.at(id)] = upper.renaming.at(alpha(id));
  }
  return MonotoneMap::make(lower.tree, upper.tree, assignment);
}

}  // namespace dendro
