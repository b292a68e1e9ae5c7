#include "dendro/trees.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "dendro/dendroidal.hpp"
#include "dendro/monoidal.hpp"

namespace dendro {

std::size_t TreeTerm::edge_count() const {
  std::size_t n = 1;
  if (vertex)
    for (const auto& child : *vertex) n += child.edge_count();
  return n;
}

std::vector<std::string> TreeTerm::edges() const {
  std::vector<std::string> out{edge};
  if (vertex)
    for (const auto& child : *vertex) {
      auto more = child.edges();
      out.insert(out.end(), more.begin(), more.end());
    }
  return out;
}

namespace {

class TermParser {
 public:
  explicit TermParser(std::string_view text) : text_(text) {}

  TreeTerm parse() {
    TreeTerm t = tree();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return t;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::string ident() {
    skip_space();
    if (pos_ >= text_.size()) fail("expected an edge name, found end of input");
    if (!std::isalpha(static_cast<unsigned char>(text_[pos_]))) {
      fail("expected an edge name, found '" + std::string(1, text_[pos_]) + "'");
    }
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      ++pos_;
    }
    std::string name(text_.substr(start, pos_ - start));
    if (!seen_.insert(name).second) throw DuplicateEdge("edge '" + name + "' appears twice");
    return name;
  }

  TreeTerm tree() {
    TreeTerm t = TreeTerm::leaf(ident());
    if (!accept('(')) return t;
    t.vertex.emplace();
    if (accept(')')) return t;
    do {
      t.vertex->push_back(tree());
    } while (accept(','));
    if (!accept(')')) fail("expected ',' or ')'");
    return t;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::set<std::string> seen_;
};

}  // namespace

TreeTerm parse_term(std::string_view text) { return TermParser(text).parse(); }

std::string print_term(const TreeTerm& term) {
  std::string out = term.edge;
  if (!term.vertex) return out;
  out += '(';
  for (std::size_t i = 0; i < term.vertex->size(); ++i) {
    if (i) out += ',';
    out += print_term((*term.vertex)[i]);
  }
  return out + ')';
}

namespace {

BroadPoset term_to_broad(const TreeTerm& term, Flavour flavour) {
  if (term.is_leaf()) return star(flavour, term.edge);
  std::vector<std::string> children;
  for (const auto& child : *term.vertex) children.push_back(child.edge);
  BroadPoset out = corolla(flavour, term.edge, children);
  for (const auto& child : *term.vertex) {
    if (child.is_leaf()) continue;  // grafting the singleton is the identity
    out = graft(out, child.edge, term_to_broad(child, flavour)).tree;
  }
  return out;
}

}  // namespace

BroadPoset to_broad(const TreeTerm& term, Flavour flavour) {
  auto names = term.edges();
  std::sort(names.begin(), names.end());
  if (auto dup = std::adjacent_find(names.begin(), names.end()); dup != names.end()) {
    throw DuplicateEdge("edge '" + *dup + "' appears twice");
  }
  return term_to_broad(term, flavour);
}

TreeTerm to_term(const BroadPoset& poset) {
  Tree tree(poset);
  const Index r = tree.root();
  if (tree.is_leaf(r)) return TreeTerm::leaf(poset.name(r));
  std::vector<TreeTerm> children;
  for (Index c : tree.children(r)) children.push_back(to_term(subtree_at(poset, c)));
  return TreeTerm::node(poset.name(r), std::move(children));
}

Graft graft(const BroadPoset& base, std::string_view leaf, const BroadPoset& top) {
  Tree lower(base);
  Tree upper(top);
  const Index at = base.index(leaf);
  if (!lower.is_leaf(at)) throw NotALeaf("'" + std::string(leaf) + "' is not a leaf");
  if (base.flavour() != top.flavour()) throw FlavourMismatch("grafting across flavours");

  auto point = std::make_shared<const BroadPoset>(star(base.flavour()));
  MonotoneMap to_leaf(point, std::make_shared<const BroadPoset>(base), {at});
  MonotoneMap to_root(point, std::make_shared<const BroadPoset>(top), {upper.root()});
  Pushout p = pushout(to_leaf, to_root);
  return Graft{p.object, p.from_second.assignment()};
}

BroadPoset full_graft(const BroadPoset& base,
                      const std::map<std::string, BroadPoset>& on_leaves) {
  Tree tree(base);
  for (const auto& [leaf, top] : on_leaves) {
    if (!tree.is_leaf(base.index(leaf))) throw NotALeaf("'" + leaf + "' is not a leaf");
  }
  BroadPoset out = base;
  for (const auto& [leaf, top] : on_leaves) out = graft(out, leaf, top).tree;
  return out;
}

std::string canonical_code(const TreeTerm& term, Flavour flavour) {
  if (term.is_leaf()) return "l";
  std::vector<std::string> codes;
  for (const auto& child : *term.vertex) codes.push_back(canonical_code(child, flavour));
  if (flavour == Flavour::commutative) std::sort(codes.begin(), codes.end());
  std::string out = "(";
  for (const auto& c : codes) out += c;
  return out + ")";
}

std::string canonical_code(const BroadPoset& tree) {
  return canonical_code(to_term(tree), tree.flavour());
}

namespace {

void align(const TreeTerm& a, const TreeTerm& b, Flavour flavour, Assignment& out) {
  out[a.edge] = b.edge;
  if (a.is_leaf()) return;
  auto order = [&](const TreeTerm& t) {
    std::vector<const TreeTerm*> kids;
    for (const auto& c : *t.vertex) kids.push_back(&c);
    if (flavour == Flavour::commutative) {
      std::stable_sort(kids.begin(), kids.end(), [&](const TreeTerm* x, const TreeTerm* y) {
        return std::pair(canonical_code(*x, flavour), x->edge) <
               std::pair(canonical_code(*y, flavour), y->edge);
      });
    }
    return kids;
  };
  auto ka = order(a);
  auto kb = order(b);
  for (std::size_t i = 0; i < ka.size(); ++i) align(*ka[i], *kb[i], flavour, out);
}

}  // namespace

std::optional<MonotoneMap> tree_isomorphism(const BroadPoset& a, const BroadPoset& b) {
  if (a.flavour() != b.flavour()) throw FlavourMismatch("trees of different flavours");
  TreeTerm ta = to_term(a);
  TreeTerm tb = to_term(b);
  if (canonical_code(ta, a.flavour()) != canonical_code(tb, b.flavour())) return std::nullopt;
  Assignment assignment;
  align(ta, tb, a.flavour(), assignment);
  return MonotoneMap::make(a, b, assignment);
}

namespace {

/// Unnamed shapes with exactly n edges.
std::vector<TreeTerm> shapes_with(std::size_t n, Flavour flavour,
                                  std::vector<std::vector<TreeTerm>>& memo) {
  if (!memo[n].empty() || n == 0) return memo[n];
  std::vector<TreeTerm> out;
  if (n == 1) {
    out.push_back(TreeTerm::leaf(""));
    out.push_back(TreeTerm::node("", {}));
  } else {
    // Children forests with n - 1 edges in total. Commutative forests are
    // listed as non-decreasing sequences of (size, shape index).
    std::vector<TreeTerm> forest;
    auto extend = [&](auto&& self, std::size_t left, std::size_t min_size,
                      std::size_t min_index) -> void {
      if (left == 0) {
        out.push_back(TreeTerm::node("", forest));
        return;
      }
      for (std::size_t size = 1; size <= left; ++size) {
        if (flavour == Flavour::commutative && size < min_size) continue;
        auto options = shapes_with(size, flavour, memo);
        std::size_t first = (flavour == Flavour::commutative && size == min_size) ? min_index : 0;
        for (std::size_t k = first; k < options.size(); ++k) {
          forest.push_back(options[k]);
          self(self, left - size, size, k);
          forest.pop_back();
        }
      }
    };
    extend(extend, n - 1, 1, 0);
  }
  memo[n] = out;
  return out;
}

void name_preorder(TreeTerm& t, std::size_t& next) {
  t.edge = "e" + std::to_string(next++);
  if (t.vertex)
    for (auto& c : *t.vertex) name_preorder(c, next);
}

}  // namespace

std::vector<TreeTerm> enumerate_trees(std::size_t max_edges, Flavour flavour,
                                      TreeEnumerationOptions options) {
  if (max_edges > options.max_edges_cap) {
    throw BudgetExceeded("tree enumeration up to " + std::to_string(max_edges) +
                         " edges exceeds the cap " +
                         std::to_string(options.max_edges_cap));
  }
  std::vector<std::vector<TreeTerm>> memo(max_edges + 1);
  std::vector<std::pair<std::pair<std::size_t, std::string>, TreeTerm>> keyed;
  std::set<std::string> seen;
  for (std::size_t n = 1; n <= max_edges; ++n) {
    for (TreeTerm t : shapes_with(n, flavour, memo)) {
      std::string code = canonical_code(t, flavour);
      if (!seen.insert(code).second) continue;
      std::size_t next = 0;
      name_preorder(t, next);
      keyed.push_back({{n, code}, std::move(t)});
    }
  }
  std::sort(keyed.begin(), keyed.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  std::vector<TreeTerm> out;
  for (auto& [key, t] : keyed) out.push_back(std::move(t));
  return out;
}

}  // namespace dendro
