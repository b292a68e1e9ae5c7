#pragma once

// Brute-force reference computations. Nothing here calls the library's
// closure, tree or enumeration code; results are compared against it.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "dendro/broad_poset.hpp"

namespace oracle {

using dendro::Flavour;
using dendro::NamedPair;

using Word = std::vector<std::string>;
using Relation = std::set<std::pair<Word, std::string>>;

inline Word canon(Flavour flavour, Word w) {
  if (flavour == Flavour::commutative) std::sort(w.begin(), w.end());
  return w;
}

/// Saturates a relation by substituting a word for a letter, one position at
/// a time, until nothing new appears. Reflexive pairs are dropped at the end.
inline Relation closure(Flavour flavour, const std::vector<NamedPair>& generators) {
  Relation rel;
  for (const auto& g : generators) rel.insert({canon(flavour, g.source), g.target});
  bool changed = true;
  while (changed) {
    changed = false;
    Relation next = rel;
    for (const auto& [outer, top] : rel) {
      for (std::size_t i = 0; i < outer.size(); ++i) {
        for (const auto& [inner, mid] : rel) {
          if (mid != outer[i]) continue;
          Word w(outer.begin(), outer.begin() + static_cast<std::ptrdiff_t>(i));
          w.insert(w.end(), inner.begin(), inner.end());
          w.insert(w.end(), outer.begin() + static_cast<std::ptrdiff_t>(i) + 1, outer.end());
          if (next.insert({canon(flavour, w), top}).second) changed = true;
        }
      }
    }
    rel = std::move(next);
  }
  std::erase_if(rel, [](const auto& p) { return p.first.size() == 1 && p.first[0] == p.second; });
  return rel;
}

inline Relation relation_of(const dendro::BroadPoset& p) {
  Relation rel;
  for (const auto& np : p.named_relation()) rel.insert({np.source, np.target});
  return rel;
}

/// A rooted tree as a parent array: edge 0 is the root, parent[i] < i.
/// `stump[i]` marks a childless edge that carries an empty vertex.
struct Shape {
  std::vector<int> parent;
  std::vector<bool> stump;

  std::size_t size() const { return parent.size(); }
  std::vector<std::size_t> children(std::size_t e) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 1; i < size(); ++i)
      if (parent[i] == static_cast<int>(e)) out.push_back(i);
    return out;
  }
  bool leaf(std::size_t e) const { return children(e).empty() && !stump[e]; }
  std::size_t vertex_count() const {
    std::size_t n = 0;
    for (std::size_t e = 0; e < size(); ++e) n += leaf(e) ? 0 : 1;
    return n;
  }
};

inline std::string code(const Shape& s, std::size_t e, Flavour flavour) {
  if (s.leaf(e)) return "l";
  std::vector<std::string> kids;
  for (auto c : s.children(e)) kids.push_back(code(s, c, flavour));
  if (flavour == Flavour::commutative) std::sort(kids.begin(), kids.end());
  std::string out = "(";
  for (const auto& k : kids) out += k;
  return out + ")";
}

/// Every shape with exactly n edges, as raw parent arrays (with repeats).
inline void for_each_shape(std::size_t n, const std::function<void(const Shape&)>& visit) {
  Shape s;
  s.parent.assign(n, -1);
  std::function<void(std::size_t)> place = [&](std::size_t i) {
    if (i == n) {
      std::vector<std::size_t> childless;
      for (std::size_t e = 0; e < n; ++e)
        if (s.children(e).empty()) childless.push_back(e);
      for (std::size_t mask = 0; mask < (std::size_t{1} << childless.size()); ++mask) {
        s.stump.assign(n, false);
        for (std::size_t k = 0; k < childless.size(); ++k)
          if (mask >> k & 1) s.stump[childless[k]] = true;
        visit(s);
      }
      return;
    }
    // Preorder labelling: the parent of i is i-1 or one of its ancestors.
    for (int p = static_cast<int>(i) - 1; p >= 0; p = s.parent[static_cast<std::size_t>(p)]) {
      s.parent[i] = p;
      place(i + 1);
    }
  };
  if (n == 0) return;
  place(1);
}

/// Distinct shape codes with exactly n edges.
inline std::set<std::string> shape_codes(std::size_t n, Flavour flavour) {
  std::set<std::string> out;
  for_each_shape(n, [&](const Shape& s) { out.insert(code(s, 0, flavour)); });
  return out;
}

/// Words below an edge: the edge itself, or the concatenation of one word
/// below each child. A stump contributes the empty word.
inline std::vector<Word> cuts(const Shape& s, std::size_t e, const std::vector<std::string>& names) {
  std::vector<Word> out{{names[e]}};
  if (s.leaf(e)) return out;
  std::vector<Word> partial{{}};
  for (auto c : s.children(e)) {
    std::vector<Word> next;
    for (const auto& w : partial)
      for (const auto& tail : cuts(s, c, names)) {
        Word x = w;
        x.insert(x.end(), tail.begin(), tail.end());
        next.push_back(std::move(x));
      }
    partial = std::move(next);
  }
  out.insert(out.end(), partial.begin(), partial.end());
  return out;
}

/// The full relation of the tree, straight from its cuts.
inline Relation tree_relation(const Shape& s, const std::vector<std::string>& names, Flavour flavour) {
  Relation rel;
  for (std::size_t e = 0; e < s.size(); ++e)
    for (const auto& w : cuts(s, e, names))
      if (!(w.size() == 1 && w[0] == names[e])) rel.insert({canon(flavour, w), names[e]});
  return rel;
}

/// Weakly order-preserving maps {0..m} -> {0..n}, by counting.
inline std::size_t chain_maps(std::size_t m, std::size_t n) {
  std::size_t count = 0;
  std::vector<std::size_t> f(m + 1, 0);
  std::function<void(std::size_t, std::size_t)> go = [&](std::size_t i, std::size_t low) {
    if (i == f.size()) {
      ++count;
      return;
    }
    for (std::size_t v = low; v <= n; ++v) go(i + 1, v);
  };
  go(0, 0);
  return count;
}

/// b <=_d a read off the relation: equal, or b is a letter of a word below a.
inline bool descends(const Relation& rel, const std::string& b, const std::string& a) {
  if (a == b) return true;
  for (const auto& [w, t] : rel)
    if (t == a && std::find(w.begin(), w.end(), b) != w.end()) return true;
  return false;
}

}  // namespace oracle
