#include "dendro/monoidal.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace dendro {

BroadPoset star(Flavour flavour, std::string name) {
  return BroadPoset(flavour, {std::move(name)}, {});
}

BroadPoset corolla(Flavour flavour, std::string root,
                   std::vector<std::string> leaves) {
  std::vector<std::string> carrier = leaves;
  carrier.push_back(root);
  return BroadPoset(flavour, std::move(carrier),
                    {NamedPair{std::move(leaves), std::move(root)}});
}

BroadPoset corolla(Flavour flavour, std::size_t n) {
  std::vector<std::string> leaves;
  for (std::size_t i = 1; i <= n; ++i) leaves.push_back("l" + std::to_string(i));
  return corolla(flavour, "r", std::move(leaves));
}

Poset chain(std::size_t n) {
  Poset p;
  for (std::size_t i = 0; i <= n; ++i) p.elements.push_back(std::to_string(i));
  for (std::size_t i = 0; i <= n; ++i)
    for (std::size_t j = i + 1; j <= n; ++j)
      p.less.emplace_back(p.elements[i], p.elements[j]);
  return p;
}

Poset canonical(Poset p) {
  std::sort(p.elements.begin(), p.elements.end());
  std::sort(p.less.begin(), p.less.end());
  p.less.erase(std::unique(p.less.begin(), p.less.end()), p.less.end());
  return p;
}

std::string pair_name(const std::string& a, const std::string& b) {
  return "(" + a + "," + b + ")";
}

Poset poset_product(const Poset& p, const Poset& q) {
  std::set<std::pair<std::string, std::string>> lp(p.less.begin(), p.less.end());
  std::set<std::pair<std::string, std::string>> lq(q.less.begin(), q.less.end());
  auto leq = [](const auto& rel, const std::string& x, const std::string& y) {
    return x == y || rel.contains({x, y});
  };
  Poset out;
  for (const auto& a : p.elements)
    for (const auto& b : q.elements) out.elements.push_back(pair_name(a, b));
  for (const auto& a1 : p.elements)
    for (const auto& b1 : q.elements)
      for (const auto& a2 : p.elements)
        for (const auto& b2 : q.elements) {
          if (a1 == a2 && b1 == b2) continue;
          if (leq(lp, a1, a2) && leq(lq, b1, b2)) {
            out.less.emplace_back(pair_name(a1, b1), pair_name(a2, b2));
          }
        }
  return out;
}

BroadPoset embed_poset(const Poset& poset, Flavour flavour) {
  std::vector<NamedPair> pairs;
  for (const auto& [lower, upper] : poset.less) pairs.push_back({{lower}, upper});
  return generate_broad_poset(flavour, poset.elements, pairs);
}

Poset underlying_poset(const BroadPoset& poset) {
  Poset out;
  out.elements = poset.carrier();
  for (const auto& pair : poset.relation()) {
    if (pair.source.size() == 1) {
      out.less.emplace_back(poset.name(pair.source.front()), poset.name(pair.target));
    }
  }
  return out;
}

namespace {

void require_same_flavour(const BroadPoset& a, const BroadPoset& b) {
  if (a.flavour() != b.flavour()) {
    throw FlavourMismatch("operands have different flavours");
  }
}

/// Carrier A x B with a lookup from (i, j) to the sorted index.
struct PairCarrier {
  std::vector<std::string> names;
  std::vector<std::vector<Index>> at;

  PairCarrier(const BroadPoset& a, const BroadPoset& b) {
    std::vector<std::pair<std::string, std::pair<Index, Index>>> all;
    for (Index i = 0; i < a.size(); ++i)
      for (Index j = 0; j < b.size(); ++j)
        all.push_back({pair_name(a.name(i), b.name(j)), {i, j}});
    std::sort(all.begin(), all.end());
    at.assign(a.size(), std::vector<Index>(b.size(), 0));
    for (Index k = 0; k < all.size(); ++k) {
      names.push_back(all[k].first);
      at[all[k].second.first][all[k].second.second] = k;
    }
  }
};

std::vector<Word> sources_with_self(const BroadPoset& p, Index x) {
  auto s = p.sources(x);
  std::vector<Word> out(s.begin(), s.end());
  out.push_back(Word{x});
  return out;
}

}  // namespace

Product product(const BroadPoset& a, const BroadPoset& b) {
  require_same_flavour(a, b);
  const Flavour flavour = a.flavour();
  PairCarrier carrier(a, b);
  std::set<Pair> pairs;
  for (Index x = 0; x < a.size(); ++x) {
    auto below_x = sources_with_self(a, x);
    for (Index y = 0; y < b.size(); ++y) {
      auto below_y = sources_with_self(b, y);
      const Index target = carrier.at[x][y];
      for (const auto& u : below_x) {
        for (Word v : below_y) {
          if (u.size() != v.size()) continue;
          // Commutative words (stored sorted) are zipped in every order,
          // planar words only positionally.
          do {
            Word w;
            for (std::size_t k = 0; k < u.size(); ++k) w.push_back(carrier.at[u[k]][v[k]]);
            normalize(flavour, w);
            if (!(w.size() == 1 && w.front() == target)) pairs.insert({w, target});
          } while (flavour == Flavour::commutative &&
                   std::next_permutation(v.begin(), v.end()));
        }
      }
    }
  }
  auto object = std::make_shared<const BroadPoset>(BroadPoset::from_indexed(
      flavour, carrier.names, std::vector<Pair>(pairs.begin(), pairs.end())));
  std::vector<Index> first(object->size()), second(object->size());
  for (Index x = 0; x < a.size(); ++x)
    for (Index y = 0; y < b.size(); ++y) {
      first[carrier.at[x][y]] = x;
      second[carrier.at[x][y]] = y;
    }
  return Product{*object,
                 MonotoneMap(object, std::make_shared<const BroadPoset>(a), first),
                 MonotoneMap(object, std::make_shared<const BroadPoset>(b), second)};
}

Pushout pushout(const MonotoneMap& f, const MonotoneMap& g,
                ClosureOptions options) {
  if (!(f.domain() == g.domain())) {
    throw DomainMismatch("pushout legs must share their domain");
  }
  const BroadPoset& a = f.codomain();
  const BroadPoset& b = g.codomain();
  require_same_flavour(a, b);
  const std::size_t na = a.size();
  const std::size_t total = na + b.size();

  std::vector<Index> parent(total);
  std::iota(parent.begin(), parent.end(), Index{0});
  auto find = [&](Index x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (Index c = 0; c < f.domain().size(); ++c) {
    Index x = find(f(c));
    Index y = find(static_cast<Index>(na + g(c)));
    if (x == y) continue;
    if (y < x) std::swap(x, y);
    parent[y] = x;  // A-side indices come first, so A names win.
  }

  std::map<Index, std::string> class_name;
  std::set<std::string> used;
  for (Index x = 0; x < total; ++x) {
    Index rep = find(x);
    if (rep != x || rep >= na) continue;
    class_name[rep] = a.name(rep);
    used.insert(a.name(rep));
  }
  for (Index x = static_cast<Index>(na); x < total; ++x) {
    Index rep = find(x);
    if (rep != x) continue;
    std::string name = b.name(x - static_cast<Index>(na));
    if (used.contains(name)) {
      for (std::size_t k = 1;; ++k) {
        std::string candidate = name + "_" + std::to_string(k);
        if (!used.contains(candidate) && !b.find(candidate)) {
          name = candidate;
          break;
        }
      }
    }
    used.insert(name);
    class_name[rep] = name;
  }

  std::vector<std::string> carrier(used.begin(), used.end());
  std::map<std::string, Index> position;
  for (Index k = 0; k < carrier.size(); ++k) position[carrier[k]] = k;
  std::vector<Index> image(total);
  for (Index x = 0; x < total; ++x) image[x] = position.at(class_name.at(find(x)));

  std::vector<Pair> generators;
  for (const auto& pair : a.relation()) {
    Pair p{{}, image[pair.target]};
    for (Index x : pair.source) p.source.push_back(image[x]);
    generators.push_back(std::move(p));
  }
  for (const auto& pair : b.relation()) {
    Pair p{{}, image[na + pair.target]};
    for (Index x : pair.source) p.source.push_back(image[na + x]);
    generators.push_back(std::move(p));
  }
  BroadPoset object =
      generate_indexed(a.flavour(), carrier, std::move(generators), options);
  if (!object.collapsed().empty()) {
    const auto& [lost, kept] = *object.collapsed().begin();
    throw CollapseError("pushout identifies '" + lost + "' with '" + kept +
                        "' beyond the set-level quotient");
  }
  auto shared = std::make_shared<const BroadPoset>(object);
  std::vector<Index> from_a(image.begin(), image.begin() + na);
  std::vector<Index> from_b(image.begin() + na, image.end());
  return Pushout{object, MonotoneMap(f.codomain_ptr(), shared, from_a),
                 MonotoneMap(g.codomain_ptr(), shared, from_b)};
}

BroadPoset tensor(const BroadPoset& a, const BroadPoset& b,
                  ClosureOptions options) {
  require_same_flavour(a, b);
  PairCarrier carrier(a, b);
  std::vector<Pair> generators;
  for (Index x = 0; x < a.size(); ++x) {
    for (const auto& pair : b.relation()) {
      Pair p{{}, carrier.at[x][pair.target]};
      for (Index y : pair.source) p.source.push_back(carrier.at[x][y]);
      generators.push_back(std::move(p));
    }
  }
  for (Index y = 0; y < b.size(); ++y) {
    for (const auto& pair : a.relation()) {
      Pair p{{}, carrier.at[pair.target][y]};
      for (Index x : pair.source) p.source.push_back(carrier.at[x][y]);
      generators.push_back(std::move(p));
    }
  }
  return generate_indexed(a.flavour(), carrier.names, std::move(generators),
                          options);
}

std::string hom_element_name(const MonotoneMap& f) {
  std::string out = "[";
  for (Index i = 0; i < f.images().size(); ++i) {
    if (i) out += ",";
    out += f.codomain().name(f(i));
  }
  return out + "]";
}

BroadPoset internal_hom(const BroadPoset& a, const BroadPoset& b,
                        EnumerationOptions options) {
  require_same_flavour(a, b);
  if (a.empty()) {
    throw ClosureOverflow(
        "internal hom out of the empty broad poset has an unbounded relation");
  }
  const Flavour flavour = a.flavour();
  auto maps = enumerate_monotone(a, b, options);

  std::vector<std::pair<std::string, std::size_t>> named;
  for (std::size_t k = 0; k < maps.size(); ++k) named.push_back({hom_element_name(maps[k]), k});
  std::sort(named.begin(), named.end());
  std::vector<std::string> carrier;
  std::vector<Index> slot(maps.size());
  for (Index k = 0; k < named.size(); ++k) {
    carrier.push_back(named[k].first);
    slot[named[k].second] = k;
  }

  const std::size_t longest = std::max<std::size_t>(1, b.max_source_length());
  const std::size_t h = maps.size();
  std::vector<Pair> pairs;
  std::vector<std::size_t> letters;
  // Walks all words of each length; commutative words only in sorted order.
  auto visit = [&](auto&& self, std::size_t length) -> void {
    if (letters.size() == length) {
      for (std::size_t target = 0; target < h; ++target) {
        if (length == 1 && letters.front() == target) continue;
        bool holds = true;
        for (Index x = 0; x < a.size() && holds; ++x) {
          Word w;
          for (std::size_t l : letters) w.push_back(maps[l](x));
          normalize(flavour, w);
          holds = b.relates(w, maps[target](x));
        }
        if (holds) {
          Pair p{{}, slot[target]};
          for (std::size_t l : letters) p.source.push_back(slot[l]);
          pairs.push_back(std::move(p));
        }
      }
      return;
    }
    std::size_t start = (flavour == Flavour::commutative && !letters.empty())
                            ? letters.back()
                            : 0;
    for (std::size_t l = start; l < h; ++l) {
      letters.push_back(l);
      self(self, length);
      letters.pop_back();
    }
  };
  for (std::size_t length = 0; length <= longest; ++length) visit(visit, length);
  return BroadPoset::from_indexed(flavour, std::move(carrier), std::move(pairs));
}

BroadPoset abelianize(const BroadPoset& planar, ClosureOptions options) {
  if (planar.flavour() != Flavour::planar) {
    throw FlavourMismatch("abelianization expects a planar broad poset");
  }
  if (!options.max_word_len) {
    options.max_word_len = std::max(planar.size(), planar.max_source_length());
  }
  return generate_indexed(Flavour::commutative, planar.carrier(),
                          planar.relation(), options);
}

BroadPoset forget_symmetry(const BroadPoset& commutative) {
  if (commutative.flavour() != Flavour::commutative) {
    throw FlavourMismatch("forgetting symmetry expects a commutative broad poset");
  }
  std::vector<Pair> pairs;
  for (const auto& pair : commutative.relation()) {
    Word w = pair.source;  // sorted, so this walks every distinct ordering
    do {
      pairs.push_back({w, pair.target});
    } while (std::next_permutation(w.begin(), w.end()));
  }
  return BroadPoset::from_indexed(Flavour::planar, commutative.carrier(),
                                  std::move(pairs));
}

}  // namespace dendro
