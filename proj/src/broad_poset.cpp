#include "dendro/broad_poset.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

namespace dendro {

std::string_view to_string(Flavour flavour) {
  return flavour == Flavour::commutative ? "commutative" : "planar";
}

Flavour parse_flavour(std::string_view text) {
  if (text == "commutative") return Flavour::commutative;
  if (text == "planar") return Flavour::planar;
  throw IdentifierError("unknown flavour '" + std::string(text) + "'");
}

void normalize(Flavour flavour, Word& word) {
  if (flavour == Flavour::commutative) std::sort(word.begin(), word.end());
}

Word substitute(Flavour flavour, const Word& word, std::size_t position,
                const Word& replacement) {
  Word out;
  out.reserve(word.size() + replacement.size());
  out.insert(out.end(), word.begin(), word.begin() + position);
  out.insert(out.end(), replacement.begin(), replacement.end());
  out.insert(out.end(), word.begin() + position + 1, word.end());
  normalize(flavour, out);
  return out;
}

namespace {

std::vector<Pair> canonical_pairs(Flavour flavour, std::vector<Pair> pairs) {
  for (auto& p : pairs) normalize(flavour, p.source);
  std::erase_if(pairs, [](const Pair& p) {
    return p.source.size() == 1 && p.source.front() == p.target;
  });
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  return pairs;
}

}  // namespace

BroadPoset::BroadPoset() {
  static const auto empty = std::make_shared<const Data>();
  data_ = empty;
}

BroadPoset::BroadPoset(Flavour flavour, std::vector<std::string> carrier,
                       const std::vector<NamedPair>& relation) {
  auto data = std::make_shared<Data>();
  data->flavour = flavour;
  data->carrier = std::move(carrier);
  std::sort(data->carrier.begin(), data->carrier.end());
  if (auto dup = std::adjacent_find(data->carrier.begin(), data->carrier.end());
      dup != data->carrier.end()) {
    throw IdentifierError("duplicate carrier element '" + *dup + "'");
  }
  data_ = data;
  std::vector<Pair> pairs;
  pairs.reserve(relation.size());
  for (const auto& np : relation) {
    pairs.push_back({word(np.source), index(np.target)});
  }
  data->relation = canonical_pairs(flavour, std::move(pairs));
  data->build_index();
}

BroadPoset BroadPoset::from_indexed(Flavour flavour,
                                    std::vector<std::string> carrier,
                                    std::vector<Pair> relation) {
  auto data = std::make_shared<Data>();
  data->flavour = flavour;
  data->carrier = std::move(carrier);
  data->relation = canonical_pairs(flavour, std::move(relation));
  data->build_index();
  BroadPoset out;
  out.data_ = std::move(data);
  return out;
}

void BroadPoset::Data::build_index() {
  by_target.assign(carrier.size(), {});
  for (const auto& p : relation) by_target.at(p.target).push_back(p.source);
}

std::optional<Index> BroadPoset::find(std::string_view id) const {
  const auto& carrier = data_->carrier;
  auto it = std::lower_bound(carrier.begin(), carrier.end(), id);
  if (it == carrier.end() || *it != id) return std::nullopt;
  return static_cast<Index>(it - carrier.begin());
}

Index BroadPoset::index(std::string_view id) const {
  if (auto i = find(id)) return *i;
  throw IdentifierError("identifier '" + std::string(id) +
                        "' is not in the carrier");
}

Word BroadPoset::word(const std::vector<std::string>& ids) const {
  Word w;
  w.reserve(ids.size());
  for (const auto& id : ids) w.push_back(index(id));
  normalize(flavour(), w);
  return w;
}

std::span<const Word> BroadPoset::sources(Index target) const {
  return data_->by_target.at(target);
}

bool BroadPoset::relates(const Word& source, Index target) const {
  if (source.size() == 1 && source.front() == target) return true;
  const auto& s = data_->by_target.at(target);
  return std::binary_search(s.begin(), s.end(), source);
}

std::size_t BroadPoset::max_source_length() const noexcept {
  std::size_t n = 0;
  for (const auto& p : relation()) n = std::max(n, p.source.size());
  return n;
}

BroadPoset BroadPoset::with_collapsed(
    std::map<std::string, std::string> collapsed) const {
  auto data = std::make_shared<Data>(*data_);
  data->collapsed = std::move(collapsed);
  BroadPoset out;
  out.data_ = std::move(data);
  return out;
}

NamedPair BroadPoset::named(const Pair& pair) const {
  NamedPair np;
  for (Index i : pair.source) np.source.push_back(name(i));
  np.target = name(pair.target);
  return np;
}

std::vector<NamedPair> BroadPoset::named_relation() const {
  std::vector<NamedPair> out;
  out.reserve(relation().size());
  for (const auto& p : relation()) out.push_back(named(p));
  return out;
}

std::string BroadPoset::format(const Word& word) const {
  if (word.empty()) return "ε";
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i) out += "·";
    out += name(word[i]);
  }
  return out;
}

std::string BroadPoset::format(const Pair& pair) const {
  return format(pair.source) + " ≤ " + name(pair.target);
}

namespace {

std::vector<Pair> saturate(Flavour flavour, std::size_t carrier_size,
                           std::vector<Pair> generators, std::size_t bound) {
  // Pairs live in `seen`; everything else points into it.
  std::set<Pair> seen;
  std::deque<const Pair*> work;
  std::vector<std::vector<const Pair*>> by_target(carrier_size);
  // Finished pairs whose source mentions a given letter.
  std::vector<std::vector<const Pair*>> mentioning(carrier_size);

  auto add = [&](Pair p) {
    normalize(flavour, p.source);
    if (p.source.size() == 1 && p.source.front() == p.target) return;
    if (p.source.size() > bound) {
      throw ClosureOverflow("closure produced a word of length " +
                            std::to_string(p.source.size()) +
                            ", above the bound " + std::to_string(bound));
    }
    auto [it, fresh] = seen.insert(std::move(p));
    if (fresh) work.push_back(&*it);
  };

  for (auto& g : generators) add(std::move(g));
  while (!work.empty()) {
    const Pair& p = *work.front();
    work.pop_front();
    by_target[p.target].push_back(&p);
    for (std::size_t i = 0; i < p.source.size(); ++i) {
      if (i == 0 || p.source[i] != p.source[i - 1]) mentioning[p.source[i]].push_back(&p);
    }

    // p on the outside: replace one of its letters by something below it.
    for (std::size_t i = 0; i < p.source.size(); ++i) {
      const auto& below = by_target[p.source[i]];
      for (std::size_t k = 0; k < below.size(); ++k) {
        add({substitute(flavour, p.source, i, below[k]->source), p.target});
      }
    }
    // p on the inside: plug its source into earlier pairs mentioning p.target.
    const auto& outer = mentioning[p.target];
    for (std::size_t k = 0; k < outer.size(); ++k) {
      const Pair& q = *outer[k];
      for (std::size_t i = 0; i < q.source.size(); ++i) {
        if (q.source[i] != p.target) continue;
        add({substitute(flavour, q.source, i, p.source), q.target});
      }
    }
  }
  return {seen.begin(), seen.end()};
}

struct UnionFind {
  std::vector<Index> parent;
  explicit UnionFind(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), Index{0});
  }
  Index find(Index x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  // The smaller index always becomes the representative.
  void unite(Index a, Index b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);
    parent[b] = a;
  }
};

}  // namespace

BroadPoset generate_indexed(Flavour flavour, std::vector<std::string> carrier,
                            std::vector<Pair> generators,
                            ClosureOptions options) {
  const std::size_t n = carrier.size();
  for (const auto& g : generators) {
    bool bad = g.target >= n;
    for (Index i : g.source) bad = bad || i >= n;
    if (bad) throw IdentifierError("generator refers to an unknown element");
  }
  const std::size_t bound = options.max_word_len.value_or(std::max<std::size_t>(n, 1));
  if (bound == 0) throw ClosureOverflow("max_word_len must be at least 1");

  std::vector<Pair> closed = saturate(flavour, n, std::move(generators), bound);

  std::set<std::pair<Index, Index>> unary;
  for (const auto& p : closed) {
    if (p.source.size() == 1) unary.emplace(p.source.front(), p.target);
  }
  UnionFind classes(n);
  bool any_collapse = false;
  for (auto [a, b] : unary) {
    if (unary.contains({b, a})) {
      classes.unite(a, b);
      any_collapse = true;
    }
  }
  if (!any_collapse) {
    return BroadPoset::from_indexed(flavour, std::move(carrier), std::move(closed));
  }

  std::vector<Index> new_index(n, 0);
  std::vector<std::string> kept;
  std::map<std::string, std::string> collapsed;
  for (Index i = 0; i < n; ++i) {
    if (classes.find(i) == i) {
      new_index[i] = static_cast<Index>(kept.size());
      kept.push_back(carrier[i]);
    }
  }
  for (Index i = 0; i < n; ++i) {
    Index rep = classes.find(i);
    new_index[i] = new_index[rep];
    if (rep != i) collapsed[carrier[i]] = carrier[rep];
  }
  for (auto& p : closed) {
    for (auto& letter : p.source) letter = new_index[letter];
    p.target = new_index[p.target];
  }
  return BroadPoset::from_indexed(flavour, std::move(kept), std::move(closed))
      .with_collapsed(std::move(collapsed));
}

BroadPoset generate_broad_poset(Flavour flavour,
                                std::vector<std::string> carrier,
                                const std::vector<NamedPair>& generators,
                                ClosureOptions options) {
  // Reuse the constructor for identifier checks and canonical ordering.
  BroadPoset raw(flavour, std::move(carrier), generators);
  return generate_indexed(flavour, raw.carrier(), raw.relation(), options);
}

namespace {

constexpr std::size_t kMaxWitnesses = 16;

void note(ValidationReport& report, std::string text) {
  if (report.violations.size() < kMaxWitnesses) {
    report.violations.push_back(std::move(text));
  }
}

}  // namespace

ValidationReport validate(const BroadPoset& p) {
  ValidationReport report;
  for (const auto& pair : p.relation()) {
    for (std::size_t i = 0; i < pair.source.size(); ++i) {
      for (const auto& below : p.sources(pair.source[i])) {
        Word w = substitute(p.flavour(), pair.source, i, below);
        if (!p.relates(w, pair.target)) {
          report.transitive = false;
          note(report, "transitivity: " + p.format(Pair{w, pair.target}) +
                           " is missing (from " + p.format(pair) + " and " +
                           p.format(Pair{below, pair.source[i]}) + ")");
        }
      }
    }
  }

  for (const auto& pair : p.relation()) {
    if (pair.source.size() != 1) continue;
    Index a = pair.source.front();
    Index b = pair.target;
    if (a < b && p.relates(Word{b}, a)) {
      report.antisymmetric = false;
      note(report, "antisymmetry: (" + p.name(a) + ", " + p.name(b) +
                       ") holds in both directions");
    }
  }

  // Descendant preorder, closed transitively so that non-transitive input
  // is still judged on the preorder it generates.
  const std::size_t n = p.size();
  std::vector<std::vector<char>> below(n, std::vector<char>(n, 0));
  for (std::size_t i = 0; i < n; ++i) below[i][i] = 1;
  for (const auto& pair : p.relation()) {
    for (Index x : pair.source) below[x][pair.target] = 1;
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (below[i][k])
        for (std::size_t j = 0; j < n; ++j)
          if (below[k][j]) below[i][j] = 1;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (below[i][j] && below[j][i]) {
        report.stratified = false;
        note(report, "stratification: " + p.name(static_cast<Index>(i)) +
                         " and " + p.name(static_cast<Index>(j)) +
                         " are descendants of each other");
      }
    }
  }
  return report;
}

namespace {

bool leq_planar(const BroadPoset& p, const Word& lower, std::size_t at,
                const Word& upper, std::size_t j) {
  if (j == upper.size()) return at == lower.size();
  auto try_candidate = [&](std::span<const Index> c) {
    if (at + c.size() > lower.size()) return false;
    if (!std::equal(c.begin(), c.end(), lower.begin() + at)) return false;
    return leq_planar(p, lower, at + c.size(), upper, j + 1);
  };
  if (try_candidate({&upper[j], 1})) return true;
  for (const auto& c : p.sources(upper[j])) {
    if (try_candidate(c)) return true;
  }
  return false;
}

bool leq_commutative(const BroadPoset& p, std::vector<int>& remaining,
                     std::size_t left, const Word& upper, std::size_t j) {
  if (j == upper.size()) return left == 0;
  auto try_candidate = [&](std::span<const Index> c) {
    if (c.size() > left) return false;
    std::size_t taken = 0;
    bool fits = true;
    for (; taken < c.size(); ++taken) {
      if (remaining[c[taken]] == 0) {
        fits = false;
        break;
      }
      --remaining[c[taken]];
    }
    bool ok = fits && leq_commutative(p, remaining, left - c.size(), upper, j + 1);
    for (std::size_t k = 0; k < taken; ++k) ++remaining[c[k]];
    return ok;
  };
  if (try_candidate({&upper[j], 1})) return true;
  for (const auto& c : p.sources(upper[j])) {
    if (try_candidate(c)) return true;
  }
  return false;
}

}  // namespace

bool word_leq(const BroadPoset& p, const Word& lower, const Word& upper) {
  if (lower == upper) return true;
  if (upper.empty()) return false;
  if (p.flavour() == Flavour::planar) return leq_planar(p, lower, 0, upper, 0);
  std::vector<int> remaining(p.size(), 0);
  for (Index x : lower) ++remaining.at(x);
  return leq_commutative(p, remaining, lower.size(), upper, 0);
}

BroadPoset induced(const BroadPoset& p, const std::vector<std::string>& subset) {
  std::vector<std::string> kept = subset;
  std::sort(kept.begin(), kept.end());
  kept.erase(std::unique(kept.begin(), kept.end()), kept.end());
  constexpr Index kAbsent = static_cast<Index>(-1);
  std::vector<Index> new_index(p.size(), kAbsent);
  for (Index i = 0; i < kept.size(); ++i) new_index[p.index(kept[i])] = i;

  std::vector<Pair> pairs;
  for (const auto& pair : p.relation()) {
    if (new_index[pair.target] == kAbsent) continue;
    Pair q{{}, new_index[pair.target]};
    bool inside = true;
    for (Index x : pair.source) {
      if (new_index[x] == kAbsent) {
        inside = false;
        break;
      }
      q.source.push_back(new_index[x]);
    }
    if (inside) pairs.push_back(std::move(q));
  }
  return BroadPoset::from_indexed(p.flavour(), std::move(kept), std::move(pairs));
}

BroadPoset rename(const BroadPoset& p,
                  const std::map<std::string, std::string>& renaming) {
  auto apply = [&](const std::string& id) {
    auto it = renaming.find(id);
    return it == renaming.end() ? id : it->second;
  };
  std::vector<std::string> carrier;
  for (const auto& id : p.carrier()) carrier.push_back(apply(id));
  std::vector<NamedPair> pairs;
  for (auto np : p.named_relation()) {
    for (auto& x : np.source) x = apply(x);
    np.target = apply(np.target);
    pairs.push_back(std::move(np));
  }
  return BroadPoset(p.flavour(), std::move(carrier), pairs);
}

}  // namespace dendro
