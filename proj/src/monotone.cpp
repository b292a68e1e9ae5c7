#include "dendro/monotone.hpp"

#include <algorithm>
#include <functional>

namespace dendro {

MonotoneMap::MonotoneMap(std::shared_ptr<const BroadPoset> domain,
                         std::shared_ptr<const BroadPoset> codomain,
                         std::vector<Index> images)
    : domain_(std::move(domain)),
      codomain_(std::move(codomain)),
      images_(std::move(images)) {
  if (images_.size() != domain_->size()) {
    throw IdentifierError("assignment is not total on the domain");
  }
  for (Index i : images_) {
    if (i >= codomain_->size()) {
      throw IdentifierError("assignment leaves the codomain");
    }
  }
}

namespace {

std::vector<Index> resolve(const Assignment& assignment,
                           const BroadPoset& domain,
                           const BroadPoset& codomain) {
  if (domain.flavour() != codomain.flavour()) {
    throw FlavourMismatch("domain and codomain have different flavours");
  }
  std::vector<Index> images(domain.size());
  for (const auto& [from, to] : assignment) {
    images[domain.index(from)] = codomain.index(to);
  }
  for (Index i = 0; i < domain.size(); ++i) {
    if (!assignment.contains(domain.name(i))) {
      throw IdentifierError("no image given for '" + domain.name(i) + "'");
    }
  }
  return images;
}

}  // namespace

MonotoneMap MonotoneMap::make(const BroadPoset& domain,
                              const BroadPoset& codomain,
                              const Assignment& assignment) {
  auto images = resolve(assignment, domain, codomain);
  if (!is_monotone(images, domain, codomain)) {
    throw NotMonotone("assignment is not monotone");
  }
  return MonotoneMap(std::make_shared<const BroadPoset>(domain),
                     std::make_shared<const BroadPoset>(codomain),
                     std::move(images));
}

const std::string& MonotoneMap::operator()(const std::string& id) const {
  return codomain_->name(images_.at(domain_->index(id)));
}

Word MonotoneMap::apply(const Word& word) const {
  Word out;
  out.reserve(word.size());
  for (Index x : word) out.push_back(images_.at(x));
  normalize(codomain_->flavour(), out);
  return out;
}

Assignment MonotoneMap::assignment() const {
  Assignment out;
  for (Index i = 0; i < images_.size(); ++i) {
    out[domain_->name(i)] = codomain_->name(images_[i]);
  }
  return out;
}

bool MonotoneMap::injective() const {
  std::vector<Index> sorted = images_;
  std::sort(sorted.begin(), sorted.end());
  return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

bool MonotoneMap::surjective() const {
  std::vector<char> hit(codomain_->size(), 0);
  for (Index i : images_) hit[i] = 1;
  return std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; });
}

bool operator==(const MonotoneMap& a, const MonotoneMap& b) {
  return a.images_ == b.images_ && *a.domain_ == *b.domain_ &&
         *a.codomain_ == *b.codomain_;
}

bool is_monotone(const std::vector<Index>& images, const BroadPoset& domain,
                 const BroadPoset& codomain) {
  if (domain.flavour() != codomain.flavour()) {
    throw FlavourMismatch("domain and codomain have different flavours");
  }
  if (images.size() != domain.size()) {
    throw IdentifierError("assignment is not total on the domain");
  }
  for (Index i : images) {
    if (i >= codomain.size()) throw IdentifierError("assignment leaves the codomain");
  }
  for (const auto& pair : domain.relation()) {
    Word w;
    w.reserve(pair.source.size());
    for (Index x : pair.source) w.push_back(images[x]);
    normalize(codomain.flavour(), w);
    if (!codomain.relates(w, images[pair.target])) return false;
  }
  return true;
}

bool is_monotone(const Assignment& assignment, const BroadPoset& domain,
                 const BroadPoset& codomain) {
  return is_monotone(resolve(assignment, domain, codomain), domain, codomain);
}

namespace {

/// Backtracking over assignments in index order. Each domain pair is checked
/// as soon as the largest index it mentions has been assigned.
class Search {
 public:
  Search(const BroadPoset& domain, const BroadPoset& codomain)
      : domain_(domain), codomain_(codomain), due_(domain.size()) {
    for (std::size_t k = 0; k < domain.relation().size(); ++k) {
      const auto& pair = domain.relation()[k];
      Index last = pair.target;
      for (Index x : pair.source) last = std::max(last, x);
      due_[last].push_back(k);
    }
  }

  /// `emit` returns false to stop the search.
  void run(const std::function<bool(const std::vector<Index>&)>& emit,
           bool injective = false) {
    images_.assign(domain_.size(), 0);
    used_.assign(codomain_.size(), 0);
    injective_ = injective;
    emit_ = &emit;
    stopped_ = false;
    step(0);
  }

  /// Restricts the candidates of domain element i.
  std::function<bool(Index, Index)> allowed = [](Index, Index) { return true; };

 private:
  bool pairs_hold(Index i) const {
    for (std::size_t k : due_[i]) {
      const auto& pair = domain_.relation()[k];
      Word w;
      w.reserve(pair.source.size());
      for (Index x : pair.source) w.push_back(images_[x]);
      normalize(codomain_.flavour(), w);
      if (!codomain_.relates(w, images_[pair.target])) return false;
    }
    return true;
  }

  void step(Index i) {
    if (i == domain_.size()) {
      stopped_ = !(*emit_)(images_);
      return;
    }
    for (Index c = 0; c < codomain_.size() && !stopped_; ++c) {
      if (injective_ && used_[c]) continue;
      if (!allowed(i, c)) continue;
      images_[i] = c;
      if (!pairs_hold(i)) continue;
      used_[c] = 1;
      step(i + 1);
      used_[c] = 0;
    }
  }

  const BroadPoset& domain_;
  const BroadPoset& codomain_;
  std::vector<std::vector<std::size_t>> due_;
  std::vector<Index> images_;
  std::vector<char> used_;
  bool injective_ = false;
  bool stopped_ = false;
  const std::function<bool(const std::vector<Index>&)>* emit_ = nullptr;
};

void check_budget(const BroadPoset& domain, const BroadPoset& codomain,
                  std::size_t budget) {
  if (domain.flavour() != codomain.flavour()) {
    throw FlavourMismatch("domain and codomain have different flavours");
  }
  double total = 1;
  for (std::size_t i = 0; i < domain.size(); ++i) {
    total *= static_cast<double>(codomain.size());
    if (total > static_cast<double>(budget)) {
      throw BudgetExceeded("hom enumeration needs " +
                           std::to_string(codomain.size()) + "^" +
                           std::to_string(domain.size()) +
                           " candidate assignments, above the budget " +
                           std::to_string(budget));
    }
  }
}

}  // namespace

std::vector<MonotoneMap> enumerate_monotone(const BroadPoset& domain,
                                            const BroadPoset& codomain,
                                            EnumerationOptions options) {
  check_budget(domain, codomain, options.budget);
  auto dom = std::make_shared<const BroadPoset>(domain);
  auto cod = std::make_shared<const BroadPoset>(codomain);
  std::vector<MonotoneMap> out;
  Search search(domain, codomain);
  std::function<bool(const std::vector<Index>&)> emit =
      [&](const std::vector<Index>& images) {
        out.emplace_back(dom, cod, images);
        return true;
      };
  search.run(emit);
  return out;
}

std::size_t count_monotone(const BroadPoset& domain, const BroadPoset& codomain,
                           EnumerationOptions options) {
  check_budget(domain, codomain, options.budget);
  std::size_t count = 0;
  Search search(domain, codomain);
  std::function<bool(const std::vector<Index>&)> emit =
      [&](const std::vector<Index>&) {
        ++count;
        return true;
      };
  search.run(emit);
  return count;
}

MonotoneMap identity(std::shared_ptr<const BroadPoset> poset) {
  std::vector<Index> images(poset->size());
  for (Index i = 0; i < images.size(); ++i) images[i] = i;
  auto cod = poset;
  return MonotoneMap(std::move(poset), std::move(cod), std::move(images));
}

MonotoneMap identity(const BroadPoset& poset) {
  return identity(std::make_shared<const BroadPoset>(poset));
}

MonotoneMap compose(const MonotoneMap& g, const MonotoneMap& f) {
  if (!(f.codomain() == g.domain())) {
    throw DomainMismatch("cannot compose: codomain of the first map differs "
                         "from the domain of the second");
  }
  std::vector<Index> images(f.domain().size());
  for (Index i = 0; i < images.size(); ++i) images[i] = g(f(i));
  return MonotoneMap(f.domain_ptr(), g.codomain_ptr(), std::move(images));
}

bool is_isomorphism(const MonotoneMap& f) {
  const auto& a = f.domain();
  const auto& b = f.codomain();
  if (a.size() != b.size() || !f.injective()) return false;
  if (a.relation().size() != b.relation().size()) return false;
  // A bijection that maps every pair onto a pair and has equally many pairs
  // on both sides is onto the codomain relation, so its inverse is monotone.
  return is_monotone(f.images(), a, b);
}

namespace {

/// Per-element fingerprint preserved by every isomorphism.
std::vector<std::vector<std::size_t>> fingerprints(const BroadPoset& p) {
  std::size_t len = p.max_source_length() + 1;
  std::vector<std::vector<std::size_t>> out(p.size(),
                                            std::vector<std::size_t>(2 * len, 0));
  for (const auto& pair : p.relation()) {
    ++out[pair.target][pair.source.size()];
    for (Index x : pair.source) ++out[x][len + pair.source.size()];
  }
  return out;
}

template <typename Emit>
void search_isomorphisms(const BroadPoset& a, const BroadPoset& b, Emit&& emit) {
  if (a.flavour() != b.flavour() || a.size() != b.size() ||
      a.relation().size() != b.relation().size() ||
      a.max_source_length() != b.max_source_length()) {
    return;
  }
  auto fa = fingerprints(a);
  auto fb = fingerprints(b);
  auto sa = fa, sb = fb;
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  if (sa != sb) return;

  Search search(a, b);
  search.allowed = [&](Index i, Index c) { return fa[i] == fb[c]; };
  std::function<bool(const std::vector<Index>&)> sink =
      [&](const std::vector<Index>& images) { return emit(images); };
  search.run(sink, /*injective=*/true);
}

}  // namespace

std::optional<MonotoneMap> find_isomorphism(const BroadPoset& a,
                                            const BroadPoset& b) {
  std::optional<std::vector<Index>> found;
  search_isomorphisms(a, b, [&](const std::vector<Index>& images) {
    found = images;
    return false;
  });
  if (!found) return std::nullopt;
  return MonotoneMap(std::make_shared<const BroadPoset>(a),
                     std::make_shared<const BroadPoset>(b), std::move(*found));
}

std::size_t count_isomorphisms(const BroadPoset& a, const BroadPoset& b) {
  std::size_t count = 0;
  search_isomorphisms(a, b, [&](const std::vector<Index>&) {
    ++count;
    return true;
  });
  return count;
}

}  // namespace dendro
