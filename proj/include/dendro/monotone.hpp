#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "dendro/broad_poset.hpp"

namespace dendro {

/// Total assignment between carriers, identifier to identifier.
using Assignment = std::map<std::string, std::string>;

/// A function between two broad posets. The posets are shared immutable
/// values. Construction through `make` checks monotonicity; the unchecked
/// constructor is for callers that already know the map is monotone.
class MonotoneMap {
 public:
  MonotoneMap(std::shared_ptr<const BroadPoset> domain,
              std::shared_ptr<const BroadPoset> codomain,
              std::vector<Index> images);

  /// Throws IdentifierError, FlavourMismatch or NotMonotone.
  static MonotoneMap make(const BroadPoset& domain, const BroadPoset& codomain,
                          const Assignment& assignment);

  const BroadPoset& domain() const noexcept { return *domain_; }
  const BroadPoset& codomain() const noexcept { return *codomain_; }
  const std::shared_ptr<const BroadPoset>& domain_ptr() const noexcept { return domain_; }
  const std::shared_ptr<const BroadPoset>& codomain_ptr() const noexcept { return codomain_; }
  const std::vector<Index>& images() const noexcept { return images_; }

  Index operator()(Index x) const { return images_.at(x); }
  const std::string& operator()(const std::string& id) const;
  /// Letterwise image, canonicalised in the codomain.
  Word apply(const Word& word) const;
  Assignment assignment() const;

  bool injective() const;
  bool surjective() const;

  /// Pointwise equality with equal domain and codomain.
  friend bool operator==(const MonotoneMap& a, const MonotoneMap& b);

 private:
  std::shared_ptr<const BroadPoset> domain_;
  std::shared_ptr<const BroadPoset> codomain_;
  std::vector<Index> images_;
};

/// Checks that every domain pair lands on a codomain pair. Throws
/// FlavourMismatch or IdentifierError when the inputs do not fit together.
bool is_monotone(const Assignment& assignment, const BroadPoset& domain,
                 const BroadPoset& codomain);
bool is_monotone(const std::vector<Index>& images, const BroadPoset& domain,
                 const BroadPoset& codomain);

struct EnumerationOptions {
  /// Upper bound on |codomain|^|domain|.
  std::size_t budget = 10'000'000;
};

/// All monotone maps, in lexicographic order of image vectors.
std::vector<MonotoneMap> enumerate_monotone(const BroadPoset& domain,
                                            const BroadPoset& codomain,
                                            EnumerationOptions options = {});
/// Same count without materialising the maps.
std::size_t count_monotone(const BroadPoset& domain, const BroadPoset& codomain,
                           EnumerationOptions options = {});

MonotoneMap identity(const BroadPoset& poset);
MonotoneMap identity(std::shared_ptr<const BroadPoset> poset);

/// g after f. Throws DomainMismatch unless codomain(f) == domain(g).
MonotoneMap compose(const MonotoneMap& g, const MonotoneMap& f);

/// Bijective with monotone inverse.
bool is_isomorphism(const MonotoneMap& f);

/// Backtracking search over bijections, pruned by per-element invariants.
/// Returns the first isomorphism in lexicographic order, if any.
std::optional<MonotoneMap> find_isomorphism(const BroadPoset& a,
                                            const BroadPoset& b);
std::size_t count_isomorphisms(const BroadPoset& a, const BroadPoset& b);

}  // namespace dendro
