#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dendro/error.hpp"

namespace dendro {

/// Commutative words live in the free commutative monoid, planar words in
/// the free monoid.
enum class Flavour { commutative, planar };

std::string_view to_string(Flavour flavour);
/// Accepts "commutative" or "planar"; anything else is an IdentifierError.
Flavour parse_flavour(std::string_view text);

/// Position of an element in a carrier. Carriers are kept sorted by
/// identifier, so comparing indices compares identifiers.
using Index = std::uint32_t;

/// A word over a carrier. Commutative words are kept sorted.
using Word = std::vector<Index>;

struct Pair {
  Word source;
  Index target = 0;

  friend auto operator<=>(const Pair&, const Pair&) = default;
  friend bool operator==(const Pair&, const Pair&) = default;
};

/// Identifier-level pair used at API boundaries.
struct NamedPair {
  std::vector<std::string> source;
  std::string target;

  friend auto operator<=>(const NamedPair&, const NamedPair&) = default;
  friend bool operator==(const NamedPair&, const NamedPair&) = default;
};

/// Puts a word in canonical form for the flavour (sorts commutative words).
void normalize(Flavour flavour, Word& word);

/// Replaces the letter at `position` of `word` by `replacement`.
Word substitute(Flavour flavour, const Word& word, std::size_t position,
                const Word& replacement);

/// A finite broad relation on a finite carrier.
///
/// The carrier is stored sorted and duplicate free; reflexive pairs (a, a)
/// are implicit and never stored. Values are immutable once built. Library
/// operations only return broad posets, but the type itself can hold any
/// broad relation so that `validate` has something to inspect.
class BroadPoset {
 public:
  BroadPoset();

  /// Builds from identifiers. Sorts the carrier, canonicalises words, drops
  /// reflexive and duplicate pairs. Throws IdentifierError for letters or
  /// targets outside the carrier and for duplicate carrier entries.
  BroadPoset(Flavour flavour, std::vector<std::string> carrier,
             const std::vector<NamedPair>& relation);

  /// Index-level constructor. `carrier` must be sorted and unique; pairs are
  /// normalised as above.
  static BroadPoset from_indexed(Flavour flavour,
                                 std::vector<std::string> carrier,
                                 std::vector<Pair> relation);

  Flavour flavour() const noexcept { return data_->flavour; }
  std::size_t size() const noexcept { return data_->carrier.size(); }
  bool empty() const noexcept { return data_->carrier.empty(); }
  const std::vector<std::string>& carrier() const noexcept { return data_->carrier; }
  const std::string& name(Index i) const { return data_->carrier.at(i); }
  std::optional<Index> find(std::string_view id) const;
  /// Throws IdentifierError when `id` is not in the carrier.
  Index index(std::string_view id) const;
  Word word(const std::vector<std::string>& ids) const;

  /// Stored (non-reflexive) pairs in sorted order.
  const std::vector<Pair>& relation() const noexcept { return data_->relation; }
  /// Stored sources with the given target, sorted.
  std::span<const Word> sources(Index target) const;
  /// w <= a, counting the implicit reflexive pairs.
  bool relates(const Word& source, Index target) const;
  std::size_t max_source_length() const noexcept;

  /// Elements merged away when this value was generated, mapped to the
  /// representative that absorbed them.
  const std::map<std::string, std::string>& collapsed() const noexcept {
    return data_->collapsed;
  }
  BroadPoset with_collapsed(std::map<std::string, std::string> collapsed) const;

  std::vector<NamedPair> named_relation() const;
  NamedPair named(const Pair& pair) const;
  std::string format(const Word& word) const;
  std::string format(const Pair& pair) const;

  /// On-the-nose equality: flavour, carrier and stored relation.
  friend bool operator==(const BroadPoset& a, const BroadPoset& b) {
    return a.data_ == b.data_ ||
           (a.flavour() == b.flavour() && a.carrier() == b.carrier() &&
            a.relation() == b.relation());
  }

 private:
  // Shared between copies; never modified after construction.
  struct Data {
    Flavour flavour = Flavour::commutative;
    std::vector<std::string> carrier;
    std::vector<Pair> relation;
    std::vector<std::vector<Word>> by_target;
    std::map<std::string, std::string> collapsed;

    void build_index();
  };

  std::shared_ptr<const Data> data_;
};

/// Knobs for fixpoint saturation. An unset bound means |carrier|.
struct ClosureOptions {
  std::optional<std::size_t> max_word_len;
};

/// The broad poset generated by a broad relation: reflexive-transitive
/// closure followed by the quotient by mutual unary comparability. Each
/// class is represented by its least identifier; merged identifiers are
/// recorded in `collapsed()`.
BroadPoset generate_broad_poset(Flavour flavour,
                                std::vector<std::string> carrier,
                                const std::vector<NamedPair>& generators,
                                ClosureOptions options = {});

/// Index-level variant over an already sorted carrier.
BroadPoset generate_indexed(Flavour flavour, std::vector<std::string> carrier,
                            std::vector<Pair> generators,
                            ClosureOptions options = {});

/// Result of checking broad poset axioms on arbitrary relation data.
struct ValidationReport {
  bool transitive = true;
  bool antisymmetric = true;
  bool stratified = true;
  std::vector<std::string> violations;

  bool ok() const { return transitive && antisymmetric && stratified; }
};

ValidationReport validate(const BroadPoset& candidate);

/// The induced order on words: u <= v when v = v1...vn and u splits as
/// u1...un with each ui <= vi (reflexive pairs included). Commutative words
/// may be split in any order.
bool word_leq(const BroadPoset& poset, const Word& lower, const Word& upper);

/// Broad relation restricted to a subset of the carrier, given by
/// identifiers. Pairs survive when all their letters and the target do.
BroadPoset induced(const BroadPoset& poset,
                   const std::vector<std::string>& subset);

/// Relabels elements through `renaming` (identifiers not mentioned keep their
/// name). The renaming must be injective on the carrier.
BroadPoset rename(const BroadPoset& poset,
                  const std::map<std::string, std::string>& renaming);

}  // namespace dendro
