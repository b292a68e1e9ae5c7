#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dendro {

/// Category used by the command line front end to pick an exit code.
enum class ErrorCategory {
  semantic,  // not dendroidal, not monotone, not maximal, ...
  input,     // parse errors, unknown identifiers, bad flags
  resource,  // closure overflow, enumeration budget
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCategory category, const std::string& what)
      : std::runtime_error(what), category_(category) {}
  ErrorCategory category() const noexcept { return category_; }

 private:
  ErrorCategory category_;
};

#define DENDRO_DEFINE_ERROR(Name, Category)                              \
  class Name : public Error {                                            \
   public:                                                               \
    explicit Name(const std::string& what) : Error(Category, what) {}    \
  }

// Saturation produced a word longer than the configured bound.
DENDRO_DEFINE_ERROR(ClosureOverflow, ErrorCategory::resource);
DENDRO_DEFINE_ERROR(BudgetExceeded, ErrorCategory::resource);
DENDRO_DEFINE_ERROR(IdentifierError, ErrorCategory::input);
DENDRO_DEFINE_ERROR(FlavourMismatch, ErrorCategory::semantic);
// A pushout identified elements beyond the set-level quotient.
DENDRO_DEFINE_ERROR(CollapseError, ErrorCategory::semantic);
DENDRO_DEFINE_ERROR(NotDendroidal, ErrorCategory::semantic);
DENDRO_DEFINE_ERROR(NotMonotone, ErrorCategory::semantic);
DENDRO_DEFINE_ERROR(NoParent, ErrorCategory::semantic);
DENDRO_DEFINE_ERROR(NotALeaf, ErrorCategory::semantic);
DENDRO_DEFINE_ERROR(DuplicateEdge, ErrorCategory::input);
DENDRO_DEFINE_ERROR(NotMaximal, ErrorCategory::semantic);
DENDRO_DEFINE_ERROR(NotInnerEdge, ErrorCategory::semantic);
DENDRO_DEFINE_ERROR(NotOuterCluster, ErrorCategory::semantic);
DENDRO_DEFINE_ERROR(NoRootFace, ErrorCategory::semantic);
DENDRO_DEFINE_ERROR(NotUnaryVertex, ErrorCategory::semantic);
DENDRO_DEFINE_ERROR(DomainMismatch, ErrorCategory::semantic);
DENDRO_DEFINE_ERROR(GraftUndefined, ErrorCategory::semantic);

#undef DENDRO_DEFINE_ERROR

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(ErrorCategory::input,
              what + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace dendro
