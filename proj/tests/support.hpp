#pragma once

#include <string>

#include "dendro/trees.hpp"

namespace test {

inline dendro::BroadPoset tree(const std::string& term,
                               dendro::Flavour flavour = dendro::Flavour::commutative) {
  return dendro::to_broad(dendro::parse_term(term), flavour);
}

inline dendro::NamedPair pair(std::vector<std::string> source, std::string target) {
  return {std::move(source), std::move(target)};
}

}  // namespace test
