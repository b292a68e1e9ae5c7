#include "dendro/serialize.hpp"

#include <memory>

namespace dendro {

Json to_json(const BroadPoset& poset) {
  Json relation = Json::array();
  for (const auto& pair : poset.named_relation()) {
    relation.push_back({{"source", pair.source}, {"target", pair.target}});
  }
  return {{"flavour", std::string(to_string(poset.flavour()))},
          {"carrier", poset.carrier()},
          {"relation", std::move(relation)}};
}

BroadPoset broad_poset_from_json(const Json& json) {
  try {
    Flavour flavour = parse_flavour(json.at("flavour").get<std::string>());
    auto carrier = json.at("carrier").get<std::vector<std::string>>();
    std::vector<NamedPair> pairs;
    for (const auto& item : json.at("relation")) {
      pairs.push_back({item.at("source").get<std::vector<std::string>>(),
                       item.at("target").get<std::string>()});
    }
    return BroadPoset(flavour, std::move(carrier), pairs);
  } catch (const Json::exception& e) {
    throw ParseError(std::string("malformed broad poset: ") + e.what(), 0);
  }
}

Json to_json(const MonotoneMap& map) {
  Json assignment = Json::object();
  for (const auto& id : map.domain().carrier()) assignment[id] = map(id);
  return {{"domain", to_json(map.domain())},
          {"codomain", to_json(map.codomain())},
          {"assignment", std::move(assignment)}};
}

MonotoneMap monotone_map_from_json(const Json& json) {
  BroadPoset domain = broad_poset_from_json(json.at("domain"));
  BroadPoset codomain = broad_poset_from_json(json.at("codomain"));
  Assignment assignment;
  try {
    assignment = json.at("assignment").get<Assignment>();
  } catch (const Json::exception& e) {
    throw ParseError(std::string("malformed assignment: ") + e.what(), 0);
  }
  return MonotoneMap::make(domain, codomain, assignment);
}

Json to_json(const ValidationReport& report) {
  return {{"ok", report.ok()},
          {"transitive", report.transitive},
          {"antisymmetric", report.antisymmetric},
          {"stratified", report.stratified},
          {"violations", report.violations}};
}

Json to_json(const DendroReport& report) {
  return {{"is_dendroidal", report.is_dendroidal},
          {"valid", report.valid},
          {"simple", report.simple},
          {"has_root", report.has_root},
          {"children_axiom", report.children_axiom},
          {"root", report.root ? Json(*report.root) : Json(nullptr)},
          {"violations", report.violations}};
}

Json to_json(const FaceKind& kind) {
  switch (kind.kind) {
    case FaceKind::Kind::inner:
      return {{"kind", "inner"}, {"edge", kind.edge}};
    case FaceKind::Kind::root:
      return {{"kind", "root"}, {"edge", kind.edge}};
    case FaceKind::Kind::outer:
      return {{"kind", "outer"},
              {"vertex", {{"source", kind.vertex.source}, {"target", kind.vertex.target}}}};
  }
  return {};
}

Json to_json(const Factorization& factorization) {
  Json degeneracies = Json::array();
  for (const auto& d : factorization.degeneracies) degeneracies.push_back(to_json(d));
  Json faces = Json::array();
  for (const auto& f : factorization.faces) faces.push_back(to_json(f));
  Json kinds = Json::array();
  for (MapKind k : factorization.kinds()) kinds.push_back(std::string(to_string(k)));
  return {{"degeneracies", std::move(degeneracies)},
          {"iso", to_json(factorization.iso)},
          {"faces", std::move(faces)},
          {"kinds", std::move(kinds)}};
}

Factorization factorization_from_json(const Json& json) {
  Factorization out{{}, monotone_map_from_json(json.at("iso")), {}};
  for (const auto& d : json.at("degeneracies")) {
    out.degeneracies.push_back(monotone_map_from_json(d));
  }
  for (const auto& f : json.at("faces")) out.faces.push_back(monotone_map_from_json(f));
  return out;
}

}  // namespace dendro
